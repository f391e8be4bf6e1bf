#pragma once

#include <map>
#include <optional>
#include <stdexcept>
#include <string>

#include "sgcat/generators.hpp"
#include "sgcat/modcat.hpp"

namespace sgcat {

struct Document {
  Semigroup S;
  std::optional<ModuleCat> module;
  std::map<std::string, std::string> metadata;
};

// `where` is a JSON path ("semigroup.assoc[3]") or a byte offset
struct DocError : std::runtime_error {
  std::string where;
  DocError(const std::string& w, const std::string& msg) : std::runtime_error(w + ": " + msg), where(w) {}
};

Document load_document(const std::string& text);
Document load_document_file(const std::string& path);
std::string store_document(const Document& d);
void store_document_file(const Document& d, const std::string& path);

// {"field", "dim", "mult": [[i, j, [..]], ...], "one": [..], "idempotents": [[..], ..]}
Algebra load_algebra(const std::string& text);

// kind: zero | linear_semigroup | bimodule_proj | group_proj
//   linear_semigroup: params "elements" (comma separated) and "table" (rows by ';', entries by ',')
//   bimodule_proj:    params "algebra" = k | dual | kxk, or "algebra_file"
//   group_proj:       params "cyclic" = n  (field from `field`)
Document generate(const std::string& kind, const std::map<std::string, std::string>& params, const Field& field);

}  // namespace sgcat
