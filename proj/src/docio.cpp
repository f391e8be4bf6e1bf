#include "sgcat/docio.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

#include "json.hpp"

namespace sgcat {

using json = nlohmann::ordered_json;

namespace {

// ---- writing ------------------------------------------------------------------------------

json vec_json(const Field& K, const Vec& v) {
  json a = json::array();
  for (const auto& q : v) a.push_back(K.str(q));
  return a;
}

json mor_json(const Field& K, const Mor& m) {
  json a = json::array();
  for (size_t r = 0; r < m.dst.size(); ++r)
    for (size_t c = 0; c < m.src.size(); ++c)
      if (!m.at(r, c).empty() && !is_zero(m.at(r, c))) a.push_back({r, c, vec_json(K, m.at(r, c))});
  return a;
}

json labels_json(const Category& C, const Obj& A) {
  json a = json::array();
  for (int v : A) a.push_back(C.labels[v]);
  return a;
}

json category_json(const Category& C) {
  const Field& K = C.field;
  int n = C.n();
  json j;
  j["objects"] = C.labels;
  json hom = json::array(), id = json::array(), cmp = json::array();
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y)
      if (C.homdim(x, y)) hom.push_back({C.labels[x], C.labels[y], C.homdim(x, y)});
  for (int x = 0; x < n; ++x)
    if (C.homdim(x, x)) id.push_back({C.labels[x], vec_json(K, C.ident[x])});
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y)
      for (int z = 0; z < n; ++z) {
        json cell = json::array();
        for (int i = 0; i < C.homdim(x, y); ++i)
          for (int k = 0; k < C.homdim(y, z); ++k) {
            const Vec& v = C.cst(x, y, z, i, k);
            if (!v.empty() && !is_zero(v)) cell.push_back({i, k, vec_json(K, v)});
          }
        if (!cell.empty()) cmp.push_back({C.labels[x], C.labels[y], C.labels[z], cell});
      }
  j["hom"] = hom;
  j["identity"] = id;
  j["compose"] = cmp;
  return j;
}

// ---- reading ------------------------------------------------------------------------------

struct Reader {
  const Field* K = nullptr;

  static const json& get(const json& j, const std::string& key, const std::string& path) {
    if (!j.is_object() || !j.contains(key)) throw DocError(path, "missing key '" + key + "'");
    return j.at(key);
  }
  static const json& arr(const json& j, const std::string& path) {
    if (!j.is_array()) throw DocError(path, "array expected");
    return j;
  }
  static int integer(const json& j, const std::string& path) {
    if (!j.is_number_integer()) throw DocError(path, "integer expected");
    return j.get<int>();
  }
  static std::string str(const json& j, const std::string& path) {
    if (!j.is_string()) throw DocError(path, "string expected");
    return j.get<std::string>();
  }
  static int label(const Category& C, const json& j, const std::string& path) {
    std::string s = str(j, path);
    int v = C.index_of(s);
    if (v < 0) throw DocError(path, "unknown object '" + s + "'");
    return v;
  }
  static Obj labels(const Category& C, const json& j, const std::string& path) {
    Obj r;
    arr(j, path);
    for (size_t i = 0; i < j.size(); ++i) r.push_back(label(C, j[i], path + "[" + std::to_string(i) + "]"));
    return r;
  }
  Vec vec(const json& j, size_t len, const std::string& path, const std::string& cell) const {
    arr(j, path);
    if (j.size() != len)
      throw DocError(path, "coefficient vector of length " + std::to_string(j.size()) + " in cell " + cell +
                               ", expected " + std::to_string(len));
    Vec v;
    for (size_t i = 0; i < j.size(); ++i) {
      std::string s = str(j[i], path + "[" + std::to_string(i) + "]");
      try {
        v.push_back(K->parse_scalar(s));
      } catch (const std::invalid_argument& e) {
        throw DocError(path + "[" + std::to_string(i) + "]", e.what());
      }
    }
    return v;
  }
  Mor mor(const Category& C, const json& j, const Obj& src, const Obj& dst, const std::string& path,
          const std::string& cell) const {
    Mor m(src, dst);
    arr(j, path);
    for (size_t e = 0; e < j.size(); ++e) {
      std::string p = path + "[" + std::to_string(e) + "]";
      const json& t = arr(j[e], p);
      if (t.size() != 3) throw DocError(p, "block triple [row, col, coefficients] expected");
      int r = integer(t[0], p + "[0]"), c = integer(t[1], p + "[1]");
      if (r < 0 || r >= int(dst.size()) || c < 0 || c >= int(src.size()))
        throw DocError(p, "block index out of range in cell " + cell);
      m.at(r, c) = vec(t[2], C.homdim(src[c], dst[r]), p + "[2]", cell);
    }
    return m;
  }

  Category category(const json& j, const std::string& path) const {
    Category C;
    C.field = *K;
    const json& objs = arr(get(j, "objects", path), path + ".objects");
    for (size_t i = 0; i < objs.size(); ++i) {
      std::string l = str(objs[i], path + ".objects[" + std::to_string(i) + "]");
      if (C.index_of(l) >= 0) throw DocError(path + ".objects[" + std::to_string(i) + "]", "duplicate label '" + l + "'");
      C.labels.push_back(l);
    }
    int n = C.n();
    C.hd.assign(size_t(n) * n, 0);
    const json& hom = arr(get(j, "hom", path), path + ".hom");
    for (size_t i = 0; i < hom.size(); ++i) {
      std::string p = path + ".hom[" + std::to_string(i) + "]";
      if (!hom[i].is_array() || hom[i].size() != 3) throw DocError(p, "[X, Y, dim] expected");
      int x = label(C, hom[i][0], p + "[0]"), y = label(C, hom[i][1], p + "[1]"), d = integer(hom[i][2], p + "[2]");
      if (d < 0) throw DocError(p, "negative dimension");
      C.hd[size_t(x) * n + y] = d;
    }
    C.allocate();
    for (int x = 0; x < n; ++x) C.ident[x] = Vec(C.homdim(x, x));
    const json& id = arr(get(j, "identity", path), path + ".identity");
    for (size_t i = 0; i < id.size(); ++i) {
      std::string p = path + ".identity[" + std::to_string(i) + "]";
      if (!id[i].is_array() || id[i].size() != 2) throw DocError(p, "[X, coefficients] expected");
      int x = label(C, id[i][0], p + "[0]");
      C.ident[x] = vec(id[i][1], C.homdim(x, x), p + "[1]", "(" + C.labels[x] + ")");
    }
    for (int x = 0; x < n; ++x)
      for (int y = 0; y < n; ++y)
        for (int z = 0; z < n; ++z)
          for (auto& v : C.cmp[(size_t(x) * n + y) * n + z]) v = Vec(C.homdim(x, z));
    const json& cmp = arr(get(j, "compose", path), path + ".compose");
    for (size_t i = 0; i < cmp.size(); ++i) {
      std::string p = path + ".compose[" + std::to_string(i) + "]";
      if (!cmp[i].is_array() || cmp[i].size() != 4) throw DocError(p, "[X, Y, Z, entries] expected");
      int x = label(C, cmp[i][0], p + "[0]"), y = label(C, cmp[i][1], p + "[1]"), z = label(C, cmp[i][2], p + "[2]");
      std::string cell = "(" + C.labels[x] + "," + C.labels[y] + "," + C.labels[z] + ")";
      const json& ent = arr(cmp[i][3], p + "[3]");
      for (size_t e = 0; e < ent.size(); ++e) {
        std::string q = p + "[3][" + std::to_string(e) + "]";
        if (!ent[e].is_array() || ent[e].size() != 3) throw DocError(q, "[i, j, coefficients] expected");
        int a = integer(ent[e][0], q + "[0]"), b = integer(ent[e][1], q + "[1]");
        if (a < 0 || a >= C.homdim(x, y) || b < 0 || b >= C.homdim(y, z))
          throw DocError(q, "basis index out of range in cell " + cell);
        C.cmp[(size_t(x) * n + y) * n + z][size_t(b) * C.homdim(x, y) + a] = vec(ent[e][2], C.homdim(x, z), q + "[2]", cell);
      }
    }
    return C;
  }
};

std::string triple_cell(const Category& C, std::initializer_list<int> xs) {
  std::string s = "(";
  bool first = true;
  for (int x : xs) {
    if (!first) s += ",";
    s += C.labels[x];
    first = false;
  }
  return s + ")";
}

}  // namespace

std::string store_document(const Document& d) {
  const Semigroup& S = d.S;
  const Category& C = S.C;
  const Field& K = C.field;
  int n = C.n();
  json j;
  j["format"] = 1;
  j["field"] = K.name();
  j["category"] = category_json(C);
  json sg, tens = json::array(), mt = json::array(), as = json::array();
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y)
      if (!S.t(x, y).empty()) tens.push_back({C.labels[x], C.labels[y], labels_json(C, S.t(x, y))});
  for (int x = 0; x < n; ++x)
    for (int x2 = 0; x2 < n; ++x2)
      for (int y = 0; y < n; ++y)
        for (int y2 = 0; y2 < n; ++y2) {
          json cell = json::array();
          for (int i = 0; i < C.homdim(x, x2); ++i)
            for (int k = 0; k < C.homdim(y, y2); ++k) {
              json m = mor_json(K, S.mtab(x, x2, y, y2, i, k));
              if (!m.empty()) cell.push_back({i, k, m});
            }
          if (!cell.empty()) mt.push_back({C.labels[x], C.labels[x2], C.labels[y], C.labels[y2], cell});
        }
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y)
      for (int z = 0; z < n; ++z) {
        json m = mor_json(K, S.a(x, y, z));
        if (!m.empty()) as.push_back({C.labels[x], C.labels[y], C.labels[z], m});
      }
  sg["tensor"] = tens;
  sg["tensor_mor"] = mt;
  sg["assoc"] = as;
  if (S.braid) {
    json br = json::array();
    for (int x = 0; x < n; ++x)
      for (int y = 0; y < n; ++y) {
        json m = mor_json(K, (*S.braid)[size_t(x) * n + y]);
        if (!m.empty()) br.push_back({C.labels[x], C.labels[y], m});
      }
    sg["braid"] = br;
  }
  j["semigroup"] = sg;
  if (d.module) {
    const ModuleCat& Mo = *d.module;
    const Category& TC = Mo.T.C;
    Category M = Mo.base();
    int m = Mo.m(), nS = Mo.nS;
    json md, act = json::array(), amt = json::array(), mult = json::array();
    md["category"] = category_json(M);
    for (int f = 0; f < nS; ++f)
      for (int x = 0; x < m; ++x)
        if (!Mo.act(f, x).empty()) act.push_back({C.labels[f], M.labels[x], labels_json(M, Mo.act(f, x))});
    for (int f = 0; f < nS; ++f)
      for (int f2 = 0; f2 < nS; ++f2)
        for (int x = 0; x < m; ++x)
          for (int x2 = 0; x2 < m; ++x2) {
            json cell = json::array();
            for (int i = 0; i < C.homdim(f, f2); ++i)
              for (int k = 0; k < M.homdim(x, x2); ++k) {
                json mj = mor_json(K, Mo.T.mtab(f, f2, Mo.idx(x), Mo.idx(x2), i, k));
                if (!mj.empty()) cell.push_back({i, k, mj});
              }
            if (!cell.empty()) amt.push_back({C.labels[f], C.labels[f2], M.labels[x], M.labels[x2], cell});
          }
    for (int g = 0; g < nS; ++g)
      for (int f = 0; f < nS; ++f)
        for (int x = 0; x < m; ++x) {
          json mj = mor_json(K, Mo.T.a(g, f, Mo.idx(x)));
          if (!mj.empty()) mult.push_back({C.labels[g], C.labels[f], M.labels[x], mj});
        }
    (void)TC;
    md["act"] = act;
    md["act_mor"] = amt;
    md["mult"] = mult;
    j["module"] = md;
  }
  if (!d.metadata.empty()) j["metadata"] = d.metadata;
  return j.dump(1) + "\n";
}

Document load_document(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& e) {
    throw DocError("byte " + std::to_string(e.byte), e.what());
  }
  if (!j.is_object()) throw DocError("$", "object expected");
  if (!j.contains("format") || !j["format"].is_number_integer() || j["format"].get<int>() != 1)
    throw DocError("format", "unsupported or missing format (expected 1)");
  Field K;
  try {
    K = Field::parse(Reader::str(Reader::get(j, "field", "$"), "field"));
  } catch (const std::invalid_argument& e) {
    throw DocError("field", e.what());
  }
  Reader rd;
  rd.K = &K;
  Document d;
  Semigroup& S = d.S;
  S.C = rd.category(Reader::get(j, "category", "$"), "category");
  const Category& C = S.C;
  int n = C.n();
  const json& sg = Reader::get(j, "semigroup", "$");
  S.tens.assign(size_t(n) * n, Obj{});
  const json& tens = Reader::arr(Reader::get(sg, "tensor", "semigroup"), "semigroup.tensor");
  for (size_t i = 0; i < tens.size(); ++i) {
    std::string p = "semigroup.tensor[" + std::to_string(i) + "]";
    if (!tens[i].is_array() || tens[i].size() != 3) throw DocError(p, "[X, Y, [summands]] expected");
    int x = Reader::label(C, tens[i][0], p + "[0]"), y = Reader::label(C, tens[i][1], p + "[1]");
    S.tens[size_t(x) * n + y] = Reader::labels(C, tens[i][2], p + "[2]");
  }
  S.allocate();
  for (int x = 0; x < n; ++x)
    for (int x2 = 0; x2 < n; ++x2)
      for (int y = 0; y < n; ++y)
        for (int y2 = 0; y2 < n; ++y2)
          for (auto& m : S.mt[((size_t(x) * n + x2) * n + y) * n + y2]) m = Mor(S.t(x, y), S.t(x2, y2));
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y)
      for (int z = 0; z < n; ++z)
        S.assoc[(size_t(x) * n + y) * n + z] = Mor(tensor_obj(S, S.t(x, y), {z}), tensor_obj(S, {x}, S.t(y, z)));
  const json& mt = Reader::arr(Reader::get(sg, "tensor_mor", "semigroup"), "semigroup.tensor_mor");
  for (size_t i = 0; i < mt.size(); ++i) {
    std::string p = "semigroup.tensor_mor[" + std::to_string(i) + "]";
    if (!mt[i].is_array() || mt[i].size() != 5) throw DocError(p, "[X, X', Y, Y', entries] expected");
    int x = Reader::label(C, mt[i][0], p + "[0]"), x2 = Reader::label(C, mt[i][1], p + "[1]");
    int y = Reader::label(C, mt[i][2], p + "[2]"), y2 = Reader::label(C, mt[i][3], p + "[3]");
    std::string cell = triple_cell(C, {x, x2, y, y2});
    const json& ent = Reader::arr(mt[i][4], p + "[4]");
    for (size_t e = 0; e < ent.size(); ++e) {
      std::string q = p + "[4][" + std::to_string(e) + "]";
      if (!ent[e].is_array() || ent[e].size() != 3) throw DocError(q, "[i, j, blocks] expected");
      int a = Reader::integer(ent[e][0], q + "[0]"), b = Reader::integer(ent[e][1], q + "[1]");
      if (a < 0 || a >= C.homdim(x, x2) || b < 0 || b >= C.homdim(y, y2))
        throw DocError(q, "basis index out of range in cell " + cell);
      S.mt[((size_t(x) * n + x2) * n + y) * n + y2][size_t(a) * C.homdim(y, y2) + b] =
          rd.mor(C, ent[e][2], S.t(x, y), S.t(x2, y2), q + "[2]", cell);
    }
  }
  const json& as = Reader::arr(Reader::get(sg, "assoc", "semigroup"), "semigroup.assoc");
  for (size_t i = 0; i < as.size(); ++i) {
    std::string p = "semigroup.assoc[" + std::to_string(i) + "]";
    if (!as[i].is_array() || as[i].size() != 4) throw DocError(p, "[X, Y, Z, blocks] expected");
    int x = Reader::label(C, as[i][0], p + "[0]"), y = Reader::label(C, as[i][1], p + "[1]"),
        z = Reader::label(C, as[i][2], p + "[2]");
    Mor& m = S.assoc[(size_t(x) * n + y) * n + z];
    m = rd.mor(C, as[i][3], m.src, m.dst, p + "[3]", triple_cell(C, {x, y, z}));
  }
  if (sg.contains("braid")) {
    std::vector<Mor> B;
    for (int x = 0; x < n; ++x)
      for (int y = 0; y < n; ++y) B.emplace_back(S.t(x, y), S.t(y, x));
    const json& br = Reader::arr(sg["braid"], "semigroup.braid");
    for (size_t i = 0; i < br.size(); ++i) {
      std::string p = "semigroup.braid[" + std::to_string(i) + "]";
      if (!br[i].is_array() || br[i].size() != 3) throw DocError(p, "[X, Y, blocks] expected");
      int x = Reader::label(C, br[i][0], p + "[0]"), y = Reader::label(C, br[i][1], p + "[1]");
      Mor& m = B[size_t(x) * n + y];
      m = rd.mor(C, br[i][2], m.src, m.dst, p + "[2]", triple_cell(C, {x, y}));
    }
    S.braid = std::move(B);
  }
  // a singular associator is left for the validator to report
  try {
    S.finalize();
  } catch (const std::invalid_argument&) {
    S.assoc_inv.clear();
  }
  if (j.contains("module")) {
    const json& md = j["module"];
    Category M = rd.category(Reader::get(md, "category", "module"), "module.category");
    int m = M.n();
    std::vector<Obj> act(size_t(n) * m);
    const json& aj = Reader::arr(Reader::get(md, "act", "module"), "module.act");
    for (size_t i = 0; i < aj.size(); ++i) {
      std::string p = "module.act[" + std::to_string(i) + "]";
      if (!aj[i].is_array() || aj[i].size() != 3) throw DocError(p, "[F, X, [summands]] expected");
      int f = Reader::label(C, aj[i][0], p + "[0]"), x = Reader::label(M, aj[i][1], p + "[1]");
      act[size_t(f) * m + x] = Reader::labels(M, aj[i][2], p + "[2]");
    }
    std::vector<std::vector<Mor>> amt(size_t(n) * n * m * m);
    for (int f = 0; f < n; ++f)
      for (int f2 = 0; f2 < n; ++f2)
        for (int x = 0; x < m; ++x)
          for (int x2 = 0; x2 < m; ++x2)
            amt[((size_t(f) * n + f2) * m + x) * m + x2].assign(size_t(C.homdim(f, f2)) * M.homdim(x, x2),
                                                                Mor(act[size_t(f) * m + x], act[size_t(f2) * m + x2]));
    const json& mj = Reader::arr(Reader::get(md, "act_mor", "module"), "module.act_mor");
    for (size_t i = 0; i < mj.size(); ++i) {
      std::string p = "module.act_mor[" + std::to_string(i) + "]";
      if (!mj[i].is_array() || mj[i].size() != 5) throw DocError(p, "[F, F', X, X', entries] expected");
      int f = Reader::label(C, mj[i][0], p + "[0]"), f2 = Reader::label(C, mj[i][1], p + "[1]");
      int x = Reader::label(M, mj[i][2], p + "[2]"), x2 = Reader::label(M, mj[i][3], p + "[3]");
      std::string cell = "(" + C.labels[f] + "," + C.labels[f2] + "," + M.labels[x] + "," + M.labels[x2] + ")";
      const json& ent = Reader::arr(mj[i][4], p + "[4]");
      for (size_t e = 0; e < ent.size(); ++e) {
        std::string q = p + "[4][" + std::to_string(e) + "]";
        if (!ent[e].is_array() || ent[e].size() != 3) throw DocError(q, "[i, j, blocks] expected");
        int a = Reader::integer(ent[e][0], q + "[0]"), b = Reader::integer(ent[e][1], q + "[1]");
        if (a < 0 || a >= C.homdim(f, f2) || b < 0 || b >= M.homdim(x, x2))
          throw DocError(q, "basis index out of range in cell " + cell);
        auto& slot = amt[((size_t(f) * n + f2) * m + x) * m + x2][size_t(a) * M.homdim(x, x2) + b];
        slot = rd.mor(M, ent[e][2], slot.src, slot.dst, q + "[2]", cell);
      }
    }
    std::vector<Mor> mult;
    for (int g = 0; g < n; ++g)
      for (int f = 0; f < n; ++f)
        for (int x = 0; x < m; ++x) {
          Obj src, dst;
          for (int y : S.t(g, f)) src = concat(src, act[size_t(y) * m + x]);
          for (int y : act[size_t(f) * m + x]) dst = concat(dst, act[size_t(g) * m + y]);
          mult.emplace_back(src, dst);
        }
    const json& mu = Reader::arr(Reader::get(md, "mult", "module"), "module.mult");
    for (size_t i = 0; i < mu.size(); ++i) {
      std::string p = "module.mult[" + std::to_string(i) + "]";
      if (!mu[i].is_array() || mu[i].size() != 4) throw DocError(p, "[G, F, X, blocks] expected");
      int g = Reader::label(C, mu[i][0], p + "[0]"), f = Reader::label(C, mu[i][1], p + "[1]"),
          x = Reader::label(M, mu[i][2], p + "[2]");
      Mor& mm = mult[(size_t(g) * n + f) * m + x];
      mm = rd.mor(M, mu[i][3], mm.src, mm.dst, p + "[3]", "(" + C.labels[g] + "," + C.labels[f] + "," + M.labels[x] + ")");
    }
    try {
      d.module = make_module(S, M, act, amt, mult, true);
    } catch (const std::invalid_argument&) {
      d.module = make_module(S, M, act, amt, mult, false);
    }
  }
  if (j.contains("metadata")) {
    if (!j["metadata"].is_object()) throw DocError("metadata", "object expected");
    for (auto& [k, v] : j["metadata"].items()) d.metadata[k] = v.is_string() ? v.get<std::string>() : v.dump();
  }
  return d;
}

Document load_document_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw DocError(path, "cannot open file");
  std::stringstream ss;
  ss << in.rdbuf();
  return load_document(ss.str());
}

void store_document_file(const Document& d, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw DocError(path, "cannot write file");
  out << store_document(d);
}

Algebra load_algebra(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& e) {
    throw DocError("byte " + std::to_string(e.byte), e.what());
  }
  Algebra A;
  try {
    A.field = Field::parse(Reader::str(Reader::get(j, "field", "$"), "field"));
  } catch (const std::invalid_argument& e) {
    throw DocError("field", e.what());
  }
  Reader rd;
  rd.K = &A.field;
  A.dim = Reader::integer(Reader::get(j, "dim", "$"), "dim");
  if (A.dim <= 0) throw DocError("dim", "positive dimension expected");
  size_t d = size_t(A.dim);
  A.mult.assign(d, std::vector<Vec>(d, Vec(d)));
  const json& mu = Reader::arr(Reader::get(j, "mult", "$"), "mult");
  for (size_t i = 0; i < mu.size(); ++i) {
    std::string p = "mult[" + std::to_string(i) + "]";
    if (!mu[i].is_array() || mu[i].size() != 3) throw DocError(p, "[i, j, coefficients] expected");
    int a = Reader::integer(mu[i][0], p + "[0]"), b = Reader::integer(mu[i][1], p + "[1]");
    if (a < 0 || a >= A.dim || b < 0 || b >= A.dim) throw DocError(p, "basis index out of range");
    A.mult[a][b] = rd.vec(mu[i][2], d, p + "[2]", "(" + std::to_string(a) + "," + std::to_string(b) + ")");
  }
  A.one = rd.vec(Reader::get(j, "one", "$"), d, "one", "unit");
  const json& id = Reader::arr(Reader::get(j, "idempotents", "$"), "idempotents");
  for (size_t i = 0; i < id.size(); ++i)
    A.idem.push_back(rd.vec(id[i], d, "idempotents[" + std::to_string(i) + "]", "idempotent"));
  return A;
}

namespace {

std::vector<std::string> split(const std::string& s, char c) {
  std::vector<std::string> out;
  std::string cur;
  for (char ch : s) {
    if (ch == c) {
      out.push_back(cur);
      cur.clear();
    } else if (ch != ' ') {
      cur += ch;
    }
  }
  out.push_back(cur);
  return out;
}

const std::string& param(const std::map<std::string, std::string>& p, const std::string& k) {
  auto it = p.find(k);
  if (it == p.end()) throw std::invalid_argument("generate: missing parameter '" + k + "'");
  return it->second;
}

}  // namespace

Document generate(const std::string& kind, const std::map<std::string, std::string>& params, const Field& field) {
  Document d;
  d.metadata["generator"] = kind;
  for (auto& [k, v] : params) d.metadata["param." + k] = v;
  if (kind == "zero") {
    d.S = gen_zero(field);
  } else if (kind == "linear_semigroup") {
    auto els = split(param(params, "elements"), ',');
    std::vector<std::vector<int>> table;
    for (const auto& row : split(param(params, "table"), ';')) {
      std::vector<int> r;
      for (const auto& e : split(row, ',')) {
        auto it = std::find(els.begin(), els.end(), e);
        if (it == els.end()) throw std::invalid_argument("generate: unknown element '" + e + "' in table");
        r.push_back(int(it - els.begin()));
      }
      table.push_back(r);
    }
    d.S = gen_linear_semigroup(field, els, table);
  } else if (kind == "bimodule_proj") {
    Algebra A;
    if (params.count("algebra_file")) {
      std::ifstream in(params.at("algebra_file"));
      if (!in) throw std::invalid_argument("generate: cannot open " + params.at("algebra_file"));
      std::stringstream ss;
      ss << in.rdbuf();
      A = load_algebra(ss.str());
    } else {
      const std::string& a = param(params, "algebra");
      if (a == "k") A = algebra_k(field);
      else if (a == "dual") A = algebra_dual_numbers(field);
      else if (a == "kxk") A = algebra_k_times_k(field);
      else throw std::invalid_argument("generate: unknown algebra '" + a + "' (k, dual, kxk)");
    }
    check_algebra(A);
    d.S = gen_bimodule_proj(A);
  } else if (kind == "group_proj") {
    int n = std::stoi(param(params, "cyclic"));
    if (n <= 0) throw std::invalid_argument("generate: group order must be positive");
    d.S = gen_group_proj(field, cyclic_group(n));
  } else {
    throw std::invalid_argument("generate: unknown kind '" + kind + "'");
  }
  return d;
}

}  // namespace sgcat
