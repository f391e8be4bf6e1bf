#pragma once

#include <gmpxx.h>

#include <string>
#include <vector>

namespace sgcat {

using Q = mpq_class;
using Vec = std::vector<Q>;

// Ground field: the rationals or a prime field GF(p).  GF(p) elements are
// kept as integers in [0,p) inside an mpq.
class Field {
 public:
  enum class Kind { Rational, Prime };

  Field() = default;
  static Field rationals() { return Field(); }
  static Field prime(long p);
  // "Q", "GF2", "GF101", ...
  static Field parse(const std::string& name);

  Kind kind() const { return kind_; }
  long p() const { return p_; }
  bool is_prime() const { return kind_ == Kind::Prime; }
  std::string name() const;

  Q norm(const Q& a) const {
    if (kind_ == Kind::Rational) return a;
    return reduce(a);
  }
  Q add(const Q& a, const Q& b) const { return norm(a + b); }
  Q sub(const Q& a, const Q& b) const { return norm(a - b); }
  Q mul(const Q& a, const Q& b) const { return norm(a * b); }
  Q neg(const Q& a) const { return norm(-a); }
  Q inv(const Q& a) const;
  Q div(const Q& a, const Q& b) const { return mul(a, inv(b)); }
  Q from_int(long v) const { return norm(Q(v)); }

  // text form: "a/b" for rationals, decimal residue for GF(p)
  Q parse_scalar(const std::string& s) const;
  std::string str(const Q& a) const;

  bool operator==(const Field& o) const { return kind_ == o.kind_ && p_ == o.p_; }
  bool operator!=(const Field& o) const { return !(*this == o); }

 private:
  Q reduce(const Q& a) const;
  Kind kind_ = Kind::Rational;
  long p_ = 0;
};

inline bool is_zero(const Q& a) { return sgn(a) == 0; }
bool is_zero(const Vec& v);

bool is_prime_number(long p);

}  // namespace sgcat
