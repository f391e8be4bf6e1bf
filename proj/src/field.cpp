#include "sgcat/field.hpp"

#include <stdexcept>

namespace sgcat {

bool is_prime_number(long p) {
  if (p < 2) return false;
  for (long d = 2; d * d <= p; ++d)
    if (p % d == 0) return false;
  return true;
}

bool is_zero(const Vec& v) {
  for (const auto& x : v)
    if (sgn(x) != 0) return false;
  return true;
}

Field Field::prime(long p) {
  if (!is_prime_number(p)) throw std::invalid_argument("characteristic " + std::to_string(p) + " is not prime");
  Field f;
  f.kind_ = Kind::Prime;
  f.p_ = p;
  return f;
}

Field Field::parse(const std::string& name) {
  if (name == "Q" || name == "QQ") return rationals();
  if (name.size() > 2 && name.compare(0, 2, "GF") == 0) {
    long p = 0;
    try {
      size_t used = 0;
      p = std::stol(name.substr(2), &used);
      if (used != name.size() - 2) throw std::invalid_argument("");
    } catch (...) {
      throw std::invalid_argument("bad field name '" + name + "'");
    }
    return prime(p);
  }
  throw std::invalid_argument("bad field name '" + name + "'");
}

std::string Field::name() const {
  if (kind_ == Kind::Rational) return "Q";
  return "GF" + std::to_string(p_);
}

Q Field::reduce(const Q& a) const {
  mpz_class num = a.get_num(), den = a.get_den();
  mpz_class pp(p_);
  if (den != 1) {
    mpz_class d = den % pp;
    if (d == 0) throw std::domain_error("denominator divisible by the characteristic");
    mpz_class di;
    mpz_invert(di.get_mpz_t(), d.get_mpz_t(), pp.get_mpz_t());
    num *= di;
  }
  mpz_class r = num % pp;
  if (r < 0) r += pp;
  return Q(r);
}

Q Field::inv(const Q& a) const {
  if (is_zero(a)) throw std::domain_error("division by zero");
  if (kind_ == Kind::Rational) return 1 / a;
  mpz_class r, pp(p_), v = a.get_num();
  mpz_invert(r.get_mpz_t(), v.get_mpz_t(), pp.get_mpz_t());
  return Q(r);
}

Q Field::parse_scalar(const std::string& s) const {
  auto bad = [&]() { return std::invalid_argument("malformed scalar '" + s + "'"); };
  if (s.empty()) throw bad();
  auto slash = s.find('/');
  auto check_int = [&](const std::string& t) {
    size_t i = (t.size() && (t[0] == '-' || t[0] == '+')) ? 1 : 0;
    if (i >= t.size()) throw bad();
    for (; i < t.size(); ++i)
      if (t[i] < '0' || t[i] > '9') throw bad();
  };
  if (kind_ == Kind::Prime) {
    if (slash != std::string::npos) throw bad();
    check_int(s);
    return norm(Q(mpz_class(s[0] == '+' ? s.substr(1) : s)));
  }
  if (slash == std::string::npos) {
    check_int(s);
    return Q(mpz_class(s[0] == '+' ? s.substr(1) : s));
  }
  std::string n = s.substr(0, slash), d = s.substr(slash + 1);
  check_int(n);
  check_int(d);
  mpz_class dn(d[0] == '+' ? d.substr(1) : d);
  if (dn == 0) throw std::invalid_argument("zero denominator in '" + s + "'");
  Q q(mpz_class(n[0] == '+' ? n.substr(1) : n), dn);
  q.canonicalize();
  return q;
}

std::string Field::str(const Q& a) const { return a.get_str(); }

}  // namespace sgcat
