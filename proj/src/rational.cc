#include "plcube/rational.h"

#include <functional>
#include <ostream>
#include <string>

#include "plcube/errors.h"

namespace plcube {

Rational::Rational(long num, long den) {
  if (den == 0) throw DomainError("rational with zero denominator");
  q_ = mpq_class(num, den);
  q_.canonicalize();
}

Rational Rational::parse(std::string_view text) {
  std::string s(text);
  if (s.empty()) throw ParseError("empty rational");
  const auto slash = s.find('/');
  auto valid_int = [](const std::string& part, bool allow_sign) {
    if (part.empty()) return false;
    std::size_t i = 0;
    if (allow_sign && (part[0] == '-' || part[0] == '+')) i = 1;
    if (i == part.size()) return false;
    for (; i < part.size(); ++i) {
      if (part[i] < '0' || part[i] > '9') return false;
    }
    return true;
  };
  mpq_class q;
  if (slash == std::string::npos) {
    if (!valid_int(s, true)) throw ParseError("malformed rational '" + s + "'");
    q = mpq_class(mpz_class(s[0] == '+' ? s.substr(1) : s), 1);
  } else {
    const std::string n = s.substr(0, slash);
    const std::string d = s.substr(slash + 1);
    if (!valid_int(n, true) || !valid_int(d, false)) {
      throw ParseError("malformed rational '" + s + "'");
    }
    mpz_class den(d);
    if (den == 0) throw ParseError("zero denominator in '" + s + "'");
    q = mpq_class(mpz_class(n[0] == '+' ? n.substr(1) : n), den);
  }
  return Rational(std::move(q));
}

Rational& Rational::operator/=(const Rational& o) {
  if (o.is_zero()) throw DomainError("division by zero");
  q_ /= o.q_;
  return *this;
}

std::size_t Rational::hash() const {
  // Hash of the canonical decimal form; cheap enough for map keys.
  const std::size_t h1 = std::hash<std::string>{}(q_.get_num().get_str(16));
  const std::size_t h2 = std::hash<std::string>{}(q_.get_den().get_str(16));
  return h1 ^ (h2 + 0x9e3779b97f4a7c15ULL + (h1 << 6) + (h1 >> 2));
}

Rational abs(const Rational& r) { return r.sign() < 0 ? -r : r; }

Rational pow(const Rational& base, unsigned exponent) {
  Rational result(1);
  Rational b = base;
  while (exponent > 0) {
    if (exponent & 1U) result *= b;
    b *= b;
    exponent >>= 1U;
  }
  return result;
}

Rational floor_div(const Rational& a, const Rational& b) {
  const Rational q = a / b;
  mpz_class f;
  mpz_fdiv_q(f.get_mpz_t(), q.mpq().get_num_mpz_t(), q.mpq().get_den_mpz_t());
  return Rational(mpq_class(f));
}

Rational min(const Rational& a, const Rational& b) { return b < a ? b : a; }
Rational max(const Rational& a, const Rational& b) { return a < b ? b : a; }

std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

}  // namespace plcube
