#include "harmonic/rational.hpp"

#include <cstdio>
#include <ostream>
#include <stdexcept>

namespace harmonic {

namespace {

mpz_class to_mpz(std::int64_t v) {
  if constexpr (sizeof(long) == sizeof(std::int64_t)) {
    return mpz_class(static_cast<long>(v));
  } else {
    return mpz_class(std::to_string(v));
  }
}

}  // namespace

Rational::Rational(std::int64_t value) : value_(to_mpz(value)) {}

Rational::Rational(std::int64_t num, std::int64_t den) {
  if (den == 0) throw std::invalid_argument("zero denominator");
  value_ = mpq_class(to_mpz(num), to_mpz(den));
  value_.canonicalize();
}

Rational Rational::parse(std::string_view text) {
  const std::string s(text);
  if (s.empty()) throw std::invalid_argument("empty rational");
  const auto slash = s.find('/');
  auto check = [](const std::string& part, bool allow_sign) {
    std::size_t i = 0;
    if (allow_sign && !part.empty() && part[0] == '-') i = 1;
    if (i == part.size()) throw std::invalid_argument("malformed rational");
    for (; i < part.size(); ++i) {
      if (part[i] < '0' || part[i] > '9') throw std::invalid_argument("malformed rational");
    }
  };
  const std::string num = s.substr(0, slash);
  check(num, true);
  mpq_class v;
  if (slash == std::string::npos) {
    v = mpq_class(mpz_class(num));
  } else {
    const std::string den = s.substr(slash + 1);
    check(den, false);
    mpz_class d(den);
    if (d == 0) throw std::invalid_argument("zero denominator");
    v = mpq_class(mpz_class(num), d);
    v.canonicalize();
  }
  return Rational(std::move(v));
}

std::string Rational::str() const { return numerator() + "/" + denominator(); }

std::string Rational::decimal() const {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.15g", to_double());
  return buf;
}

Rational& Rational::operator+=(const Rational& o) {
  value_ += o.value_;
  return *this;
}

Rational& Rational::operator-=(const Rational& o) {
  value_ -= o.value_;
  return *this;
}

Rational& Rational::operator*=(const Rational& o) {
  value_ *= o.value_;
  return *this;
}

Rational& Rational::operator/=(const Rational& o) {
  if (o.sign() == 0) throw std::domain_error("division by zero");
  value_ /= o.value_;
  return *this;
}

Rational operator-(const Rational& a) { return Rational(mpq_class(-a.value_)); }

std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

}  // namespace harmonic
