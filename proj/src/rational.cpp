#include "zsum/rational.hpp"

#include <cctype>
#include <ostream>
#include <stdexcept>

namespace zsum {

namespace {

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s) {
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  }
  return true;
}

mpz_class parse_integer(std::string_view s, std::string_view whole) {
  if (!all_digits(s)) {
    throw std::invalid_argument("malformed rational literal: \"" + std::string(whole) + "\"");
  }
  return mpz_class(std::string(s), 10);
}

}  // namespace

Rational::Rational(long n, long d) : Rational(mpz_class(n), mpz_class(d)) {}

Rational::Rational(const mpz_class& n, const mpz_class& d) {
  if (sgn(d) == 0) throw std::domain_error("rational with zero denominator");
  v_ = mpq_class(n, d);
  v_.canonicalize();
}

Rational& Rational::operator/=(const Rational& o) {
  if (o.is_zero()) throw std::domain_error("rational division by zero");
  v_ /= o.v_;
  return *this;
}

Rational Rational::from_string(std::string_view s) {
  std::string_view rest = s;
  bool negative = false;
  if (!rest.empty() && (rest.front() == '+' || rest.front() == '-')) {
    negative = rest.front() == '-';
    rest.remove_prefix(1);
  }
  if (rest.empty()) {
    throw std::invalid_argument("malformed rational literal: \"" + std::string(s) + "\"");
  }

  Rational out;
  if (auto slash = rest.find('/'); slash != std::string_view::npos) {
    mpz_class num = parse_integer(rest.substr(0, slash), s);
    mpz_class den = parse_integer(rest.substr(slash + 1), s);
    if (sgn(den) == 0) throw std::domain_error("rational with zero denominator");
    out = Rational(num, den);
  } else if (auto dot = rest.find('.'); dot != std::string_view::npos) {
    std::string_view ip = rest.substr(0, dot);
    std::string_view fp = rest.substr(dot + 1);
    if (ip.empty() && fp.empty()) {
      throw std::invalid_argument("malformed rational literal: \"" + std::string(s) + "\"");
    }
    mpz_class num = ip.empty() ? mpz_class(0) : parse_integer(ip, s);
    mpz_class den(1);
    if (!fp.empty()) {
      mpz_class frac = parse_integer(fp, s);
      for (std::size_t i = 0; i < fp.size(); ++i) den *= 10;
      num = num * den + frac;
    }
    out = Rational(num, den);
  } else {
    out = Rational(parse_integer(rest, s), mpz_class(1));
  }
  return negative ? -out : out;
}

std::string Rational::to_string() const {
  if (is_integer()) return v_.get_num().get_str();
  return v_.get_num().get_str() + "/" + v_.get_den().get_str();
}

std::string Rational::to_decimal(int digits) const {
  if (digits < 0) throw std::invalid_argument("negative decimal precision");
  mpz_class scale(1);
  for (int i = 0; i < digits; ++i) scale *= 10;
  mpz_class n = ::abs(v_.get_num()) * scale;
  const mpz_class& d = v_.get_den();
  mpz_class q, r;
  mpz_fdiv_qr(q.get_mpz_t(), r.get_mpz_t(), n.get_mpz_t(), d.get_mpz_t());
  if (2 * r >= d) q += 1;  // ties away from zero (operands are non-negative here)

  std::string body = q.get_str();
  std::string result;
  if (digits == 0) {
    result = body;
  } else {
    if (body.size() <= static_cast<std::size_t>(digits)) {
      body.insert(0, static_cast<std::size_t>(digits) + 1 - body.size(), '0');
    }
    result = body.substr(0, body.size() - digits) + "." + body.substr(body.size() - digits);
  }
  if (sign() < 0 && q != 0) result.insert(0, 1, '-');
  return result;
}

std::ostream& operator<<(std::ostream& os, const Rational& r) {
  return os << r.to_string();
}

Rational abs(const Rational& r) { return r.sign() < 0 ? -r : r; }

}  // namespace zsum
