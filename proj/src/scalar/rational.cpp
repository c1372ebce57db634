#include "qcrys/rational.hpp"

#include <cctype>
#include <stdexcept>

namespace qcrys {

Rational make_rational(long p, long s) {
  if (s == 0) throw std::domain_error("make_rational: zero denominator");
  Rational r(p, s);
  r.canonicalize();
  return r;
}

namespace {

bool is_integer_literal(std::string_view t) {
  if (!t.empty() && (t.front() == '-' || t.front() == '+')) t.remove_prefix(1);
  if (t.empty()) return false;
  for (char c : t)
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  return true;
}

Integer parse_integer(std::string_view t) {
  if (!t.empty() && t.front() == '+') t.remove_prefix(1);
  return Integer(std::string(t), 10);
}

}  // namespace

Rational parse_rational(std::string_view text) {
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.front()))) text.remove_prefix(1);
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.back()))) text.remove_suffix(1);
  const auto slash = text.find('/');
  const auto num_text = text.substr(0, slash);
  const auto den_text = slash == std::string_view::npos ? std::string_view("1") : text.substr(slash + 1);
  if (!is_integer_literal(num_text) || !is_integer_literal(den_text) ||
      den_text.front() == '-' || den_text.front() == '+')
    throw std::invalid_argument("not a rational of the form p/s: '" + std::string(text) + "'");
  Integer den = parse_integer(den_text);
  if (den == 0) throw std::invalid_argument("zero denominator in '" + std::string(text) + "'");
  Rational r(parse_integer(num_text), den);
  r.canonicalize();
  return r;
}

std::string to_string(const Rational& r) { return r.get_str(10); }

Rational pow(const Rational& r, long e) {
  if (e == 0) return Rational(1);
  if (r == 0) {
    if (e < 0) throw std::domain_error("pow: zero to a negative power");
    return Rational(0);
  }
  const unsigned long k = static_cast<unsigned long>(e < 0 ? -e : e);
  Integer num, den;
  mpz_pow_ui(num.get_mpz_t(), r.get_num_mpz_t(), k);
  mpz_pow_ui(den.get_mpz_t(), r.get_den_mpz_t(), k);
  Rational out = e < 0 ? Rational(den, num) : Rational(num, den);
  out.canonicalize();
  return out;
}

}  // namespace qcrys
