#include "pke/rational.hpp"

#include <cctype>
#include <stdexcept>

namespace pke {
namespace {

Integer parse_integer(std::string_view text) {
  std::string s(text);
  std::size_t start = 0;
  if (!s.empty() && (s[0] == '-' || s[0] == '+')) start = 1;
  if (start == s.size()) throw std::invalid_argument("empty integer literal");
  for (std::size_t i = start; i < s.size(); ++i) {
    if (!std::isdigit(static_cast<unsigned char>(s[i]))) {
      throw std::invalid_argument("malformed integer literal '" + s + "'");
    }
  }
  if (s[0] == '+') s.erase(0, 1);
  return Integer(s, 10);
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

}  // namespace

Rational make_rational(std::string_view num, std::string_view den) {
  Integer n = parse_integer(trim(num));
  Integer d = parse_integer(trim(den));
  if (d == 0) throw std::invalid_argument("zero denominator");
  Rational r(n, d);
  r.canonicalize();
  return r;
}

Rational parse_rational(std::string_view text) {
  text = trim(text);
  auto slash = text.find('/');
  if (slash == std::string_view::npos) return make_rational(text);
  return make_rational(text.substr(0, slash), text.substr(slash + 1));
}

std::string to_string(const Rational& value) { return value.get_str(10); }

std::string numerator_string(const Rational& value) { return value.get_num().get_str(10); }

std::string denominator_string(const Rational& value) { return value.get_den().get_str(10); }

Rational pow(const Rational& base, unsigned exponent) {
  Integer num;
  Integer den;
  mpz_pow_ui(num.get_mpz_t(), base.get_num_mpz_t(), exponent);
  mpz_pow_ui(den.get_mpz_t(), base.get_den_mpz_t(), exponent);
  Rational r(num, den);
  r.canonicalize();
  return r;
}

std::optional<Rational> exact_root(const Rational& value, unsigned q) {
  if (q == 0) throw std::invalid_argument("exact_root: q must be positive");
  if (q == 1) return value;
  if (value < 0 && q % 2 == 0) return std::nullopt;
  Integer num = abs(value.get_num());
  Integer den = value.get_den();
  Integer num_root;
  Integer den_root;
  if (mpz_root(num_root.get_mpz_t(), num.get_mpz_t(), q) == 0) return std::nullopt;
  if (mpz_root(den_root.get_mpz_t(), den.get_mpz_t(), q) == 0) return std::nullopt;
  Rational r(num_root, den_root);
  r.canonicalize();
  if (value < 0) r = -r;
  return r;
}

int sign(const Rational& value) { return sgn(value); }

}  // namespace pke
