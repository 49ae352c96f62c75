#include "hada/rational.hpp"

#include <cctype>

#include "hada/errors.hpp"

namespace hada {
namespace {

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s) {
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  }
  return true;
}

}  // namespace

Rational parse_rational(std::string_view text) {
  std::string_view body = text;
  bool negative = false;
  if (!body.empty() && (body.front() == '-' || body.front() == '+')) {
    negative = body.front() == '-';
    body.remove_prefix(1);
  }
  const auto slash = body.find('/');
  const std::string_view num = body.substr(0, slash);
  const std::string_view den =
      slash == std::string_view::npos ? std::string_view{"1"} : body.substr(slash + 1);
  if (!all_digits(num) || !all_digits(den)) {
    throw ParseError("malformed rational '" + std::string(text) + "'");
  }
  Integer n(std::string(num), 10);
  Integer d(std::string(den), 10);
  if (d == 0) {
    throw ParseError("zero denominator in '" + std::string(text) + "'");
  }
  if (negative) n = -n;
  Rational r(n, d);
  r.canonicalize();
  return r;
}

std::string to_string(const Rational& value) {
  if (value.get_den() == 1) return value.get_num().get_str();
  return value.get_num().get_str() + "/" + value.get_den().get_str();
}

std::string to_string(const Integer& value) { return value.get_str(); }

std::vector<Integer> primitive_integer_vector(std::span<const Rational> values) {
  Integer lcm = 1;
  for (const auto& v : values) {
    mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), v.get_den_mpz_t());
  }
  std::vector<Integer> ints;
  ints.reserve(values.size());
  for (const auto& v : values) {
    ints.emplace_back(v.get_num() * (lcm / v.get_den()));
  }
  return primitive_integer_vector(std::span<const Integer>(ints));
}

std::vector<Integer> content_free(std::span<const Integer> values) {
  Integer g = 0;
  for (const auto& v : values) {
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), v.get_mpz_t());
    if (g == 1) break;
  }
  std::vector<Integer> out(values.begin(), values.end());
  if (g > 1) {
    for (auto& v : out) mpz_divexact(v.get_mpz_t(), v.get_mpz_t(), g.get_mpz_t());
  }
  return out;
}

std::vector<Integer> primitive_integer_vector(std::span<const Integer> values) {
  auto out = content_free(values);
  for (const auto& v : out) {
    if (v == 0) continue;
    if (v < 0) {
      for (auto& w : out) w = -w;
    }
    break;
  }
  return out;
}

}  // namespace hada
