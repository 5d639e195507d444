#include "kappa/arith.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <limits>

namespace kappa {

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

bool is_decimal_integer(std::string_view s) {
  if (!s.empty() && (s.front() == '-' || s.front() == '+')) s.remove_prefix(1);
  return !s.empty() &&
         std::all_of(s.begin(), s.end(), [](char c) { return std::isdigit(static_cast<unsigned char>(c)); });
}

Integer parse_integer(std::string_view s, std::string_view whole) {
  s = trim(s);
  if (!is_decimal_integer(s)) {
    throw InvalidArgument("malformed number '" + std::string(whole) + "'");
  }
  if (s.front() == '+') s.remove_prefix(1);
  return Integer(std::string(s), 10);
}

template <typename T, typename Parse>
std::vector<T> split_list(std::string_view text, Parse parse) {
  std::vector<T> out;
  if (trim(text).empty()) throw InvalidArgument("empty list");
  std::size_t start = 0;
  while (true) {
    const auto comma = text.find(',', start);
    const auto item = text.substr(start, comma == std::string_view::npos ? text.npos : comma - start);
    if (trim(item).empty()) throw InvalidArgument("empty entry in list '" + std::string(text) + "'");
    out.push_back(parse(item));
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  return out;
}

// Pollard rho (Brent variant is unnecessary at these sizes). n odd, composite.
Integer pollard_rho(const Integer& n) {
  for (unsigned long c = 1;; ++c) {
    Integer x = 2, y = 2, d = 1;
    auto f = [&](const Integer& v) {
      Integer r = v * v + c;
      mpz_mod(r.get_mpz_t(), r.get_mpz_t(), n.get_mpz_t());
      return r;
    };
    while (d == 1) {
      x = f(x);
      y = f(f(y));
      Integer diff = abs(x - y);
      mpz_gcd(d.get_mpz_t(), diff.get_mpz_t(), n.get_mpz_t());
    }
    if (d != n) return d;
  }
}

bool probably_prime(const Integer& n) { return mpz_probab_prime_p(n.get_mpz_t(), 30) > 0; }

Integer smallest_prime_of_odd(const Integer& n) {
  if (n == 1) return 0;
  if (probably_prime(n)) return n;
  const Integer d = pollard_rho(n);
  const Integer a = smallest_prime_of_odd(d);
  const Integer b = smallest_prime_of_odd(Integer(n / d));
  if (a == 0) return b;
  if (b == 0) return a;
  return std::min(a, b);
}

}  // namespace

std::string to_string(const Integer& z) { return z.get_str(10); }

std::string to_string(const Rational& q) {
  Rational c = q;
  c.canonicalize();
  if (c.get_den() == 1) return c.get_num().get_str(10);
  return c.get_num().get_str(10) + "/" + c.get_den().get_str(10);
}

Rational parse_rational(std::string_view text) {
  const auto body = trim(text);
  const auto slash = body.find('/');
  if (slash == std::string_view::npos) return Rational(parse_integer(body, text));
  const Integer num = parse_integer(body.substr(0, slash), text);
  const auto den_text = trim(body.substr(slash + 1));
  if (!den_text.empty() && (den_text.front() == '-' || den_text.front() == '+')) {
    throw InvalidArgument("malformed rational '" + std::string(text) + "'");
  }
  const Integer den = parse_integer(den_text, text);
  if (den == 0) throw InvalidArgument("zero denominator in '" + std::string(text) + "'");
  Rational q(num, den);
  q.canonicalize();
  return q;
}

std::vector<std::int64_t> parse_int_list(std::string_view text) {
  return split_list<std::int64_t>(text, [](std::string_view item) {
    const auto t = trim(item);
    std::int64_t v = 0;
    auto s = t;
    if (!s.empty() && s.front() == '+') s.remove_prefix(1);
    const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec != std::errc{} || ptr != s.data() + s.size() || s.empty()) {
      throw InvalidArgument("malformed integer '" + std::string(t) + "'");
    }
    return v;
  });
}

std::vector<Rational> parse_rational_list(std::string_view text) {
  return split_list<Rational>(text, [](std::string_view item) { return parse_rational(item); });
}

bool is_integral(const Rational& q) {
  Rational c = q;
  c.canonicalize();
  return c.get_den() == 1;
}

Integer gcd_abs(std::span<const Integer> values) {
  Integer g = 0;
  for (const auto& v : values) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), v.get_mpz_t());
  return g;
}

bool is_power_of_two(const Integer& z) {
  if (z <= 0) return false;
  return mpz_popcount(z.get_mpz_t()) == 1;
}

Integer smallest_odd_prime_factor(const Integer& z) {
  Integer n = abs(z);
  if (n == 0) return 0;
  const auto twos = mpz_scan1(n.get_mpz_t(), 0);
  mpz_fdiv_q_2exp(n.get_mpz_t(), n.get_mpz_t(), twos);
  if (n == 1) return 0;
  constexpr unsigned long kTrialBound = 1UL << 16;
  for (unsigned long p = 3; p < kTrialBound; p += 2) {
    if (mpz_divisible_ui_p(n.get_mpz_t(), p)) return p;
    if (Integer(p) * p > n) return n;
  }
  return smallest_prime_of_odd(n);
}

Integer ipow(const Integer& base, unsigned long exponent) {
  Integer r;
  mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), exponent);
  return r;
}

bool fits_int64(const Integer& z) {
  return z >= Integer(std::to_string(std::numeric_limits<std::int64_t>::min())) &&
         z <= Integer(std::to_string(std::numeric_limits<std::int64_t>::max()));
}

std::int64_t to_int64(const Integer& z) {
  if (!fits_int64(z)) throw DomainError("integer " + to_string(z) + " exceeds 64 bits");
  return std::stoll(z.get_str(10));
}

}  // namespace kappa
