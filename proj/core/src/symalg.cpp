#include "kappa/symalg.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>

namespace kappa {

std::vector<Integer> WeightVector::squares() const {
  std::vector<Integer> out;
  out.reserve(weights_.size());
  for (auto a : weights_) {
    Integer z(std::to_string(a));
    out.push_back(z * z);
  }
  return out;
}

CharClassMonomial::CharClassMonomial(unsigned fiber_half_dim, std::vector<unsigned> p_exponents,
                                     unsigned e_exponent)
    : half_dim_(fiber_half_dim), p_exponents_(std::move(p_exponents)), e_exponent_(e_exponent) {
  if (half_dim_ == 0) throw InvalidArgument("fiber half-dimension must be at least 1");
  if (p_exponents_.size() != half_dim_) {
    throw InvalidArgument("expected " + std::to_string(half_dim_) + " Pontryagin exponents, got " +
                          std::to_string(p_exponents_.size()));
  }
}

CharClassMonomial CharClassMonomial::unit(unsigned fiber_half_dim) {
  return {fiber_half_dim, std::vector<unsigned>(fiber_half_dim, 0), 0};
}

CharClassMonomial CharClassMonomial::euler(unsigned fiber_half_dim) {
  return {fiber_half_dim, std::vector<unsigned>(fiber_half_dim, 0), 1};
}

CharClassMonomial CharClassMonomial::pontryagin(unsigned fiber_half_dim, unsigned index) {
  if (index == 0 || index > fiber_half_dim) {
    throw InvalidArgument("Pontryagin index " + std::to_string(index) + " outside 1.." +
                          std::to_string(fiber_half_dim));
  }
  std::vector<unsigned> p(fiber_half_dim, 0);
  p[index - 1] = 1;
  return {fiber_half_dim, std::move(p), 0};
}

bool CharClassMonomial::is_unit() const {
  return e_exponent_ == 0 && std::all_of(p_exponents_.begin(), p_exponents_.end(), [](unsigned x) { return x == 0; });
}

CharClassMonomial CharClassMonomial::operator*(const CharClassMonomial& other) const {
  if (other.half_dim_ != half_dim_) {
    throw InvalidArgument("cannot multiply monomials for fiber dimensions " + std::to_string(2 * half_dim_) +
                          " and " + std::to_string(2 * other.half_dim_));
  }
  auto p = p_exponents_;
  for (std::size_t i = 0; i < p.size(); ++i) p[i] += other.p_exponents_[i];
  return {half_dim_, std::move(p), e_exponent_ + other.e_exponent_};
}

std::string CharClassMonomial::to_string() const {
  std::string out;
  auto append = [&out](const std::string& base, unsigned exp) {
    if (exp == 0) return;
    if (!out.empty()) out += '*';
    out += base;
    if (exp > 1) out += '^' + std::to_string(exp);
  };
  append("e", e_exponent_);
  for (std::size_t i = 0; i < p_exponents_.size(); ++i) append("p" + std::to_string(i + 1), p_exponents_[i]);
  return out.empty() ? "1" : out;
}

CharClassMonomial reduce_monomial(const CharClassMonomial& m) {
  std::vector<unsigned> p(m.p_exponents().begin(), m.p_exponents().end());
  p.back() += m.e_exponent() / 2;
  return {m.fiber_half_dim(), std::move(p), m.e_exponent() % 2};
}

std::uint64_t degree(const CharClassMonomial& m) {
  std::uint64_t d = 2ULL * m.fiber_half_dim() * m.e_exponent();
  const auto p = m.p_exponents();
  for (std::size_t i = 0; i < p.size(); ++i) d += 4ULL * (i + 1) * p[i];
  return d;
}

Integer elementary_symmetric(std::size_t i, std::span<const Integer> values) {
  if (i > values.size()) {
    throw InvalidArgument("sigma_" + std::to_string(i) + " needs at least " + std::to_string(i) + " values, got " +
                          std::to_string(values.size()));
  }
  // e[j] holds sigma_j of the prefix processed so far.
  std::vector<Integer> e(i + 1, 0);
  e[0] = 1;
  for (const auto& v : values) {
    for (std::size_t j = i; j >= 1; --j) e[j] += e[j - 1] * v;
  }
  return e[i];
}

Integer sigma_eval(const CharClassMonomial& c, const WeightVector& w) {
  const unsigned n = c.fiber_half_dim();
  if (w.size() != n) {
    throw InvalidArgument("class for fiber dimension " + std::to_string(2 * n) + " evaluated on " +
                          std::to_string(w.size()) + " weights");
  }
  Integer result = 1;
  const auto p = c.p_exponents();
  const auto top = static_cast<std::size_t>(std::distance(
      p.begin(), std::find_if(p.rbegin(), p.rend(), [](unsigned x) { return x != 0; }).base()));
  if (top > 0) {
    // sigma_0..sigma_top of the squares in one pass
    std::vector<Integer> sigma(top + 1, 0);
    sigma[0] = 1;
    for (const auto& v : w.squares()) {
      for (std::size_t j = top; j >= 1; --j) sigma[j] += sigma[j - 1] * v;
    }
    for (std::size_t i = 0; i < top && result != 0; ++i) {
      if (p[i] != 0) result *= ipow(sigma[i + 1], p[i]);
    }
  }
  if (c.e_exponent() > 0) {
    Integer euler = 1;
    for (auto a : w.values()) euler *= Integer(std::to_string(a));
    result *= ipow(euler, c.e_exponent());
  }
  return result;
}

Integer signed_doubling_sigma(std::size_t i, const WeightVector& w) {
  if (i > w.size()) throw InvalidArgument("index " + std::to_string(i) + " exceeds weight count");
  std::vector<Integer> doubled;
  doubled.reserve(2 * w.size());
  for (auto a : w.values()) {
    Integer z(std::to_string(a));
    doubled.push_back(z);
    doubled.push_back(-z);
  }
  Integer s = elementary_symmetric(2 * i, doubled);
  return (i % 2 == 0) ? s : Integer(-s);
}

namespace {

unsigned parse_unsigned(std::string_view digits, std::string_view token) {
  unsigned v = 0;
  const auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), v);
  if (digits.empty() || ec != std::errc{} || ptr != digits.data() + digits.size()) {
    throw InvalidArgument("malformed class factor '" + std::string(token) + "'");
  }
  return v;
}

}  // namespace

CharClassMonomial parse_monomial(std::string_view text, unsigned fiber_half_dim) {
  std::string s;
  for (char ch : text) {
    if (!std::isspace(static_cast<unsigned char>(ch))) s += static_cast<char>(std::tolower(static_cast<unsigned char>(ch)));
  }
  if (s.empty()) throw InvalidArgument("empty class expression");
  auto result = CharClassMonomial::unit(fiber_half_dim);
  std::string_view rest = s;
  while (true) {
    const auto star = rest.find('*');
    const auto token = rest.substr(0, star);
    if (token.empty()) throw InvalidArgument("empty factor in class expression '" + std::string(text) + "'");

    auto base = token;
    unsigned exponent = 1;
    if (const auto caret = token.find('^'); caret != std::string_view::npos) {
      base = token.substr(0, caret);
      const auto exp_text = token.substr(caret + 1);
      if (!exp_text.empty() && exp_text.front() == '-') {
        throw InvalidArgument("negative exponent in class factor '" + std::string(token) + "'");
      }
      exponent = parse_unsigned(exp_text, token);
    }

    if (base == "1") {
      // unit factor
    } else if (base == "e") {
      result = result * CharClassMonomial(fiber_half_dim, std::vector<unsigned>(fiber_half_dim, 0), exponent);
    } else if (base.size() > 1 && base.front() == 'p') {
      const unsigned index = parse_unsigned(base.substr(1), token);
      if (index == 0 || index > fiber_half_dim) {
        throw InvalidArgument("Pontryagin index in '" + std::string(token) + "' outside 1.." +
                              std::to_string(fiber_half_dim));
      }
      std::vector<unsigned> p(fiber_half_dim, 0);
      p[index - 1] = exponent;
      result = result * CharClassMonomial(fiber_half_dim, std::move(p), 0);
    } else {
      throw InvalidArgument("unknown class factor '" + std::string(token) + "'");
    }

    if (star == std::string_view::npos) break;
    rest.remove_prefix(star + 1);
  }
  return result;
}

}  // namespace kappa
