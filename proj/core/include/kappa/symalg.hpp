#ifndef KAPPA_SYMALG_HPP
#define KAPPA_SYMALG_HPP

// Characteristic-class monomials in p_1..p_n and e for an oriented rank-2n
// bundle, modulo e^2 = p_n, and their evaluation on circle weights.
//
// A real circle representation l_{a_1} + ... + l_{a_n} pulls p_i back to
// sigma_i(a_1^2, ..., a_n^2) * gamma^{2i} and e back to (a_1 ... a_n) * gamma^n;
// sigma_eval returns the integer coefficient of the monomial's image.

#include "kappa/arith.hpp"

#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace kappa {

/// Integer weights a_1..a_n of a real 2n-dimensional circle representation.
/// Signs are kept: they matter for Euler-class evaluation.
class WeightVector {
 public:
  WeightVector() = default;
  explicit WeightVector(std::vector<std::int64_t> weights) : weights_(std::move(weights)) {}
  WeightVector(std::initializer_list<std::int64_t> weights) : weights_(weights) {}

  std::size_t size() const { return weights_.size(); }
  std::span<const std::int64_t> values() const { return weights_; }
  std::int64_t operator[](std::size_t i) const { return weights_[i]; }

  /// a_1^2, ..., a_n^2 as exact integers.
  std::vector<Integer> squares() const;

  friend bool operator==(const WeightVector&, const WeightVector&) = default;

 private:
  std::vector<std::int64_t> weights_;
};

class CharClassMonomial {
 public:
  /// p_exponents[i] is the exponent of p_{i+1}; its length must equal n.
  CharClassMonomial(unsigned fiber_half_dim, std::vector<unsigned> p_exponents, unsigned e_exponent = 0);

  static CharClassMonomial unit(unsigned fiber_half_dim);
  static CharClassMonomial euler(unsigned fiber_half_dim);
  static CharClassMonomial pontryagin(unsigned fiber_half_dim, unsigned index);

  unsigned fiber_half_dim() const { return half_dim_; }
  std::span<const unsigned> p_exponents() const { return p_exponents_; }
  unsigned p_exponent(unsigned index) const { return p_exponents_.at(index - 1); }
  unsigned e_exponent() const { return e_exponent_; }

  bool is_canonical() const { return e_exponent_ <= 1; }
  bool is_pure_pontryagin() const { return e_exponent_ == 0; }
  bool is_unit() const;

  /// Product without reduction; both factors must share n.
  CharClassMonomial operator*(const CharClassMonomial& other) const;

  /// "e*p1^2", "p3", or "1" for the unit monomial.
  std::string to_string() const;

  friend bool operator==(const CharClassMonomial&, const CharClassMonomial&) = default;

 private:
  unsigned half_dim_;
  std::vector<unsigned> p_exponents_;
  unsigned e_exponent_;
};

/// Canonical representative under e^2 = p_n (e-exponent 0 or 1).
CharClassMonomial reduce_monomial(const CharClassMonomial& m);

/// Cohomological degree: deg p_i = 4i, deg e = 2n.
std::uint64_t degree(const CharClassMonomial& m);

/// sigma_i(values); sigma_0 = 1. Throws InvalidArgument if i > values.size().
Integer elementary_symmetric(std::size_t i, std::span<const Integer> values);

/// Multiplicative extension of sigma_{p_i} = sigma_i(a^2), sigma_e = a_1...a_n.
/// Accepts non-canonical monomials; the result agrees with the reduced form.
Integer sigma_eval(const CharClassMonomial& c, const WeightVector& w);

/// (-1)^i sigma_{2i}(a_1, -a_1, ..., a_n, -a_n), expanded over the 2n signed
/// values. Must agree with sigma_i of the squared weights.
Integer signed_doubling_sigma(std::size_t i, const WeightVector& w);

/// Parses "e", "p1", "p2^3", "e*p1^2", "1". Whitespace- and case-insensitive.
/// Repeated factors multiply. The result is not reduced.
CharClassMonomial parse_monomial(std::string_view text, unsigned fiber_half_dim);

}  // namespace kappa

#endif  // KAPPA_SYMALG_HPP
