#ifndef KAPPA_LOCALIZATION_HPP
#define KAPPA_LOCALIZATION_HPP

// Fixed-point localization for circle actions.
//
// For an S^1-action on W^{2n} with fixed components M_1..M_r carrying
// tangential weights a_{i,1..n}, the pullback of kappa_{ec} to BS^1 is
//
//   (sum_i chi(M_i) * sigma_c(a_{i,1}, ..., a_{i,n})) * gamma^{deg(c)/2}.
//
// Restricting along a maximal torus of SU(2) sends c_2 to gamma^2 and is
// injective on rational cohomology, so even powers of gamma lift uniquely.

#include "kappa/arith.hpp"
#include "kappa/symalg.hpp"

#include <optional>
#include <string>
#include <vector>

namespace kappa {

struct FixedComponent {
  std::string name;
  std::int64_t euler_char = 0;
  WeightVector weights;

  friend bool operator==(const FixedComponent&, const FixedComponent&) = default;
};

struct FixedPointData {
  unsigned fiber_half_dim = 0;
  std::optional<std::int64_t> fiber_euler_char;
  std::vector<FixedComponent> components;

  friend bool operator==(const FixedPointData&, const FixedPointData&) = default;
};

struct Diagnostic {
  enum class Severity { error, info };
  Severity severity;
  std::string message;
};

/// Structural checks. Errors: bad fiber dimension, weight-length mismatch,
/// Euler characteristic mismatch. Info: components with a zero weight.
std::vector<Diagnostic> validate_fixed_data(const FixedPointData& d);
bool has_errors(const std::vector<Diagnostic>& diagnostics);

enum class Generator { gamma, c2 };
std::string to_string(Generator g);
Generator parse_generator(std::string_view text);

/// Coefficient of s^* kappa_{ec} on generator^power; class_monomial is c.
struct KappaValue {
  CharClassMonomial class_monomial;
  Rational coefficient;
  Generator generator;
  std::uint64_t generator_power;
};

/// Throws InvalidArgument when d fails validation or n does not match.
KappaValue localize_circle(const FixedPointData& d, const CharClassMonomial& c);

/// Rewrites gamma^{2m} as c_2^m. Throws DomainError on odd powers.
KappaValue lift_to_su2(const KappaValue& v);

struct SU2Pullback {
  KappaValue value;  // on c_2^i
  Rational b;        // coefficient / chi(W)
};

/// s^* kappa_{e p_i} over BSU(2) and b_i. Needs chi(W) present and non-zero.
SU2Pullback pullback_su2(const FixedPointData& d, unsigned i);

/// Components of both inputs side by side; n must match. chi(W) adds when
/// both are present.
FixedPointData disjoint_union(const FixedPointData& a, const FixedPointData& b);

}  // namespace kappa

#endif  // KAPPA_LOCALIZATION_HPP
