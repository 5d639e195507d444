#include "kappa/localization.hpp"

#include <algorithm>
#include <numeric>

namespace kappa {

std::vector<Diagnostic> validate_fixed_data(const FixedPointData& d) {
  std::vector<Diagnostic> out;
  auto error = [&out](std::string msg) { out.push_back({Diagnostic::Severity::error, std::move(msg)}); };

  if (d.fiber_half_dim == 0) error("fiber_half_dim must be at least 1");

  Integer chi_sum = 0;
  for (std::size_t i = 0; i < d.components.size(); ++i) {
    const auto& comp = d.components[i];
    const std::string label = comp.name.empty() ? "#" + std::to_string(i) : "'" + comp.name + "'";
    chi_sum += Integer(std::to_string(comp.euler_char));
    if (comp.weights.size() != d.fiber_half_dim) {
      error("component " + label + " has " + std::to_string(comp.weights.size()) + " weights, expected " +
            std::to_string(d.fiber_half_dim));
    }
    const auto w = comp.weights.values();
    if (std::find(w.begin(), w.end(), 0) != w.end()) {
      out.push_back({Diagnostic::Severity::info,
                     "component " + label + " has a zero weight (fixed set is not isolated in that plane)"});
    }
  }
  if (d.fiber_euler_char && chi_sum != Integer(std::to_string(*d.fiber_euler_char))) {
    error("Euler characteristic mismatch: components sum to " + to_string(chi_sum) + " but fiber_euler_char is " +
          std::to_string(*d.fiber_euler_char));
  }
  return out;
}

bool has_errors(const std::vector<Diagnostic>& diagnostics) {
  return std::any_of(diagnostics.begin(), diagnostics.end(),
                     [](const Diagnostic& x) { return x.severity == Diagnostic::Severity::error; });
}

std::string to_string(Generator g) { return g == Generator::gamma ? "gamma" : "c2"; }

Generator parse_generator(std::string_view text) {
  if (text == "gamma") return Generator::gamma;
  if (text == "c2") return Generator::c2;
  throw InvalidArgument("unknown generator '" + std::string(text) + "' (expected gamma or c2)");
}

namespace {

void require_valid(const FixedPointData& d) {
  const auto diags = validate_fixed_data(d);
  for (const auto& x : diags) {
    if (x.severity == Diagnostic::Severity::error) throw InvalidArgument("invalid fixed-point data: " + x.message);
  }
}

}  // namespace

KappaValue localize_circle(const FixedPointData& d, const CharClassMonomial& c) {
  require_valid(d);
  if (c.fiber_half_dim() != d.fiber_half_dim) {
    throw InvalidArgument("class " + c.to_string() + " is for fiber dimension " + std::to_string(2 * c.fiber_half_dim()) +
                          " but data has fiber dimension " + std::to_string(2 * d.fiber_half_dim));
  }
  const auto canonical = reduce_monomial(c);
  Integer total = 0;
  for (const auto& comp : d.components) {
    total += Integer(std::to_string(comp.euler_char)) * sigma_eval(canonical, comp.weights);
  }
  return KappaValue{canonical, Rational(total), Generator::gamma, degree(canonical) / 2};
}

KappaValue lift_to_su2(const KappaValue& v) {
  if (v.generator == Generator::c2) return v;
  if (v.generator_power % 2 != 0) {
    throw DomainError("gamma^" + std::to_string(v.generator_power) +
                      " has no preimage in H*(BSU(2)); the class cannot come from an SU(2) symmetry");
  }
  return KappaValue{v.class_monomial, v.coefficient, Generator::c2, v.generator_power / 2};
}

SU2Pullback pullback_su2(const FixedPointData& d, unsigned i) {
  if (i == 0 || i > d.fiber_half_dim) {
    throw InvalidArgument("Pontryagin index " + std::to_string(i) + " outside 1.." + std::to_string(d.fiber_half_dim));
  }
  if (!d.fiber_euler_char) throw DomainError("fiber_euler_char is required to compute b_i");
  if (*d.fiber_euler_char == 0) throw DomainError("b_i is undefined when chi(W) = 0");
  auto value = lift_to_su2(localize_circle(d, CharClassMonomial::pontryagin(d.fiber_half_dim, i)));
  Rational b = value.coefficient / Rational(Integer(std::to_string(*d.fiber_euler_char)));
  b.canonicalize();
  return SU2Pullback{std::move(value), std::move(b)};
}

FixedPointData disjoint_union(const FixedPointData& a, const FixedPointData& b) {
  if (a.fiber_half_dim != b.fiber_half_dim) throw InvalidArgument("disjoint union of data with different fiber dimension");
  FixedPointData out = a;
  out.components.insert(out.components.end(), b.components.begin(), b.components.end());
  out.fiber_euler_char = (a.fiber_euler_char && b.fiber_euler_char)
                             ? std::optional<std::int64_t>(*a.fiber_euler_char + *b.fiber_euler_char)
                             : std::nullopt;
  return out;
}

}  // namespace kappa
