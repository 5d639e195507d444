#include "kappa/catalog.hpp"

#include <stdexcept>

namespace kappa {

FixedPointFile CatalogEntry::to_file() const {
  return FixedPointFile{data, label, provenance_note, expected};
}

void verify_catalog_entry(const CatalogEntry& entry) {
  for (const auto& e : entry.expected) {
    auto value = localize_circle(entry.data, e.class_monomial);
    if (e.generator == Generator::c2) value = lift_to_su2(value);
    if (value.coefficient != e.coefficient || value.generator_power != e.power) {
      throw std::logic_error("catalog entry '" + entry.label + "': kappa_e" + e.class_monomial.to_string() +
                             " localizes to " + to_string(value.coefficient) + " on " + to_string(value.generator) +
                             "^" + std::to_string(value.generator_power) + ", annotation says " +
                             to_string(e.coefficient) + " on " + to_string(e.generator) + "^" +
                             std::to_string(e.power));
    }
  }
}

CatalogEntry s2xs2_family(std::int64_t k) {
  if (k < 0) throw InvalidArgument("k must be non-negative, got " + std::to_string(k));
  if (k % 2 != 0) {
    throw DomainError("k must be even: for odd k the doubled disk bundle is the non-trivial S^2-bundle over S^2");
  }
  CatalogEntry entry;
  entry.label = "s2xs2_k" + std::to_string(k);
  entry.data.fiber_half_dim = 2;
  entry.data.fiber_euler_char = 4;
  const std::int64_t signs[4][2] = {{1, 1}, {1, -1}, {-1, 1}, {-1, -1}};
  for (int i = 0; i < 4; ++i) {
    entry.data.components.push_back(
        {"x" + std::to_string(i + 1), 1, WeightVector{signs[i][0] * k, signs[i][1]}});
  }
  const Integer kk(std::to_string(k));
  entry.expected.push_back(
      {CharClassMonomial::pontryagin(2, 1), Rational(Integer(4 * (kk * kk + 1))), Generator::c2, 1});
  entry.provenance_note =
      "SU(2) on S^2 x S^2 as the double of the disk bundle of the Euler-number-" + std::to_string(k) +
      " plane bundle over S^2; the maximal torus fixes 4 points with tangential weights (+-" + std::to_string(k) +
      ", +-1); expected kappa_{e p1} = 4(k^2+1) c2";
  verify_catalog_entry(entry);
  return entry;
}

std::int64_t connected_sum_euler(std::int64_t chi_x, std::int64_t g, std::int64_t dim) {
  if (dim <= 0 || dim % 2 != 0) throw InvalidArgument("dimension must be even and positive, got " + std::to_string(dim));
  if (g < 1) throw InvalidArgument("number of summands must be >= 1, got " + std::to_string(g));
  return g * chi_x - 2 * (g - 1);
}

RationallyOddResult rationally_odd_check(std::span<const std::uint64_t> betti) {
  if (betti.size() < 3 || betti.size() % 2 == 0) {
    throw InvalidArgument("Betti list must cover degrees 0..2n for some n >= 1 (odd length >= 3), got length " +
                          std::to_string(betti.size()));
  }
  RationallyOddResult r;
  const auto top = betti.size() - 1;
  if (betti[0] != 1) r.warnings.push_back("b_0 = " + std::to_string(betti[0]) + ", expected 1 for a connected manifold");
  if (betti[top] != 1) {
    r.warnings.push_back("b_" + std::to_string(top) + " = " + std::to_string(betti[top]) +
                         ", expected 1 for a closed oriented manifold");
  }
  r.rationally_odd = true;
  for (std::size_t j = 0; j <= top; ++j) {
    const auto b = static_cast<std::int64_t>(betti[j]);
    r.euler_char += (j % 2 == 0) ? b : -b;
    if (j > 0 && j < top && j % 2 == 0 && betti[j] != 0) r.rationally_odd = false;
  }
  return r;
}

nlohmann::json WgReport::to_json() const {
  return {{"n", n},
          {"g", g},
          {"euler_char", euler_char},
          {"betti", betti},
          {"rationally_odd", rationally_odd},
          {"block_fixed_set", block_fixed_set},
          {"block_fixed_set_nonempty", block_fixed_set_nonempty},
          {"hypotheses", kappa::to_json(hypotheses)},
          {"theorems_apply", theorems_apply}};
}

WgReport wg_hypothesis_report(unsigned n, unsigned g) {
  if (n < 3) throw InvalidArgument("n must be >= 3, got " + std::to_string(n));
  if (n % 2 == 0) {
    throw DomainError("n must be odd: for even n, #^g(S^n x S^n) has even-degree cohomology and is not rationally odd");
  }
  if (g < 1) throw InvalidArgument("g must be >= 1");

  WgReport r;
  r.n = n;
  r.g = g;
  // chi(S^n x S^n) = 0 for odd n
  r.euler_char = connected_sum_euler(0, g, 2 * static_cast<std::int64_t>(n));
  r.betti.assign(2 * n + 1, 0);
  r.betti[0] = 1;
  r.betti[n] = 2 * static_cast<std::uint64_t>(g);
  r.betti[2 * n] = 1;
  const auto odd = rationally_odd_check(r.betti);
  r.rationally_odd = odd.rationally_odd;
  if (odd.euler_char != r.euler_char) throw std::logic_error("Euler characteristic bookkeeping disagrees");

  // SU(2) acts on S^n in R^3 + R^{n-2} through SO(3) on R^3 and trivially on the rest.
  r.block_fixed_set = "S^" + std::to_string(n - 3) + " x S^" + std::to_string(n);
  r.block_fixed_set_nonempty = true;

  r.hypotheses.rationally_odd = r.rationally_odd;
  r.hypotheses.negative_euler_char = r.euler_char < 0;
  r.hypotheses.nontrivial_action_assumed = r.block_fixed_set_nonempty;
  r.theorems_apply = r.hypotheses.all();
  return r;
}

}  // namespace kappa
