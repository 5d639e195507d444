#ifndef KAPPA_CATALOG_HPP
#define KAPPA_CATALOG_HPP

// Worked example families, emitted as fixed-point data with expected values.

#include "kappa/fixed_point_json.hpp"
#include "kappa/obstruction.hpp"

#include <span>
#include <string>
#include <vector>

namespace kappa {

struct CatalogEntry {
  std::string label;
  FixedPointData data;
  std::vector<ExpectedValue> expected;
  std::string provenance_note;

  FixedPointFile to_file() const;
};

/// Every expected value must be reproduced by localization; throws
/// std::logic_error naming the first mismatch.
void verify_catalog_entry(const CatalogEntry& entry);

/// SU(2) acting on S^2 x S^2, realized as the double of the disk bundle of
/// the Euler-number-k plane bundle over S^2 (k even so the sphere bundle is
/// trivial). The maximal torus fixes four points with weights (+-k, +-1);
/// each sign pattern is assigned to one point.
CatalogEntry s2xs2_family(std::int64_t k);

/// chi(#^g X) for closed X of even dimension dim: g * chi(X) - 2(g - 1).
std::int64_t connected_sum_euler(std::int64_t chi_x, std::int64_t g, std::int64_t dim);

struct RationallyOddResult {
  bool rationally_odd = false;
  std::int64_t euler_char = 0;
  std::vector<std::string> warnings;  // e.g. b_0 or b_top not equal to 1
};

/// betti[j] = b_j for j = 0..2n. Throws InvalidArgument for even-length input.
RationallyOddResult rationally_odd_check(std::span<const std::uint64_t> betti);

struct WgReport {
  unsigned n = 0;
  unsigned g = 0;
  std::int64_t euler_char = 0;
  std::vector<std::uint64_t> betti;
  bool rationally_odd = false;
  std::string block_fixed_set;  // fixed set of SU(2) on one S^n x S^n summand
  bool block_fixed_set_nonempty = false;
  HypothesisFlags hypotheses;
  bool theorems_apply = false;

  nlohmann::json to_json() const;
};

/// Hypothesis bookkeeping for W_g = #^g (S^n x S^n), n odd >= 3. Emits no
/// fixed-point weights: only the building block's global fixed set is known.
WgReport wg_hypothesis_report(unsigned n, unsigned g);

}  // namespace kappa

#endif  // KAPPA_CATALOG_HPP
