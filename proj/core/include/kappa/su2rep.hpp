#ifndef KAPPA_SU2REP_HPP
#define KAPPA_SU2REP_HPP

// Finite-dimensional SU(2) representations as seen by a maximal torus.
//
// Complex irreducibles V_lambda (2*lambda = two_lambda) have torus weights
// -2lambda, -2lambda+2, ..., 2lambda. Real irreducibles V^d exist exactly for
// d odd (complexifying to V_{(d-1)/2}) and d = 0 mod 4 (complexifying to two
// copies of V_{d/4-1/2}).

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace kappa {

struct ComplexIrrep {
  unsigned two_lambda = 0;

  unsigned dim() const { return two_lambda + 1; }
  friend bool operator==(const ComplexIrrep&, const ComplexIrrep&) = default;
};

std::vector<std::int64_t> complex_irrep_weights(ComplexIrrep v);

class RealIrrep {
 public:
  /// Throws DomainError for d = 2 mod 4, InvalidArgument for d = 0.
  explicit RealIrrep(unsigned dim);

  unsigned dim() const { return dim_; }
  static bool exists(unsigned dim) { return dim > 0 && dim % 4 != 2; }

  friend auto operator<=>(const RealIrrep&, const RealIrrep&) = default;

 private:
  unsigned dim_;
};

std::vector<ComplexIrrep> real_irrep_complexification(RealIrrep r);

/// Direct sum of real irreducibles, stored as dimension -> multiplicity.
class RealRep {
 public:
  RealRep() = default;

  void add(RealIrrep irrep, unsigned multiplicity = 1);

  const std::map<unsigned, unsigned>& multiplicities() const { return summands_; }
  unsigned total_dim() const;
  bool empty() const { return summands_.empty(); }
  /// True when some summand has dimension > 1.
  bool is_nontrivial() const;

  /// "V4+V3+2*V1", largest summand first; "0" for the zero representation.
  std::string to_string() const;

  friend bool operator==(const RealRep&, const RealRep&) = default;

 private:
  std::map<unsigned, unsigned> summands_;
};

/// Accepts "V3+V4+2*V1" (multiplicity prefix optional, case-insensitive).
RealRep parse_real_rep(std::string_view text);

/// Non-negative real-plane weights, kept sorted in decreasing order.
class WeightMultiset {
 public:
  WeightMultiset() = default;
  explicit WeightMultiset(std::vector<std::uint64_t> entries);
  WeightMultiset(std::initializer_list<std::uint64_t> entries)
      : WeightMultiset(std::vector<std::uint64_t>(entries)) {}

  const std::vector<std::uint64_t>& entries() const { return entries_; }
  std::size_t size() const { return entries_.size(); }

  std::string to_string() const;

  friend bool operator==(const WeightMultiset&, const WeightMultiset&) = default;

 private:
  std::vector<std::uint64_t> entries_;
};

/// Parses comma-separated weights; signs are dropped (l_a and l_{-a} agree
/// as unoriented planes).
WeightMultiset parse_weight_multiset(std::string_view text);

/// Restriction to the maximal torus, folded into real planes. Throws
/// DomainError when the total dimension is odd.
WeightMultiset restrict_to_torus(const RealRep& rep);

struct WeightConstraintCheck {
  bool bound_ok = false;         // every weight <= d - 1
  bool has_small_weight = false; // some weight is 1 or 2
  bool ok() const { return bound_ok && has_small_weight; }
  std::string reason() const;
};

/// Necessary conditions on the torus weights of a non-trivial real SU(2)
/// representation of dimension d. Throws InvalidArgument unless w has d/2
/// entries.
WeightConstraintCheck check_weight_constraints(const WeightMultiset& w, unsigned d);

/// Some real representation restricting to w, or nullopt if none exists.
///
/// The largest remaining positive weight m pins down the block that carries
/// it: an even m can only be the top weight of V^{m+1} and an odd m the top
/// weight of V^{2(m+1)}. Peeling blocks off from the top is therefore an
/// exhaustive search with a single branch, and the witness is unique. Each odd
/// block V^{2j+1}, j >= 1, also consumes one trivial real line; the remaining
/// lines are made up with copies of V^1.
std::optional<RealRep> realize_weights(const WeightMultiset& w);

}  // namespace kappa

#endif  // KAPPA_SU2REP_HPP
