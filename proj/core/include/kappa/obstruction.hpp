#ifndef KAPPA_OBSTRUCTION_HPP
#define KAPPA_OBSTRUCTION_HPP

// Arithmetic constraints on kappa_{e p_i} for SU(2)-actions.
//
// Write s^* kappa_{e p_i} = b_i * chi(W) * c_2^i. When W^{2n} is rationally
// odd with chi(W) < 0 and the action is non-trivial, the b_i are integers
// whose gcd is a power of two. Precomposing with the Adams map psi_k
// (k odd) scales b_i by k^{2i}; for k > 1 the result violates the gcd
// condition, so the corresponding bundle cannot come from an action.

#include "kappa/arith.hpp"
#include "kappa/symalg.hpp"

#include <nlohmann/json.hpp>

#include <optional>
#include <string>
#include <variant>
#include <vector>

namespace kappa {

class BVector {
 public:
  /// Throws InvalidArgument on an empty list.
  explicit BVector(std::vector<Rational> entries);

  const std::vector<Rational>& entries() const { return entries_; }
  std::size_t size() const { return entries_.size(); }
  const Rational& operator[](std::size_t i) const { return entries_[i]; }

  bool all_integral() const;
  /// Entries as integers; throws DomainError if some entry is not integral.
  std::vector<Integer> integers() const;
  std::string to_string() const;

  friend bool operator==(const BVector& a, const BVector& b) { return a.entries_ == b.entries_; }

 private:
  std::vector<Rational> entries_;
};

/// Caller-asserted topological hypotheses; the library has no manifold model.
struct HypothesisFlags {
  bool rationally_odd = false;
  bool negative_euler_char = false;
  bool nontrivial_action_assumed = false;

  static HypothesisFlags all_set() { return {true, true, true}; }
  bool all() const { return rationally_odd && negative_euler_char && nontrivial_action_assumed; }
};

/// "rationally-odd,neg-euler,nontrivial-action"; the empty string sets none.
HypothesisFlags parse_hypothesis_flags(std::string_view text);

struct VerdictReason {
  enum class Kind { non_integer, gcd_has_odd_prime, all_zero };
  Kind kind;
  Integer value;  // 1-based index for non_integer, the prime for gcd_has_odd_prime

  std::string to_string() const;
};

struct Verdict {
  enum class Status { consistent, ruled_out };
  Status status = Status::consistent;
  std::vector<VerdictReason> reasons;
  std::optional<Integer> gcd;  // present when every entry is integral
  bool hypotheses_hold = false;

  bool ruled_out() const { return status == Status::ruled_out; }
};

std::string to_string(Verdict::Status s);

/// Throws InvalidArgument on an empty list.
bool gcd_power_of_two(std::span<const Integer> values);

Verdict theorem_a_check(const BVector& b, const HypothesisFlags& flags);

/// b_i = sigma_i(a_1^2, ..., a_n^2).
BVector weights_to_b(const WeightVector& w);

/// b_i -> k^{2i} b_i. Throws DomainError for even k, InvalidArgument for k < 1.
BVector adams_transform(const Integer& k, const BVector& b);

/// Whether d is the loop degree of a self-map of BSU(2): 0 or an odd square.
bool self_map_degree_realizable(const Integer& d);

struct NonkineticCertificate {
  Integer k;
  BVector b_base;
  BVector b_transformed;
  Integer gcd;
  Integer witness_prime;
  HypothesisFlags hypotheses;
};

struct NotApplicable {
  std::string reason;
  std::optional<Integer> gcd;
};

using CertificateResult = std::variant<NonkineticCertificate, NotApplicable>;

/// Runs the Adams-twist argument on b_base. Requires odd k > 1
/// (InvalidArgument / DomainError otherwise).
CertificateResult nonkinetic_certificate(const BVector& b_base, const Integer& k, const HypothesisFlags& flags);

nlohmann::json to_json(const NonkineticCertificate& c);
nlohmann::json to_json(const HypothesisFlags& f);
nlohmann::json to_json(const Verdict& v);
nlohmann::json to_json(const BVector& b);

struct BettiFeasibility {
  bool feasible = false;
  std::optional<std::uint64_t> k;
};

/// Whether M can be the fixed set of a circle action on W at the level of
/// even/odd Betti sums: both drop by the same k >= 0.
BettiFeasibility betti_feasible(std::uint64_t w_even, std::uint64_t w_odd, std::uint64_t m_even, std::uint64_t m_odd);

}  // namespace kappa

#endif  // KAPPA_OBSTRUCTION_HPP
