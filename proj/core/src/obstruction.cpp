#include "kappa/obstruction.hpp"

#include <algorithm>
#include <cctype>

namespace kappa {

using nlohmann::json;

BVector::BVector(std::vector<Rational> entries) : entries_(std::move(entries)) {
  if (entries_.empty()) throw InvalidArgument("b-vector must have at least one entry");
  for (auto& q : entries_) q.canonicalize();
}

bool BVector::all_integral() const { return std::all_of(entries_.begin(), entries_.end(), is_integral); }

std::vector<Integer> BVector::integers() const {
  std::vector<Integer> out;
  out.reserve(entries_.size());
  for (std::size_t i = 0; i < entries_.size(); ++i) {
    if (!is_integral(entries_[i])) throw DomainError("b_" + std::to_string(i + 1) + " is not an integer");
    out.push_back(entries_[i].get_num());
  }
  return out;
}

std::string BVector::to_string() const {
  std::string out;
  for (const auto& q : entries_) {
    if (!out.empty()) out += ',';
    out += kappa::to_string(q);
  }
  return out;
}

HypothesisFlags parse_hypothesis_flags(std::string_view text) {
  HypothesisFlags f;
  std::string s;
  for (char ch : text) {
    if (!std::isspace(static_cast<unsigned char>(ch))) s += static_cast<char>(std::tolower(static_cast<unsigned char>(ch)));
  }
  std::string_view rest = s;
  while (!rest.empty()) {
    const auto comma = rest.find(',');
    const auto tok = rest.substr(0, comma);
    if (tok == "rationally-odd") f.rationally_odd = true;
    else if (tok == "neg-euler") f.negative_euler_char = true;
    else if (tok == "nontrivial-action") f.nontrivial_action_assumed = true;
    else if (!tok.empty()) throw InvalidArgument("unknown hypothesis flag '" + std::string(tok) + "'");
    if (comma == std::string_view::npos) break;
    rest.remove_prefix(comma + 1);
  }
  return f;
}

std::string VerdictReason::to_string() const {
  switch (kind) {
    case Kind::non_integer: return "non_integer(" + kappa::to_string(value) + ")";
    case Kind::gcd_has_odd_prime: return "gcd_has_odd_prime(" + kappa::to_string(value) + ")";
    case Kind::all_zero: return "all_zero";
  }
  return {};
}

std::string to_string(Verdict::Status s) { return s == Verdict::Status::consistent ? "consistent" : "ruled_out"; }

bool gcd_power_of_two(std::span<const Integer> values) {
  if (values.empty()) throw InvalidArgument("gcd of an empty list");
  return is_power_of_two(gcd_abs(values));
}

Verdict theorem_a_check(const BVector& b, const HypothesisFlags& flags) {
  Verdict v;
  v.hypotheses_hold = flags.all();
  for (std::size_t i = 0; i < b.size(); ++i) {
    if (!is_integral(b[i])) v.reasons.push_back({VerdictReason::Kind::non_integer, Integer(static_cast<unsigned long>(i + 1))});
  }
  if (v.reasons.empty()) {
    const auto ints = b.integers();
    const Integer g = gcd_abs(ints);
    v.gcd = g;
    if (g == 0) {
      v.reasons.push_back({VerdictReason::Kind::all_zero, 0});
    } else if (!is_power_of_two(g)) {
      v.reasons.push_back({VerdictReason::Kind::gcd_has_odd_prime, smallest_odd_prime_factor(g)});
    }
  }
  v.status = v.reasons.empty() ? Verdict::Status::consistent : Verdict::Status::ruled_out;
  return v;
}

BVector weights_to_b(const WeightVector& w) {
  if (w.size() == 0) throw InvalidArgument("weight vector must be non-empty");
  const auto sq = w.squares();
  std::vector<Rational> b;
  b.reserve(w.size());
  for (std::size_t i = 1; i <= w.size(); ++i) b.emplace_back(elementary_symmetric(i, sq));
  return BVector(std::move(b));
}

BVector adams_transform(const Integer& k, const BVector& b) {
  if (k < 1) throw InvalidArgument("Adams operation index must be >= 1, got " + to_string(k));
  if (k % 2 == 0) {
    throw DomainError("no Adams map psi_" + to_string(k) +
                      ": self-maps of BSU(2) have loop degree 0 or an odd square");
  }
  const Integer k2 = k * k;
  Integer scale = 1;
  std::vector<Rational> out;
  out.reserve(b.size());
  for (const auto& q : b.entries()) {
    scale *= k2;
    out.push_back(q * Rational(scale));
  }
  return BVector(std::move(out));
}

bool self_map_degree_realizable(const Integer& d) {
  if (d == 0) return true;
  if (d < 0 || d % 2 == 0) return false;
  return mpz_perfect_square_p(d.get_mpz_t()) != 0;
}

CertificateResult nonkinetic_certificate(const BVector& b_base, const Integer& k, const HypothesisFlags& flags) {
  if (k <= 1) throw InvalidArgument("certificate needs an odd k > 1, got " + to_string(k));
  if (!flags.all()) return NotApplicable{"hypotheses not all asserted; the gcd obstruction does not apply", std::nullopt};

  const auto base = theorem_a_check(b_base, flags);
  if (base.ruled_out()) {
    return NotApplicable{"base b-vector already fails the constraint (" + base.reasons.front().to_string() +
                             "), so it cannot come from an action",
                         base.gcd};
  }

  auto transformed = adams_transform(k, b_base);
  const auto verdict = theorem_a_check(transformed, flags);
  const auto& reason = verdict.reasons;
  const auto odd = std::find_if(reason.begin(), reason.end(),
                                [](const VerdictReason& r) { return r.kind == VerdictReason::Kind::gcd_has_odd_prime; });
  if (!verdict.ruled_out() || odd == reason.end()) {
    return NotApplicable{"transformed b-vector still passes the constraint", verdict.gcd};
  }
  return NonkineticCertificate{k, b_base, std::move(transformed), *verdict.gcd, odd->value, flags};
}

namespace {

json integer_json(const Integer& z) {
  if (fits_int64(z)) return to_int64(z);
  return to_string(z);
}

}  // namespace

json to_json(const BVector& b) {
  json arr = json::array();
  for (const auto& q : b.entries()) arr.push_back(to_string(q));
  return arr;
}

json to_json(const HypothesisFlags& f) {
  return {{"rationally_odd", f.rationally_odd},
          {"negative_euler_char", f.negative_euler_char},
          {"nontrivial_action_assumed", f.nontrivial_action_assumed}};
}

json to_json(const NonkineticCertificate& c) {
  return {{"k", integer_json(c.k)},
          {"b_base", to_json(c.b_base)},
          {"b_transformed", to_json(c.b_transformed)},
          {"gcd", integer_json(c.gcd)},
          {"witness_prime", integer_json(c.witness_prime)},
          {"hypotheses", to_json(c.hypotheses)},
          {"conclusion", "non-kinetic"}};
}

json to_json(const Verdict& v) {
  json reasons = json::array();
  for (const auto& r : v.reasons) reasons.push_back(r.to_string());
  json j = {{"status", to_string(v.status)}, {"reasons", reasons}, {"hypotheses_hold", v.hypotheses_hold}};
  j["gcd"] = v.gcd ? integer_json(*v.gcd) : json(nullptr);
  return j;
}

BettiFeasibility betti_feasible(std::uint64_t w_even, std::uint64_t w_odd, std::uint64_t m_even, std::uint64_t m_odd) {
  if (m_even > w_even || m_odd > w_odd) return {};
  if (w_even - m_even != w_odd - m_odd) return {};
  return {true, w_even - m_even};
}

}  // namespace kappa
