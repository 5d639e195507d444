#include "kappa/su2rep.hpp"

#include "kappa/arith.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <functional>

namespace kappa {

std::vector<std::int64_t> complex_irrep_weights(ComplexIrrep v) {
  std::vector<std::int64_t> out;
  out.reserve(v.dim());
  const auto top = static_cast<std::int64_t>(v.two_lambda);
  for (std::int64_t w = -top; w <= top; w += 2) out.push_back(w);
  return out;
}

RealIrrep::RealIrrep(unsigned dim) : dim_(dim) {
  if (dim == 0) throw InvalidArgument("real irreducible of dimension 0");
  if (dim % 4 == 2) {
    throw DomainError("SU(2) has no real irreducible representation of dimension " + std::to_string(dim) +
                      " (dimension = 2 mod 4)");
  }
}

std::vector<ComplexIrrep> real_irrep_complexification(RealIrrep r) {
  const unsigned d = r.dim();
  if (d % 2 == 1) return {ComplexIrrep{d - 1}};
  // d = 0 mod 4: two copies of V_{d/4 - 1/2}
  return {ComplexIrrep{d / 2 - 1}, ComplexIrrep{d / 2 - 1}};
}

void RealRep::add(RealIrrep irrep, unsigned multiplicity) {
  if (multiplicity == 0) return;
  summands_[irrep.dim()] += multiplicity;
}

unsigned RealRep::total_dim() const {
  unsigned total = 0;
  for (const auto& [d, mult] : summands_) total += d * mult;
  return total;
}

bool RealRep::is_nontrivial() const {
  return std::any_of(summands_.begin(), summands_.end(), [](const auto& kv) { return kv.first > 1; });
}

std::string RealRep::to_string() const {
  if (summands_.empty()) return "0";
  std::string out;
  for (auto it = summands_.rbegin(); it != summands_.rend(); ++it) {
    if (!out.empty()) out += '+';
    if (it->second > 1) out += std::to_string(it->second) + '*';
    out += 'V' + std::to_string(it->first);
  }
  return out;
}

namespace {

unsigned parse_count(std::string_view digits, std::string_view token) {
  unsigned v = 0;
  const auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), v);
  if (digits.empty() || ec != std::errc{} || ptr != digits.data() + digits.size()) {
    throw InvalidArgument("malformed representation term '" + std::string(token) + "'");
  }
  return v;
}

}  // namespace

RealRep parse_real_rep(std::string_view text) {
  std::string s;
  for (char ch : text) {
    if (!std::isspace(static_cast<unsigned char>(ch))) s += static_cast<char>(std::toupper(static_cast<unsigned char>(ch)));
  }
  if (s.empty()) throw InvalidArgument("empty representation");
  RealRep rep;
  std::string_view rest = s;
  while (true) {
    const auto plus = rest.find('+');
    const auto token = rest.substr(0, plus);
    unsigned mult = 1;
    auto term = token;
    if (const auto star = token.find('*'); star != std::string_view::npos) {
      mult = parse_count(token.substr(0, star), token);
      term = token.substr(star + 1);
    }
    if (term.size() < 2 || term.front() != 'V') {
      throw InvalidArgument("malformed representation term '" + std::string(token) + "'");
    }
    rep.add(RealIrrep(parse_count(term.substr(1), token)), mult);
    if (plus == std::string_view::npos) break;
    rest.remove_prefix(plus + 1);
  }
  return rep;
}

WeightMultiset::WeightMultiset(std::vector<std::uint64_t> entries) : entries_(std::move(entries)) {
  std::sort(entries_.begin(), entries_.end(), std::greater<>());
}

std::string WeightMultiset::to_string() const {
  std::string out;
  for (auto w : entries_) {
    if (!out.empty()) out += ',';
    out += std::to_string(w);
  }
  return out;
}

WeightMultiset parse_weight_multiset(std::string_view text) {
  std::vector<std::uint64_t> entries;
  for (auto w : parse_int_list(text)) entries.push_back(w < 0 ? static_cast<std::uint64_t>(-w) : static_cast<std::uint64_t>(w));
  return WeightMultiset(std::move(entries));
}

WeightMultiset restrict_to_torus(const RealRep& rep) {
  const unsigned total = rep.total_dim();
  if (total % 2 != 0) {
    throw DomainError("representation " + rep.to_string() + " has odd total dimension " + std::to_string(total) +
                      "; an unpaired trivial line cannot form a real plane");
  }
  std::map<std::int64_t, std::uint64_t> count;
  for (const auto& [d, mult] : rep.multiplicities()) {
    for (const auto& v : real_irrep_complexification(RealIrrep(d))) {
      for (auto w : complex_irrep_weights(v)) count[w] += mult;
    }
  }
  std::vector<std::uint64_t> planes;
  for (const auto& [w, c] : count) {
    if (w <= 0) continue;
    // complexification of a real representation is self-conjugate
    const auto neg = count.find(-w);
    if (neg == count.end() || neg->second != c) throw DomainError("unbalanced torus weights +-" + std::to_string(w));
    planes.insert(planes.end(), c, static_cast<std::uint64_t>(w));
  }
  const auto zeros = count.contains(0) ? count.at(0) : 0;
  planes.insert(planes.end(), zeros / 2, 0);
  return WeightMultiset(std::move(planes));
}

std::string WeightConstraintCheck::reason() const {
  if (ok()) return "ok";
  std::string out;
  if (!bound_ok) out = "a weight exceeds d-1";
  if (!has_small_weight) {
    if (!out.empty()) out += "; ";
    out += "no weight equal to 1 or 2";
  }
  return out;
}

WeightConstraintCheck check_weight_constraints(const WeightMultiset& w, unsigned d) {
  if (d == 0 || d % 2 != 0) throw InvalidArgument("dimension must be a positive even integer, got " + std::to_string(d));
  if (w.size() != d / 2) {
    throw InvalidArgument("dimension " + std::to_string(d) + " needs " + std::to_string(d / 2) + " weights, got " +
                          std::to_string(w.size()));
  }
  WeightConstraintCheck check;
  const auto& e = w.entries();
  check.bound_ok = std::all_of(e.begin(), e.end(), [d](auto x) { return x <= d - 1; });
  check.has_small_weight = std::any_of(e.begin(), e.end(), [](auto x) { return x == 1 || x == 2; });
  return check;
}

std::optional<RealRep> realize_weights(const WeightMultiset& w) {
  std::map<std::uint64_t, std::uint64_t> residual;
  std::uint64_t zero_planes = 0;
  for (auto x : w.entries()) {
    if (x == 0) ++zero_planes;
    else ++residual[x];
  }

  RealRep rep;
  std::uint64_t lines_used = 0;
  auto take = [&residual](std::uint64_t weight, std::uint64_t copies) {
    auto it = residual.find(weight);
    if (it == residual.end() || it->second < copies) return false;
    it->second -= copies;
    if (it->second == 0) residual.erase(it);
    return true;
  };

  while (!residual.empty()) {
    const auto top = residual.rbegin()->first;
    if (top % 2 == 0) {
      for (std::uint64_t x = 2; x <= top; x += 2) {
        if (!take(x, 1)) return std::nullopt;
      }
      rep.add(RealIrrep(static_cast<unsigned>(top + 1)));
      ++lines_used;
    } else {
      for (std::uint64_t x = 1; x <= top; x += 2) {
        if (!take(x, 2)) return std::nullopt;
      }
      rep.add(RealIrrep(static_cast<unsigned>(2 * (top + 1))));
    }
  }

  const auto lines_available = 2 * zero_planes;
  if (lines_used > lines_available) return std::nullopt;
  rep.add(RealIrrep(1), static_cast<unsigned>(lines_available - lines_used));
  return rep;
}

}  // namespace kappa
