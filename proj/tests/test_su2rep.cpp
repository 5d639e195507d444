#include "kappa/su2rep.hpp"

#include "kappa/arith.hpp"
#include "oracles.hpp"

#include <gtest/gtest.h>

#include <numeric>

using namespace kappa;

namespace {

RealRep rep_of(const std::vector<unsigned>& dims) {
  RealRep r;
  for (auto d : dims) r.add(RealIrrep(d));
  return r;
}

}  // namespace

TEST(ComplexIrrep, Weights) {
  EXPECT_EQ(complex_irrep_weights({1}), (std::vector<std::int64_t>{-1, 1}));
  EXPECT_EQ(complex_irrep_weights({0}), (std::vector<std::int64_t>{0}));
  EXPECT_EQ(complex_irrep_weights({4}), (std::vector<std::int64_t>{-4, -2, 0, 2, 4}));
}

TEST(ComplexIrrep, WeightsSymmetricAndSumToZero) {
  for (unsigned t = 0; t < 40; ++t) {
    const auto w = complex_irrep_weights({t});
    ASSERT_EQ(w.size(), t + 1);
    EXPECT_EQ(std::accumulate(w.begin(), w.end(), std::int64_t{0}), 0);
    for (std::size_t j = 0; j < w.size(); ++j) EXPECT_EQ(w[j], -w[w.size() - 1 - j]);
  }
}

TEST(RealIrrep, Complexification) {
  EXPECT_EQ(real_irrep_complexification(RealIrrep(3)), (std::vector<ComplexIrrep>{{2}}));
  EXPECT_EQ(real_irrep_complexification(RealIrrep(4)), (std::vector<ComplexIrrep>{{1}, {1}}));
  EXPECT_THROW(RealIrrep(6), DomainError);
  EXPECT_THROW(RealIrrep(2), DomainError);
  EXPECT_THROW(RealIrrep(0), InvalidArgument);
}

TEST(RealIrrep, ComplexificationPreservesDimension) {
  for (unsigned d = 1; d <= 64; ++d) {
    if (!RealIrrep::exists(d)) continue;
    unsigned total = 0;
    for (const auto& v : real_irrep_complexification(RealIrrep(d))) total += v.dim();
    EXPECT_EQ(total, d);
  }
}

TEST(RestrictToTorus, Examples) {
  EXPECT_EQ(restrict_to_torus(rep_of({4})), (WeightMultiset{1, 1}));
  EXPECT_EQ(restrict_to_torus(rep_of({3, 1})), (WeightMultiset{2, 0}));
  EXPECT_THROW(restrict_to_torus(rep_of({1})), DomainError);
  try {
    restrict_to_torus(rep_of({3}));
    FAIL();
  } catch (const DomainError& e) {
    EXPECT_NE(std::string(e.what()).find("odd total dimension"), std::string::npos);
  }
}

TEST(RestrictToTorus, MatchesIndependentWeightCount) {
  for (unsigned dim = 2; dim <= 20; dim += 2) {
    oracle::enumerate_real_reps(dim, [](const std::vector<unsigned>& dims) {
      EXPECT_EQ(restrict_to_torus(rep_of(dims)).entries(), oracle::torus_planes(dims));
    });
  }
}

TEST(CheckWeightConstraints, Examples) {
  EXPECT_TRUE(check_weight_constraints({1, 1}, 4).ok());
  const auto c = check_weight_constraints({3, 3}, 4);
  EXPECT_FALSE(c.ok());
  EXPECT_TRUE(c.bound_ok);
  EXPECT_FALSE(c.has_small_weight);
  EXPECT_NE(c.reason().find("1 or 2"), std::string::npos);
  EXPECT_TRUE(check_weight_constraints({2, 0}, 4).ok());
  const auto big = check_weight_constraints({5, 1}, 4);
  EXPECT_FALSE(big.bound_ok);
  EXPECT_NE(big.reason().find("d-1"), std::string::npos);
  EXPECT_THROW(check_weight_constraints({1, 1, 1}, 4), InvalidArgument);
}

TEST(RealizeWeights, Examples) {
  EXPECT_EQ(realize_weights({1, 1}), rep_of({4}));
  EXPECT_EQ(realize_weights({2, 0}), rep_of({3, 1}));
  EXPECT_FALSE(realize_weights({4}).has_value());
  EXPECT_FALSE(realize_weights({1}).has_value());
  EXPECT_FALSE(realize_weights({2}).has_value());  // V^3 needs a trivial line to pair with
  EXPECT_EQ(realize_weights({0}), rep_of({1, 1}));
  EXPECT_EQ(realize_weights({}), RealRep{});
}

TEST(RealizeWeights, FeasibleExactlyWhenSomeRepRestrictsToIt) {
  // Oracle: the set of all restrictions of reps with dimension <= 16.
  std::set<std::vector<std::uint64_t>> reachable;
  for (unsigned dim = 2; dim <= 16; dim += 2) {
    oracle::enumerate_real_reps(dim, [&](const std::vector<unsigned>& dims) {
      reachable.insert(oracle::torus_planes(dims));
    });
  }
  // All weight multisets with up to 8 planes and entries <= 7.
  std::function<void(std::vector<std::uint64_t>&, std::uint64_t)> rec = [&](std::vector<std::uint64_t>& w,
                                                                               std::uint64_t max) {
    if (!w.empty()) {
      const WeightMultiset ms(w);
      const auto r = realize_weights(ms);
      EXPECT_EQ(r.has_value(), reachable.contains(ms.entries())) << ms.to_string();
      if (r) EXPECT_EQ(restrict_to_torus(*r), ms);
    }
    if (w.size() == 8) return;
    for (std::uint64_t x = 0; x <= max; ++x) {
      w.push_back(x);
      rec(w, x);
      w.pop_back();
    }
  };
  std::vector<std::uint64_t> w;
  rec(w, 7);
}

TEST(ParseRealRep, Syntax) {
  const auto r = parse_real_rep("V3 + v4 + 2*V1");
  EXPECT_EQ(r.total_dim(), 9U);
  EXPECT_EQ(r.to_string(), "V4+V3+2*V1");
  EXPECT_EQ(parse_real_rep(r.to_string()), r);
  EXPECT_THROW(parse_real_rep("V6"), DomainError);
  EXPECT_THROW(parse_real_rep("W3"), InvalidArgument);
  EXPECT_THROW(parse_real_rep("V3+"), InvalidArgument);
  EXPECT_THROW(parse_real_rep(""), InvalidArgument);
}

TEST(WeightMultiset, ParseDropsSigns) {
  EXPECT_EQ(parse_weight_multiset("-2, 1,0"), (WeightMultiset{2, 1, 0}));
}
