// Tensor decomposition, fusion tables, genus-zero ranks, invariant
// dimensions, and the Verlinde oracle.  Dimension bookkeeping and the
// trace-formula oracle serve as the independent checks on the fusion path.
#include <doctest.h>

#include "cbred/fusion.hpp"
#include "cbred/verlinde.hpp"
#include "cbred/weyl.hpp"

#include <random>

using namespace cbred;

namespace {

WVec wv(std::initializer_list<long> v) { return WVec(v); }

std::vector<WVec> repeat(const WVec& w, int times) { return std::vector<WVec>(times, w); }

std::vector<WVec> cat(std::vector<WVec> a, const std::vector<WVec>& b) {
  a.insert(a.end(), b.begin(), b.end());
  return a;
}

}  // namespace

TEST_CASE("weyl dimensions of familiar modules") {
  RootSystem a1 = build_root_system('A', 1);
  for (long n = 0; n <= 6; ++n) CHECK(weyl_dimension(a1, wv({n})) == n + 1);
  RootSystem a2 = build_root_system('A', 2);
  CHECK(weyl_dimension(a2, wv({1, 0})) == 3);
  CHECK(weyl_dimension(a2, wv({1, 1})) == 8);
  CHECK(weyl_dimension(a2, wv({3, 0})) == 10);
  RootSystem a3 = build_root_system('A', 3);
  CHECK(weyl_dimension(a3, wv({1, 0, 0})) == 4);
  CHECK(weyl_dimension(a3, wv({0, 1, 0})) == 6);
  CHECK(weyl_dimension(a3, wv({1, 0, 1})) == 15);
  CHECK(weyl_dimension(a3, wv({4, 1, 0})) == 140);
  RootSystem c2 = build_root_system('C', 2);
  CHECK(weyl_dimension(c2, wv({1, 0})) == 4);
  CHECK(weyl_dimension(c2, wv({0, 1})) == 5);
}

TEST_CASE("freudenthal multiplicities") {
  RootSystem a2 = build_root_system('A', 2);
  auto adj = dominant_weight_multiplicities(a2, wv({1, 1}));
  CHECK(adj.at(wv({1, 1})) == 1);
  CHECK(adj.at(wv({0, 0})) == 2);

  RootSystem a3 = build_root_system('A', 3);
  auto adj3 = dominant_weight_multiplicities(a3, wv({1, 0, 1}));
  CHECK(adj3.at(wv({0, 0, 0})) == 3);

  // Total dimension recovered through orbit sizes.
  Int total = 0;
  for (const auto& [mu, m] : adj3) total += m * Int(weyl_orbit(a3, mu).size());
  CHECK(total == weyl_dimension(a3, wv({1, 0, 1})));
}

TEST_CASE("tensor decomposition: worked examples and dimension bookkeeping") {
  RootSystem a1 = build_root_system('A', 1);
  auto cg = tensor_decompose(a1, wv({1}), wv({1}));
  CHECK(cg.size() == 2);
  CHECK(cg.at(wv({0})) == 1);
  CHECK(cg.at(wv({2})) == 1);

  RootSystem a2 = build_root_system('A', 2);
  auto t = tensor_decompose(a2, wv({1, 0}), wv({0, 1}));
  CHECK(t.size() == 2);
  CHECK(t.at(wv({0, 0})) == 1);
  CHECK(t.at(wv({1, 1})) == 1);

  RootSystem a3 = build_root_system('A', 3);
  auto u = tensor_decompose(a3, wv({2, 0, 1}), wv({0, 0, 0}));
  CHECK(u.size() == 1);
  CHECK(u.at(wv({2, 0, 1})) == 1);

  std::mt19937 rng(42);
  std::uniform_int_distribution<long> coord(0, 2);
  for (const RootSystem& rs : {a2, a3}) {
    for (int trial = 0; trial < 8; ++trial) {
      WVec a(rs.rank), b(rs.rank);
      for (int i = 0; i < rs.rank; ++i) {
        a[i] = coord(rng);
        b[i] = coord(rng);
      }
      Int sum = 0;
      for (const auto& [nu, m] : tensor_decompose(rs, a, b)) sum += m * weyl_dimension(rs, nu);
      CHECK(sum == weyl_dimension(rs, a) * weyl_dimension(rs, b));
    }
  }
}

TEST_CASE("fusion coefficients at low level") {
  RootSystem a1 = build_root_system('A', 1);
  FusionContext l1(a1, 1);
  CHECK(l1.coefficient(wv({1}), wv({1}), wv({0})) == 1);
  CHECK(l1.coefficient(wv({1}), wv({1}), wv({2})) == 0);  // truncated
  CHECK_THROWS_AS(l1.product(wv({2}), wv({1})), std::domain_error);

  FusionContext l2(a1, 2);
  CHECK(l2.coefficient(wv({1}), wv({1}), wv({2})) == 1);
  CHECK(l2.coefficient(wv({1}), wv({0}), wv({1})) == 1);
  CHECK(l2.coefficient(wv({2}), wv({2}), wv({0})) == 1);
  CHECK(l2.coefficient(wv({2}), wv({2}), wv({2})) == 0);
}

TEST_CASE("fusion symmetry and associativity") {
  RootSystem a1 = build_root_system('A', 1);
  RootSystem a2 = build_root_system('A', 2);
  auto run = [&](const RootSystem& rs, long level) {
    FusionContext ctx(rs, level);
    const auto& pts = ctx.weights_at_level();
    for (const WVec& a : pts)
      for (const WVec& b : pts) {
        for (const WVec& c : pts) {
          CHECK(ctx.coefficient(a, b, c) == ctx.coefficient(b, a, c));
          // vacuum column: N_{a,0}^c = delta
          CHECK(ctx.coefficient(a, WVec(rs.rank, 0), c) == (a == c ? 1 : 0));
        }
        for (const WVec& c : pts)
          for (const WVec& d : pts) {
            Int lhs = 0, rhs = 0;
            for (const WVec& s : pts) {
              lhs += ctx.coefficient(a, b, s) * ctx.coefficient(s, c, d);
              rhs += ctx.coefficient(b, c, s) * ctx.coefficient(a, s, d);
            }
            CHECK(lhs == rhs);
          }
      }
  };
  for (long l = 1; l <= 4; ++l) run(a1, l);
  for (long l = 1; l <= 2; ++l) run(a2, l);
}

TEST_CASE("genus-zero ranks: worked sl4/sl2/sl3 values") {
  RootSystem a3 = build_root_system('A', 3);
  RootSystem a1 = build_root_system('A', 1);
  RootSystem a2 = build_root_system('A', 2);

  FusionContext sl4_5(a3, 5);
  auto ex1 = cat(repeat(wv({4, 1, 0}), 2), repeat(wv({1, 0, 1}), 4));
  CHECK(rank_genus0(sl4_5, ex1).rank == 10);

  FusionContext sl2_5(a1, 5);
  CHECK(rank_genus0(sl2_5, repeat(wv({1}), 6)).rank == 5);
  CHECK(rank_genus0(sl2_5, cat(repeat(wv({5}), 2), repeat(wv({1}), 4))).rank == 2);

  FusionContext sl4_2(a3, 2);
  auto ex2 = cat(repeat(wv({0, 0, 2}), 4), repeat(wv({1, 0, 1}), 2));
  CHECK(rank_genus0(sl4_2, ex2).rank == 1);
  FusionContext sl4_3(a3, 3);
  CHECK(rank_genus0(sl4_3, ex2).rank == 12);

  auto ex2_reduced = cat(cat(repeat(wv({0, 2}), 4), repeat(wv({1, 1}), 2)), {wv({2, 0})});
  FusionContext sl3_2(a2, 2);
  CHECK(rank_genus0(sl3_2, ex2_reduced).rank == 1);
  FusionContext sl3_3(a2, 3);
  CHECK(rank_genus0(sl3_3, ex2_reduced).rank == 24);

  // Degenerate point counts.
  CHECK(rank_genus0(sl2_5, {}).rank == 1);
  CHECK(rank_genus0(sl2_5, {wv({0})}).rank == 1);
  CHECK(rank_genus0(sl2_5, {wv({1})}).rank == 0);
  CHECK(rank_genus0(sl2_5, {wv({1}), wv({1})}).rank == 1);
}

TEST_CASE("invariant dimensions: worked values and level saturation") {
  RootSystem a3 = build_root_system('A', 3);
  RootSystem a2 = build_root_system('A', 2);
  RootSystem a1 = build_root_system('A', 1);

  auto ex2 = cat(repeat(wv({0, 0, 2}), 4), repeat(wv({1, 0, 1}), 2));
  CHECK(invariant_dimension(a3, ex2) == 21);

  auto ex2_reduced = cat(cat(repeat(wv({0, 2}), 4), repeat(wv({1, 1}), 2)), {wv({2, 0})});
  CHECK(invariant_dimension(a2, ex2_reduced) == 124);

  CHECK(invariant_dimension(a1, repeat(wv({1}), 6)) == 5);
  CHECK(invariant_dimension(a1, {}) == 1);

  // rank at l = sum <lambda_i, theta> equals the classical invariant count.
  std::mt19937 rng(5);
  std::uniform_int_distribution<long> coord(0, 2);
  std::uniform_int_distribution<int> count(2, 4);
  for (const RootSystem& rs : {a1, a2}) {
    for (int trial = 0; trial < 6; ++trial) {
      std::vector<WVec> lams;
      long total = 0;
      int n = count(rng);
      for (int i = 0; i < n; ++i) {
        WVec l(rs.rank);
        for (int j = 0; j < rs.rank; ++j) l[j] = coord(rng);
        total += level_pairing(rs, l);
        lams.push_back(std::move(l));
      }
      if (total == 0) continue;
      FusionContext ctx(rs, total);
      CHECK(rank_genus0(ctx, lams).rank == invariant_dimension(rs, lams));
    }
  }
}

TEST_CASE("rank properties: propagation and level monotonicity") {
  RootSystem a2 = build_root_system('A', 2);
  std::mt19937 rng(11);
  std::uniform_int_distribution<long> coord(0, 1);
  for (int trial = 0; trial < 6; ++trial) {
    std::vector<WVec> lams;
    for (int i = 0; i < 4; ++i) lams.push_back(WVec{coord(rng), coord(rng)});
    for (long l = 2; l <= 4; ++l) {
      FusionContext ctx(a2, l);
      FusionContext next(a2, l + 1);
      Int r = rank_genus0(ctx, lams).rank;
      CHECK(rank_genus0(ctx, cat(lams, {wv({0, 0})})).rank == r);
      CHECK(rank_genus0(next, lams).rank >= r);
    }
  }
}

TEST_CASE("verlinde oracle agrees with the fusion path") {
  RootSystem a1 = build_root_system('A', 1);
  FusionContext l1(a1, 1);
  CHECK(verlinde_rank_oracle(l1, repeat(wv({1}), 4)) == 1);
  FusionContext l2(a1, 2);
  CHECK(verlinde_rank_oracle(l2, repeat(wv({1}), 4)) == 2);

  RootSystem a3 = build_root_system('A', 3);
  FusionContext sl4_5(a3, 5);
  auto ex1 = cat(repeat(wv({4, 1, 0}), 2), repeat(wv({1, 0, 1}), 4));
  CHECK(verlinde_rank_oracle(sl4_5, ex1) == 10);

  // Deterministic mixed sample across A1/A2/A3 at l <= 3, n <= 6.
  std::mt19937 rng(13);
  for (auto [t, r] : std::vector<std::pair<char, int>>{{'A', 1}, {'A', 2}, {'A', 3}}) {
    RootSystem rs = build_root_system(t, r);
    for (long l = 1; l <= 3; ++l) {
      FusionContext ctx(rs, l);
      const auto& pts = ctx.weights_at_level();
      std::uniform_int_distribution<size_t> pick(0, pts.size() - 1);
      std::uniform_int_distribution<int> count(0, 6);
      for (int trial = 0; trial < 5; ++trial) {
        std::vector<WVec> lams;
        int n = count(rng);
        for (int i = 0; i < n; ++i) lams.push_back(pts[pick(rng)]);
        CHECK(rank_genus0(ctx, lams).rank == verlinde_rank_oracle(ctx, lams));
      }
    }
  }
}
