// Littlewood-Richardson and quantum-product checks.  Independent oracles:
// exact Schur-polynomial evaluation at random rational points (bialternant
// determinant), the Z[T,q]/(T^n - q) model for projective space, and the
// e-coordinate permutation model for subset_to_weyl.
#include <doctest.h>

#include "cbred/qschubert.hpp"

#include <numeric>
#include <random>

using namespace cbred;

namespace {

Rat schur_eval(const Partition& p, const std::vector<Rat>& x) {
  // det(x_i^{p_j + m - j}) / det(x_i^{m - j}) with pairwise distinct x.
  const int m = static_cast<int>(x.size());
  if (static_cast<int>(p.size()) > m) return 0;
  auto det = [&](const std::vector<long>& exps) {
    QMat mat(m, QVec(m));
    for (int i = 0; i < m; ++i)
      for (int j = 0; j < m; ++j) {
        Rat v = 1;
        for (long e = 0; e < exps[j]; ++e) v *= x[i];
        mat[i][j] = v;
      }
    // Gaussian elimination determinant.
    Rat d = 1;
    for (int col = 0; col < m; ++col) {
      int piv = col;
      while (piv < m && mat[piv][col] == 0) ++piv;
      if (piv == m) return Rat(0);
      if (piv != col) {
        std::swap(mat[piv], mat[col]);
        d = -d;
      }
      d *= mat[col][col];
      for (int row = col + 1; row < m; ++row) {
        Rat f = mat[row][col] / mat[col][col];
        for (int j = col; j < m; ++j) mat[row][j] -= f * mat[col][j];
      }
    }
    return d;
  };
  std::vector<long> top(m), bottom(m);
  for (int j = 0; j < m; ++j) {
    long part = j < static_cast<int>(p.size()) ? p[j] : 0;
    top[j] = part + m - 1 - j;
    bottom[j] = m - 1 - j;
  }
  return det(top) / det(bottom);
}

}  // namespace

TEST_CASE("subset/partition dictionary") {
  SchubertClass big = subset_class(1, 4, {4});
  CHECK(big.partition == Partition{});
  CHECK(big.codim == 0);
  SchubertClass pt = subset_class(1, 4, {1});
  CHECK(pt.partition == Partition{3});
  CHECK(pt.codim == 3);
  SchubertClass mid = subset_class(2, 4, {2, 3});
  CHECK(mid.partition == Partition{1, 1});
  CHECK(mid.codim == 2);

  // Round trip through the partition side.
  for (int i1 = 1; i1 <= 4; ++i1)
    for (int i2 = i1 + 1; i2 <= 4; ++i2) {
      SchubertClass c = subset_class(2, 4, {i1, i2});
      CHECK(partition_class(2, 4, c.partition).subset == c.subset);
    }

  CHECK_THROWS_AS(subset_class(2, 4, {3, 3}), std::invalid_argument);
  CHECK_THROWS_AS(subset_class(2, 4, {0, 3}), std::invalid_argument);
  CHECK_THROWS_AS(partition_class(1, 4, Partition{4}), std::invalid_argument);
}

TEST_CASE("littlewood-richardson coefficients") {
  CHECK(lr_coefficient({1}, {1}, {1, 1}) == 1);
  CHECK(lr_coefficient({1}, {1}, {2}) == 1);
  CHECK(lr_coefficient({2, 1}, {}, {2, 1}) == 1);
  CHECK(lr_coefficient({2, 1}, {2, 1}, {3, 2, 1}) == 2);
  CHECK(lr_coefficient({2, 1}, {2, 1}, {3, 3}) == 1);
  CHECK(lr_coefficient({1}, {1}, {3}) == 0);

  // Oracle: exact evaluation of both sides at random rational points.
  std::mt19937 rng(23);
  std::uniform_int_distribution<long> num(1, 9);
  std::vector<std::pair<Partition, Partition>> pairs{
      {{1}, {1}}, {{2}, {1, 1}}, {{2, 1}, {2, 1}}, {{2, 2}, {2, 1}}, {{3, 1}, {2}}};
  for (const auto& [a, b] : pairs) {
    auto product = schur_multiply(a, b, 4);
    for (int trial = 0; trial < 3; ++trial) {
      std::vector<Rat> x;
      while (x.size() < 4) {
        Rat v(num(rng), num(rng));
        v.canonicalize();
        bool fresh = true;
        for (const Rat& seen : x) fresh = fresh && seen != v;
        if (fresh) x.push_back(v);
      }
      Rat lhs = schur_eval(a, x) * schur_eval(b, x);
      Rat rhs = 0;
      for (const auto& [c, m] : product) rhs += Rat(m) * schur_eval(c, x);
      CHECK(lhs == rhs);
    }
  }
}

TEST_CASE("quantum products in projective space follow Z[T,q]/(T^n - q)") {
  for (int n : {2, 4}) {
    for (long a = 0; a < n; ++a)
      for (long b = 0; b < n; ++b) {
        std::vector<SchubertClass> cls{partition_class(1, n, a ? Partition{a} : Partition{}),
                                       partition_class(1, n, b ? Partition{b} : Partition{})};
        QuantumProductResult r = quantum_multi_product_pt(1, n, cls);
        long total = a + b;
        long d = total / n;
        long rem = total % n;
        // Expect exactly one term: q^d T^rem.
        CHECK(r.expansion.size() == 1);
        auto [key, coeff] = *r.expansion.begin();
        CHECK(key.first == d);
        CHECK(key.second == (rem ? Partition{rem} : Partition{}));
        CHECK(coeff == 1);
      }
  }
}

TEST_CASE("quantum products in Gr(2,4)") {
  auto cls = [&](const Partition& p) { return partition_class(2, 4, p); };

  // sigma_1 * sigma_{2,1} = sigma_{2,2} + q
  QuantumProductResult r = quantum_multi_product_pt(2, 4, {cls({1}), cls({2, 1})});
  CHECK(r.expansion.size() == 2);
  CHECK(r.expansion.at({0, Partition{2, 2}}) == 1);
  CHECK(r.expansion.at({1, Partition{}}) == 1);

  // [pt] * [pt] = q^2
  QuantumProductResult pt2 = quantum_multi_product_pt(2, 4, {cls({2, 2}), cls({2, 2})});
  CHECK(pt2.expansion.size() == 1);
  CHECK(pt2.expansion.at({2, Partition{}}) == 1);

  // sigma_{1,1} * sigma_2 = q
  QuantumProductResult mix = quantum_multi_product_pt(2, 4, {cls({1, 1}), cls({2})});
  CHECK(mix.expansion.size() == 1);
  CHECK(mix.expansion.at({1, Partition{}}) == 1);

  // Classical Poincare duality inside the box.
  std::vector<Partition> box{{}, {1}, {2}, {1, 1}, {2, 1}, {2, 2}};
  for (const Partition& a : box) {
    int perfect = 0;
    for (const Partition& b : box) {
      long total = std::accumulate(a.begin(), a.end(), 0L) +
                   std::accumulate(b.begin(), b.end(), 0L);
      if (total != 4) continue;
      QuantumProductResult p = quantum_multi_product_pt(2, 4, {cls(a), cls(b)});
      auto it = p.expansion.find({0, Partition{2, 2}});
      Int coeff = it == p.expansion.end() ? Int(0) : it->second;
      CHECK(coeff <= 1);
      if (coeff == 1) ++perfect;
    }
    CHECK(perfect == 1);
  }
}

TEST_CASE("pt-product certification of the worked faces") {
  // Gr(2,4): cells {2,3} x2 and {3,4} x4 multiply to [pt] in degree 0.
  std::vector<SchubertClass> ex1;
  for (int i = 0; i < 2; ++i) ex1.push_back(subset_class(2, 4, {2, 3}));
  for (int i = 0; i < 4; ++i) ex1.push_back(subset_class(2, 4, {3, 4}));
  auto d1 = is_pt_product(2, 4, ex1);
  REQUIRE(d1.has_value());
  CHECK(*d1 == 0);

  // Gr(1,4): {2}, {3} x5 multiply to q [pt].
  std::vector<SchubertClass> ex2{subset_class(1, 4, {2})};
  for (int i = 0; i < 5; ++i) ex2.push_back(subset_class(1, 4, {3}));
  auto d2 = is_pt_product(1, 4, ex2);
  REQUIRE(d2.has_value());
  CHECK(*d2 == 1);

  // Gr(1,2): {1} is the point class, {2} the fundamental class.
  auto d3 = is_pt_product(1, 2, {subset_class(1, 2, {1}), subset_class(1, 2, {2})});
  REQUIRE(d3.has_value());
  CHECK(*d3 == 0);
  CHECK(!is_pt_product(1, 2, {subset_class(1, 2, {2}), subset_class(1, 2, {2})}).has_value());

  // Mixed Grassmannians are rejected.
  CHECK_THROWS_AS(is_pt_product(1, 4, {subset_class(1, 4, {2}), subset_class(1, 2, {1})}),
                  std::invalid_argument);

  // Permutation invariance of the full product.
  std::mt19937 rng(31);
  std::vector<SchubertClass> shuffled(ex1);
  for (int trial = 0; trial < 4; ++trial) {
    std::shuffle(shuffled.begin(), shuffled.end(), rng);
    QuantumProductResult a = quantum_multi_product_pt(2, 4, ex1);
    QuantumProductResult b = quantum_multi_product_pt(2, 4, shuffled);
    CHECK(a.expansion == b.expansion);
  }
}

TEST_CASE("grading forces the surviving degree") {
  std::mt19937 rng(37);
  std::uniform_int_distribution<int> pick(1, 4);
  for (int trial = 0; trial < 20; ++trial) {
    std::vector<SchubertClass> cls;
    long total = 0;
    for (int i = 0; i < 4; ++i) {
      int i1 = pick(rng);
      int i2 = pick(rng);
      if (i1 == i2) continue;
      if (i1 > i2) std::swap(i1, i2);
      SchubertClass c = subset_class(2, 4, {i1, i2});
      total += c.codim;
      cls.push_back(std::move(c));
    }
    QuantumProductResult r = quantum_multi_product_pt(2, 4, cls);
    for (const auto& [key, coeff] : r.expansion) {
      long codim = std::accumulate(key.second.begin(), key.second.end(), 0L);
      CHECK(codim + key.first * 4 == total);
      CHECK(coeff > 0);
    }
  }
}

TEST_CASE("subset_to_weyl matches the permutation model") {
  RootSystem a3 = build_root_system('A', 3);

  CHECK(subset_to_weyl(a3, 1, {4}).is_identity());  // big cell
  CHECK(subset_to_weyl(a3, 2, {3, 4}).is_identity());
  CHECK(subset_to_weyl(a3, 1, {1}).length() == 3);  // point class
  CHECK(subset_to_weyl(a3, 2, {2, 3}).length() == 2);

  // Independent check in e-coordinates: u^{-1} acting on a test vector must
  // permute entries by the Grassmannian permutation u(j) = j + lambda_{k+1-j}.
  auto fw_from_e = [](const std::vector<long>& e) {
    WVec w(e.size() - 1);
    for (size_t i = 0; i + 1 < e.size(); ++i) w[i] = e[i] - e[i + 1];
    return w;
  };
  for (int k : {1, 2, 3}) {
    std::vector<int> idx(4 - k);
    std::vector<int> subset(k);
    auto rec = [&](auto&& self, int pos, int start) -> void {
      if (pos == k) {
        SchubertClass sc = subset_class(k, 4, subset);
        WeylElement u = subset_to_weyl(a3, k, subset);
        CHECK(u.length() == static_cast<size_t>(sc.codim));
        // Grassmannian permutation.
        std::vector<int> perm(4);
        std::vector<char> taken(5, 0);
        for (int j = 1; j <= k; ++j) {
          long part = k - j < static_cast<int>(sc.partition.size()) ? sc.partition[k - j] : 0;
          perm[j - 1] = static_cast<int>(j + part);
          taken[perm[j - 1]] = 1;
        }
        for (int pos2 = k, val = 1; pos2 < 4; ++val)
          if (!taken[val]) perm[pos2++] = val;

        std::vector<long> e{17, 5, -3, -19};  // distinct, summing to 0
        std::vector<long> expected(4);
        for (int j = 0; j < 4; ++j) expected[j] = e[perm[j] - 1];
        CHECK(weyl_apply_inverse(a3, u, fw_from_e(e)) == fw_from_e(expected));
        return;
      }
      for (int v = start; v <= 4; ++v) {
        subset[pos] = v;
        self(self, pos + 1, v + 1);
      }
    };
    rec(rec, 0, 1);
  }
}
