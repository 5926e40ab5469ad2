#include "cbred/divisor.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace cbred {

namespace {

using RDist = std::map<WVec, Rat>;

Rat conformal_weight(const FusionContext& ctx, const WVec& lambda) {
  return casimir(ctx.rs(), lambda) / (2 * Rat(ctx.level() + ctx.rs().dual_coxeter));
}

RDist fold_vector(const FusionContext& ctx, const std::vector<WVec>& weights) {
  RDist v{{WVec(ctx.rs().rank, 0), Rat(1)}};
  for (const WVec& l : weights) {
    RDist next;
    for (const auto& [nu, c] : v)
      for (const auto& [sigma, m] : ctx.product(nu, l)) next[sigma] += c * Rat(m);
    v = std::move(next);
  }
  return v;
}

RDist dist_product(const FusionContext& ctx, const RDist& x, const RDist& y) {
  RDist out;
  for (const auto& [a, ca] : x)
    for (const auto& [b, cb] : y)
      for (const auto& [nu, m] : ctx.product(a, b)) out[nu] += ca * cb * Rat(m);
  return out;
}

// sum_nu x(nu) y(nu*) = vacuum multiplicity of x * y.
Rat rank_pairing(const FusionContext& ctx, const RDist& x, const RDist& y) {
  Rat s = 0;
  for (const auto& [nu, c] : x) {
    auto it = y.find(ctx.dual(nu));
    if (it != y.end()) s += c * it->second;
  }
  return s;
}

RDist casimir_weighted(const FusionContext& ctx, const RDist& x) {
  RDist out;
  for (const auto& [nu, c] : x) {
    Rat w = conformal_weight(ctx, nu);
    if (w != 0) out[nu] = c * w;
  }
  return out;
}

// Degree of the restriction to an F-curve whose four legs carry the fusion
// vectors v1..v4 (multilinear extension of the 4-point degree).
Rat fcurve_degree_multilinear(const FusionContext& ctx, const RDist& v1, const RDist& v2,
                              const RDist& v3, const RDist& v4) {
  RDist p12 = dist_product(ctx, v1, v2);
  RDist p34 = dist_product(ctx, v3, v4);
  RDist p13 = dist_product(ctx, v1, v3);
  RDist p24 = dist_product(ctx, v2, v4);
  RDist p14 = dist_product(ctx, v1, v4);
  RDist p23 = dist_product(ctx, v2, v3);

  Rat term1 = rank_pairing(ctx, dist_product(ctx, casimir_weighted(ctx, v1), v2), p34) +
              rank_pairing(ctx, dist_product(ctx, v1, casimir_weighted(ctx, v2)), p34) +
              rank_pairing(ctx, dist_product(ctx, casimir_weighted(ctx, v3), v4), p12) +
              rank_pairing(ctx, dist_product(ctx, v3, casimir_weighted(ctx, v4)), p12);

  Rat term2 = 0;
  auto pair_term = [&](const RDist& x, const RDist& y) {
    for (const auto& [nu, c] : x) {
      auto it = y.find(ctx.dual(nu));
      if (it != y.end()) term2 += conformal_weight(ctx, nu) * c * it->second;
    }
  };
  pair_term(p12, p34);
  pair_term(p13, p24);
  pair_term(p14, p23);
  return term1 - term2;
}

}  // namespace

Rat casimir(const RootSystem& rs, const WVec& lambda) {
  WVec shifted(lambda);
  for (int j = 0; j < rs.rank; ++j) shifted[j] += 2;
  return form(rs, lambda, shifted);
}

Int fcurve_degree(const FusionContext& ctx, const WVec& a, const WVec& b, const WVec& c,
                  const WVec& d) {
  for (const WVec* w : {&a, &b, &c, &d}) ctx.require_admissible(*w);
  auto basis = [&](const WVec& w) { return RDist{{w, Rat(1)}}; };
  Rat deg = fcurve_degree_multilinear(ctx, basis(a), basis(b), basis(c), basis(d));
  if (deg.get_den() != 1 || deg < 0)
    throw std::logic_error("fcurve_degree: expected a nonnegative integer, got " + rat_str(deg));
  return deg.get_num();
}

bool DivisorClass::is_zero() const {
  for (const Rat& c : coeffs)
    if (c != 0) return false;
  return true;
}

long boundary_fcurve_pairing(long n, const std::vector<long>& leg_sizes, long j) {
  if (leg_sizes.size() != 4) throw std::invalid_argument("F-curve needs four legs");
  auto side = [&](long size) { return std::min(size, n - size); };
  long v = 0;
  // The three spine nodes: splits {a,b | c,d} pairing leg 0 with each other leg.
  for (int other = 1; other < 4; ++other) {
    long s = leg_sizes[0] + leg_sizes[other];
    if (side(s) == j) ++v;
  }
  // The attaching divisors of the legs themselves.
  for (long s : leg_sizes)
    if (s >= 2 && side(s) == j) --v;
  return v;
}

DivisorClass divisor_class_symmetrized(const FusionContext& ctx, const std::vector<WVec>& lambdas) {
  const long n = static_cast<long>(lambdas.size());
  DivisorClass cls;
  cls.n_points = n;
  const long basis_len = n / 2 - 1;
  if (basis_len < 1) return cls;  // no boundary divisors below five... four points
  cls.coeffs.assign(basis_len, 0);
  for (const WVec& l : lambdas) ctx.require_admissible(l);

  std::map<std::vector<WVec>, RDist> fold_memo;
  auto leg_vector = [&](const std::vector<int>& idx) -> const RDist& {
    std::vector<WVec> key;
    for (int i : idx) key.push_back(lambdas[i]);
    std::sort(key.begin(), key.end());
    auto it = fold_memo.find(key);
    if (it == fold_memo.end()) it = fold_memo.emplace(key, fold_vector(ctx, key)).first;
    return it->second;
  };

  // SD . F for the representative F-curves with leg sizes (1, 1, a, n-2-a):
  // sum over ordered assignments of index sets to the legs, weighted by the
  // internal orderings each assignment absorbs.
  QMat pairing(basis_len, QVec(basis_len, 0));
  QVec rhs(basis_len, 0);
  for (long a = 1; a <= basis_len; ++a) {
    std::vector<long> sizes{1, 1, a, n - 2 - a};
    Int orderings = 1;
    for (long s : sizes)
      for (long f = 2; f <= s; ++f) orderings *= f;

    Rat total = 0;
    std::vector<int> all(n);
    for (long i = 0; i < n; ++i) all[i] = static_cast<int>(i);
    // Legs 1 and 2 are single points; leg 3 is an a-subset of the rest.
    for (int i1 : all) {
      for (int i2 : all) {
        if (i2 == i1) continue;
        std::vector<int> rest;
        for (int i : all)
          if (i != i1 && i != i2) rest.push_back(i);
        std::vector<int> pick(a);
        auto rec = [&](auto&& self, long pos, long start) -> void {
          if (pos == a) {
            std::vector<int> leg3(pick.begin(), pick.end());
            std::vector<int> leg4;
            for (int i : rest)
              if (std::find(leg3.begin(), leg3.end(), i) == leg3.end()) leg4.push_back(i);
            total += fcurve_degree_multilinear(ctx, leg_vector({i1}), leg_vector({i2}),
                                               leg_vector(leg3), leg_vector(leg4));
            return;
          }
          for (long v = start; v < static_cast<long>(rest.size()); ++v) {
            pick[pos] = rest[v];
            self(self, pos + 1, v + 1);
          }
        };
        rec(rec, 0, 0);
      }
    }
    rhs[a - 1] = total * Rat(orderings);
    for (long j = 2; j <= basis_len + 1; ++j)
      pairing[a - 1][j - 2] = boundary_fcurve_pairing(n, sizes, j);
  }

  cls.coeffs = qmat_apply(qmat_inverse(pairing), rhs);
  return cls;
}

DivisorRelationReport check_divisor_relation(const WeightData& wd, const FaceSpec& face,
                                             bool force) {
  ReducedData red = reduce(wd, face, force);
  const long d0 = red.shift ? red.shift->d_0 : 0;

  DivisorRelationReport rep;
  std::vector<WVec> ambient(wd.weights);
  for (long c = 0; c < d0; ++c) ambient.emplace_back(wd.rs->rank, 0);
  rep.n_points = static_cast<long>(ambient.size());
  rep.lhs = divisor_class_symmetrized(*shared_context(*wd.rs, wd.level), ambient);

  for (const ReducedFactor& f : red.factors) {
    RootSystem local = build_root_system(f.type_label, f.rank);
    auto ctx = shared_context(local, f.level);
    rep.factor_ranks.push_back(rank_genus0(*ctx, f.weights).rank);
    rep.factor_classes.push_back(divisor_class_symmetrized(*ctx, f.weights));
  }

  rep.rhs.n_points = rep.n_points;
  rep.rhs.coeffs.assign(rep.lhs.coeffs.size(), 0);
  for (size_t j = 0; j < rep.factor_classes.size(); ++j) {
    Int scale = 1;
    for (size_t i = 0; i < rep.factor_ranks.size(); ++i)
      if (i != j) scale *= rep.factor_ranks[i];
    for (size_t c = 0; c < rep.rhs.coeffs.size(); ++c)
      rep.rhs.coeffs[c] += Rat(scale) * rep.factor_classes[j].coeffs[c];
  }
  rep.equal = rep.lhs == rep.rhs;
  return rep;
}

}  // namespace cbred
