// First-Chern-class bookkeeping for genus-zero conformal-blocks bundles:
// degrees on 4-pointed curves, degrees on arbitrary F-curves by attaching
// ranks at the nodes, and symmetrized divisor classes in the boundary basis
// D_2, ..., D_{floor(n/2)}.
#pragma once

#include "cbred/fusion.hpp"
#include "cbred/polytope.hpp"
#include "cbred/reduction.hpp"

#include <vector>

namespace cbred {

// <lambda, lambda + 2 rho>.
Rat casimir(const RootSystem& rs, const WVec& lambda);

// Degree of the conformal-blocks bundle on the 4-pointed rational curve.
Int fcurve_degree(const FusionContext& ctx, const WVec& a, const WVec& b, const WVec& c,
                  const WVec& d);

struct DivisorClass {
  long n_points = 0;
  std::vector<Rat> coeffs;  // on D_2 .. D_{floor(n/2)}

  bool operator==(const DivisorClass& o) const = default;
  bool is_zero() const;
};

DivisorClass divisor_class_symmetrized(const FusionContext& ctx, const std::vector<WVec>& lambdas);

// Intersection of the symmetrized boundary class D_j with the F-curve whose
// four legs have the given sizes (exposed for tests).
long boundary_fcurve_pairing(long n, const std::vector<long>& leg_sizes, long j);

struct DivisorRelationReport {
  long n_points = 0;
  DivisorClass lhs;
  DivisorClass rhs;
  std::vector<DivisorClass> factor_classes;
  std::vector<Int> factor_ranks;
  bool equal = false;
};

// Evaluates SD_g = sum_j (prod_{i != j} rk_i) SD_j after reducing on the
// face; for positive-degree faces both sides are computed on n + d_0 points
// (zero weights appended on the ambient side) and the report records the
// failure the theorem predicts there.
DivisorRelationReport check_divisor_relation(const WeightData& wd, const FaceSpec& face,
                                             bool force = false);

}  // namespace cbred
