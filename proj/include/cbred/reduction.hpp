// Rank reduction on a TW-face: twist the weights by the face's minimal coset
// representatives, restrict to the simple factors of the Levi, scale levels
// by the Dynkin indices, and for positive-degree faces append d_0 copies of
// l mu_P* before comparing ranks.
#pragma once

#include "cbred/fusion.hpp"
#include "cbred/levi.hpp"
#include "cbred/polytope.hpp"

#include <optional>

namespace cbred {

struct ReducedFactor {
  char type_label;
  int rank;
  long index;  // Dynkin index
  long level;  // index * ambient level
  std::vector<int> ambient_nodes;  // 1-based, Bourbaki order of the factor
  std::vector<WVec> weights;
};

struct ReducedData {
  std::vector<ReducedFactor> factors;
  std::optional<DegreeShift> shift;  // present iff face degree > 0
  std::vector<WVec> twisted;         // audit trail: u_i^{-1} lambda_i
};

// Throws std::domain_error when the data is off the face (unless force) and
// std::logic_error when l mu_P* fails to restrict integrally.
ReducedData reduce(const WeightData& wd, const FaceSpec& face, bool force = false);

struct FactorizationReport {
  Int lhs_rank;
  std::vector<Int> factor_ranks;
  Int product;
  bool equal = false;
  ReducedData reduced;
};

FactorizationReport verify_factorization(const WeightData& wd, const FaceSpec& face,
                                         bool force = false);

// Shared fusion contexts, memoized by (algebra, level); verification sweeps
// reuse the tables they fill.
std::shared_ptr<const FusionContext> shared_context(const RootSystem& rs, long level);

}  // namespace cbred
