// Classical finite-dimensional character combinatorics: dominant weight
// multiplicities by the Freudenthal recursion, Weyl dimensions, and tensor
// product decomposition by the Klimyk rule over the smaller factor's weight
// system.
#pragma once

#include "cbred/root_system.hpp"

#include <map>

namespace cbred {

using WeightDist = std::map<WVec, Int>;

// Multiplicities of the dominant weights of V_lambda.
WeightDist dominant_weight_multiplicities(const RootSystem& rs, const WVec& lambda);

Int weyl_dimension(const RootSystem& rs, const WVec& lambda);

// V_lambda (x) V_mu as a multiset of dominant highest weights.
WeightDist tensor_decompose(const RootSystem& rs, const WVec& lambda, const WVec& mu);

// Multiplicity of the trivial module in V_{lambda_1} (x) ... (x) V_{lambda_n}.
Int invariant_dimension(const RootSystem& rs, const std::vector<WVec>& lambdas);

}  // namespace cbred
