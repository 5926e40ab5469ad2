// Independent cross-check for genus-zero ranks: the Verlinde trace formula
// evaluated by high-precision character sums at the special alcove points,
// with verified rounding to an integer.  Shares nothing with the fusion-table
// path except the root system itself.
#pragma once

#include "cbred/fusion.hpp"

namespace cbred {

// Throws std::domain_error when the Weyl group or weight set is too large for
// dense evaluation, and std::logic_error if the precision verification fails
// (the value is never silently rounded).
Int verlinde_rank_oracle(const FusionContext& ctx, const std::vector<WVec>& lambdas);

}  // namespace cbred
