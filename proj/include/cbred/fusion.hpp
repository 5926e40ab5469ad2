// Level-l fusion for a simple type: the Kac-Walton fold of classical tensor
// multiplicities through the affine alcove at shifted level l + h_vee, plus
// the n-point genus-zero rank built by folding pairwise fusion products.
#pragma once

#include "cbred/characters.hpp"
#include "cbred/root_system.hpp"

#include <map>
#include <memory>
#include <mutex>
#include <string>
#include <vector>

namespace cbred {

class FusionContext {
 public:
  FusionContext(RootSystem rs, long level);

  const RootSystem& rs() const { return rs_; }
  long level() const { return level_; }
  const std::vector<WVec>& weights_at_level() const { return weights_; }
  bool admissible(const WVec& w) const;
  void require_admissible(const WVec& w) const;

  // Full fusion product lambda * mu; memoized, thread-safe.
  const WeightDist& product(const WVec& lambda, const WVec& mu) const;
  Int coefficient(const WVec& lambda, const WVec& mu, const WVec& nu) const;

  WVec dual(const WVec& lambda) const;

 private:
  RootSystem rs_;
  long level_;
  std::vector<WVec> weights_;
  mutable std::mutex mu_;
  mutable std::map<std::pair<WVec, WVec>, std::shared_ptr<const WeightDist>> memo_;
};

struct RankReport {
  Int rank;
  std::string algebra;
  long level = 0;
  std::vector<WVec> weights;
};

// Multiplicity of the vacuum in the iterated fusion product of the given
// admissible weights; n = 0 gives 1.
RankReport rank_genus0(const FusionContext& ctx, const std::vector<WVec>& lambdas);

}  // namespace cbred
