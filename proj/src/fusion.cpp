#include "cbred/fusion.hpp"

#include <stdexcept>

namespace cbred {

FusionContext::FusionContext(RootSystem rs, long level) : rs_(std::move(rs)), level_(level) {
  if (level < 0) throw std::invalid_argument("FusionContext: negative level");
  weights_ = enumerate_level_weights(rs_, level_);
}

bool FusionContext::admissible(const WVec& w) const {
  return w.size() == static_cast<size_t>(rs_.rank) && is_dominant(w) &&
         level_pairing(rs_, w) <= level_;
}

void FusionContext::require_admissible(const WVec& w) const {
  if (!admissible(w)) throw std::domain_error("fusion: weight not admissible at level " +
                                              std::to_string(level_));
}

const WeightDist& FusionContext::product(const WVec& lambda, const WVec& mu) const {
  require_admissible(lambda);
  require_admissible(mu);
  auto key = lambda <= mu ? std::make_pair(lambda, mu) : std::make_pair(mu, lambda);
  {
    std::lock_guard<std::mutex> lock(mu_);
    auto it = memo_.find(key);
    if (it != memo_.end()) return *it->second;
  }

  // Kac-Walton: push every classical constituent nu through the affine Weyl
  // group at shifted level L = l + h_vee.  nu + rho is reflected into the
  // interior of the alcove, tracking the sign; wall hits drop out.
  const long L = level_ + rs_.dual_coxeter;
  WeightDist folded;
  for (const auto& [nu, m] : tensor_decompose(rs_, key.first, key.second)) {
    WVec xi(nu);
    for (auto& x : xi) ++x;
    int eps = 1;
    for (int guard = 0;; ++guard) {
      if (guard > 10000) throw std::logic_error("fusion: affine reflection failed to terminate");
      int s = dominant_representative(rs_, xi);
      if (s == 0) { eps = 0; break; }
      eps *= s;
      long t = level_pairing(rs_, xi);
      if (t < L) break;
      if (t == L) { eps = 0; break; }
      for (int j = 0; j < rs_.rank; ++j) xi[j] -= (t - L) * rs_.theta.fw[j];
      eps = -eps;
    }
    if (eps == 0) continue;
    for (auto& x : xi) --x;
    auto it = folded.emplace(std::move(xi), 0).first;
    if (eps > 0)
      it->second += m;
    else
      it->second -= m;
    if (it->second == 0) folded.erase(it);
  }
  for (const auto& [nu, m] : folded) {
    if (m < 0) throw std::logic_error("fusion: negative coefficient");
    if (!admissible(nu)) throw std::logic_error("fusion: constituent above level");
  }

  auto value = std::make_shared<const WeightDist>(std::move(folded));
  std::lock_guard<std::mutex> lock(mu_);
  auto [it, inserted] = memo_.emplace(key, value);
  return *it->second;
}

Int FusionContext::coefficient(const WVec& lambda, const WVec& mu, const WVec& nu) const {
  if (nu.size() != static_cast<size_t>(rs_.rank) || !is_dominant(nu))
    throw std::domain_error("fusion: target weight must be dominant");
  if (!admissible(nu)) return 0;  // truncated at this level
  const WeightDist& p = product(lambda, mu);
  auto it = p.find(nu);
  return it == p.end() ? Int(0) : it->second;
}

WVec FusionContext::dual(const WVec& lambda) const {
  require_admissible(lambda);
  return dual_weight(rs_, lambda);
}

RankReport rank_genus0(const FusionContext& ctx, const std::vector<WVec>& lambdas) {
  RankReport rep;
  rep.algebra = ctx.rs().name();
  rep.level = ctx.level();
  rep.weights = lambdas;
  const WVec zero(ctx.rs().rank, 0);
  if (lambdas.empty()) {
    rep.rank = 1;
    return rep;
  }
  for (const WVec& l : lambdas) ctx.require_admissible(l);
  WeightDist dist{{lambdas[0], Int(1)}};
  for (size_t i = 1; i < lambdas.size(); ++i) {
    WeightDist next;
    for (const auto& [nu, m] : dist)
      for (const auto& [sigma, c] : ctx.product(nu, lambdas[i])) next[sigma] += m * c;
    dist = std::move(next);
  }
  auto it = dist.find(zero);
  rep.rank = it == dist.end() ? Int(0) : it->second;
  return rep;
}

}  // namespace cbred
