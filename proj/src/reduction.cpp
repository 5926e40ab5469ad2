#include "cbred/reduction.hpp"

#include <map>
#include <mutex>
#include <stdexcept>

namespace cbred {

std::shared_ptr<const FusionContext> shared_context(const RootSystem& rs, long level) {
  static std::mutex mu;
  static std::map<std::pair<std::string, long>, std::shared_ptr<const FusionContext>> cache;
  std::lock_guard<std::mutex> lock(mu);
  auto key = std::make_pair(rs.name(), level);
  auto it = cache.find(key);
  if (it == cache.end())
    it = cache.emplace(key, std::make_shared<const FusionContext>(rs, level)).first;
  return it->second;
}

ReducedData reduce(const WeightData& wd, const FaceSpec& face, bool force) {
  const RootSystem& rs = *wd.rs;
  Rat slack = tw_slack(wd, face);
  if (slack != 0 && !force)
    throw std::domain_error("reduce: weight data is not on the face (slack " + rat_str(slack) +
                            "); pass force to override");

  const int p0 = face.parabolic_node - 1;
  LeviData levi = levi_factors(rs, p0);

  ReducedData out;
  std::vector<std::vector<WVec>> factor_weights(levi.factors.size());
  for (size_t i = 0; i < wd.weights.size(); ++i) {
    WVec tw = weyl_apply_inverse(rs, face.words[i], wd.weights[i]);
    Restriction r = restrict_weight(rs, levi, to_qvec(tw));  // rejects non-L-dominant input
    for (size_t j = 0; j < levi.factors.size(); ++j)
      factor_weights[j].push_back(std::move(r.factor_weights[j]));
    out.twisted.push_back(std::move(tw));
  }

  if (face.degree > 0) {
    DegreeShift ds = degree_shift(rs, p0, face.degree);
    QVec extra = qvec_scale(ds.mu_P_star, Rat(wd.level));
    for (long c = 0; c < ds.d_0; ++c) {
      Restriction r = [&] {
        try {
          return restrict_weight(rs, levi, extra);
        } catch (const std::domain_error&) {
          throw std::logic_error("reduce: l mu_P* does not restrict to a dominant integral "
                                 "weight on every factor");
        }
      }();
      for (size_t j = 0; j < levi.factors.size(); ++j)
        factor_weights[j].push_back(std::move(r.factor_weights[j]));
    }
    out.shift = std::move(ds);
  }

  for (size_t j = 0; j < levi.factors.size(); ++j) {
    const LeviFactor& f = levi.factors[j];
    ReducedFactor rf;
    rf.type_label = f.type_label;
    rf.rank = f.rank;
    rf.index = f.index;
    rf.level = f.index * wd.level;
    for (int n : f.nodes) rf.ambient_nodes.push_back(n + 1);
    rf.weights = std::move(factor_weights[j]);
    for (const WVec& w : rf.weights)
      if (level_pairing(f.local, w) > rf.level)
        throw std::logic_error("reduce: restricted weight exceeds the factor level");
    out.factors.push_back(std::move(rf));
  }
  return out;
}

FactorizationReport verify_factorization(const WeightData& wd, const FaceSpec& face, bool force) {
  FactorizationReport rep;
  rep.reduced = reduce(wd, face, force);
  rep.lhs_rank = rank_genus0(*shared_context(*wd.rs, wd.level), wd.weights).rank;
  rep.product = 1;
  for (const ReducedFactor& f : rep.reduced.factors) {
    RootSystem local = build_root_system(f.type_label, f.rank);
    Int r = rank_genus0(*shared_context(local, f.level), f.weights).rank;
    rep.product *= r;
    rep.factor_ranks.push_back(std::move(r));
  }
  rep.equal = rep.lhs_rank == rep.product;
  return rep;
}

}  // namespace cbred
