#include "cbred/polytope.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <stdexcept>

namespace cbred {

namespace {

// u in W^P iff u(alpha_i) > 0 for every Levi node i.
bool is_minimal_rep(const RootSystem& rs, int p0, const WeylElement& u) {
  for (int i = 0; i < rs.rank; ++i) {
    if (i == p0) continue;
    WVec alpha(rs.cartan[i].begin(), rs.cartan[i].end());
    WVec img = weyl_apply(rs, u, alpha);
    bool positive = false;
    for (const Root& r : rs.positive_roots) positive = positive || r.fw == img;
    if (!positive) return false;
  }
  return true;
}

void check_face_shape(const WeightData& wd, const FaceSpec& face) {
  const RootSystem& rs = *wd.rs;
  if (face.parabolic_node < 1 || face.parabolic_node > rs.rank)
    throw std::domain_error("face: parabolic node out of range");
  if (face.words.size() != wd.weights.size())
    throw std::domain_error("face: number of Weyl elements does not match number of weights");
  for (const WeylElement& u : face.words)
    if (!is_minimal_rep(rs, face.parabolic_node - 1, u))
      throw std::domain_error("face: Weyl element is not a minimal coset representative");
}

}  // namespace

WeightData make_weight_data(std::shared_ptr<const RootSystem> rs, std::vector<WVec> weights,
                            long level) {
  if (level < 1) throw std::domain_error("weight data: level must be >= 1");
  for (size_t i = 0; i < weights.size(); ++i) {
    if (weights[i].size() != static_cast<size_t>(rs->rank))
      throw std::domain_error("weight " + std::to_string(i + 1) + ": wrong length");
    if (!is_dominant(weights[i]))
      throw std::domain_error("weight " + std::to_string(i + 1) + ": not dominant");
    if (level_pairing(*rs, weights[i]) > level)
      throw std::domain_error("weight " + std::to_string(i + 1) + ": not admissible at level " +
                              std::to_string(level));
  }
  return WeightData{std::move(rs), std::move(weights), level};
}

FaceSpec face_from_subsets(const RootSystem& rs, int parabolic_node,
                           const std::vector<std::vector<int>>& subsets) {
  if (rs.type_label != 'A')
    throw std::domain_error("subset-specified faces require type A");
  const int n = rs.rank + 1;
  FaceSpec face;
  face.parabolic_node = parabolic_node;
  face.subsets = subsets;
  std::vector<SchubertClass> classes;
  for (const auto& I : subsets) {
    classes.push_back(subset_class(parabolic_node, n, I));
    face.words.push_back(subset_to_weyl(rs, parabolic_node, I));
  }
  auto d = is_pt_product(parabolic_node, n, classes);
  face.certified = d.has_value();
  face.degree = d.value_or(0);
  if (!face.certified)
    throw std::domain_error("face: quantum product of the given cells is not q^d [pt]");
  return face;
}

FaceSpec face_from_words(const RootSystem& rs, int parabolic_node,
                         const std::vector<WeylElement>& words, long degree) {
  FaceSpec face;
  face.parabolic_node = parabolic_node;
  face.words = words;
  face.degree = degree;
  face.certified = false;
  if (rs.type_label == 'A') {
    // Match each word to the Schubert subset with the same coset action.
    const int n = rs.rank + 1;
    const int k = parabolic_node;
    std::vector<int> current(k);
    std::vector<std::vector<int>> all_subsets;
    auto rec = [&](auto&& self, int pos, int start) -> void {
      if (pos == k) { all_subsets.push_back(current); return; }
      for (int v = start; v <= n; ++v) { current[pos] = v; self(self, pos + 1, v + 1); }
    };
    rec(rec, 0, 1);
    std::vector<SchubertClass> classes;
    bool all_found = true;
    for (const WeylElement& w : words) {
      WVec image = weyl_apply(rs, w, rs.rho);
      bool found = false;
      for (const auto& I : all_subsets) {
        WeylElement u = subset_to_weyl(rs, k, I);
        if (weyl_apply(rs, u, rs.rho) == image) {
          face.subsets.push_back(I);
          classes.push_back(subset_class(k, n, I));
          found = true;
          break;
        }
      }
      all_found = all_found && found;
    }
    if (all_found) {
      auto d = is_pt_product(k, n, classes);
      if (d.has_value() && *d == degree) face.certified = true;
    }
    if (!face.certified) face.subsets.clear();
  }
  return face;
}

AlcoveTuple to_alcove(const WeightData& wd) {
  const RootSystem& rs = *wd.rs;
  AlcoveTuple t;
  for (size_t i = 0; i < wd.weights.size(); ++i) {
    QVec mu = kappa(rs, to_qvec(wd.weights[i]));
    for (auto& c : mu) c /= wd.level;
    // Alcove invariants follow from dominance and admissibility; verified.
    Rat wall = 0;
    for (int j = 0; j < rs.rank; ++j) {
      if (mu[j] < 0)
        throw std::domain_error("alcove: negative simple-root value at weight " +
                                std::to_string(i + 1));
      wall += rs.theta.rt[j] * mu[j];
    }
    if (wall > 1)
      throw std::domain_error("alcove: theta(mu) > 1 at weight " + std::to_string(i + 1));
    t.mus.push_back(std::move(mu));
  }
  return t;
}

Rat tw_slack(const WeightData& wd, const FaceSpec& face) {
  check_face_shape(wd, face);
  const RootSystem& rs = *wd.rs;
  const int p0 = face.parabolic_node - 1;
  AlcoveTuple alc = to_alcove(wd);
  Rat sum = 0;
  for (size_t i = 0; i < alc.mus.size(); ++i) {
    QVec twisted = weyl_apply_inverse_cov(rs, face.words[i], alc.mus[i]);
    sum += omega_on_covector(rs, p0, twisted);
  }
  return Rat(face.degree) - sum;
}

Rat parabolic_degree(const WeightData& wd, const FaceSpec& face) {
  return -Rat(wd.level) * tw_slack(wd, face);
}

OnFaceReport on_face(const WeightData& wd, const FaceSpec& face) {
  OnFaceReport rep;
  rep.slack = tw_slack(wd, face);
  rep.on_face = rep.slack == 0;
  rep.certified = face.certified;
  rep.degree = face.degree;
  if (!face.certified)
    rep.note = "face not certified: quantum product unverified for this input";
  return rep;
}

std::vector<FaceSpec> enumerate_faces_typeA(int k, int n_grass, int n_points, long d_max) {
  if (d_max < 0) throw std::domain_error("enumerate_faces_typeA: d_max must be >= 0");
  if (n_points < 1) throw std::domain_error("enumerate_faces_typeA: need at least one point");
  std::vector<std::vector<int>> subsets;
  {
    std::vector<int> cur(k);
    auto rec = [&](auto&& self, int pos, int start) -> void {
      if (pos == k) { subsets.push_back(cur); return; }
      for (int v = start; v <= n_grass; ++v) { cur[pos] = v; self(self, pos + 1, v + 1); }
    };
    rec(rec, 0, 1);
  }
  std::vector<SchubertClass> classes;
  for (const auto& I : subsets) classes.push_back(subset_class(k, n_grass, I));

  RootSystem rs = build_root_system('A', n_grass - 1);
  std::map<std::vector<int>, std::optional<long>> product_memo;  // sorted index multiset
  std::vector<FaceSpec> out;
  std::vector<int> tuple(n_points, 0);
  auto rec = [&](auto&& self, int pos) -> void {
    if (pos == n_points) {
      std::vector<int> key(tuple);
      std::sort(key.begin(), key.end());
      auto it = product_memo.find(key);
      if (it == product_memo.end()) {
        std::vector<SchubertClass> cls;
        for (int t : key) cls.push_back(classes[t]);
        it = product_memo.emplace(key, is_pt_product(k, n_grass, cls)).first;
      }
      if (it->second.has_value() && *it->second <= d_max) {
        FaceSpec face;
        face.parabolic_node = k;
        face.degree = *it->second;
        face.certified = true;
        for (int t : tuple) {
          face.subsets.push_back(subsets[t]);
          face.words.push_back(subset_to_weyl(rs, k, subsets[t]));
        }
        out.push_back(std::move(face));
      }
      return;
    }
    for (int t = 0; t < static_cast<int>(subsets.size()); ++t) {
      tuple[pos] = t;
      self(self, pos + 1);
    }
  };
  rec(rec, 0);
  return out;
}

MembershipReport in_polytope_typeA(const WeightData& wd) {
  const RootSystem& rs = *wd.rs;
  if (rs.type_label != 'A')
    throw std::domain_error("in_polytope is implemented for type A only");
  const int n_grass = rs.rank + 1;
  const int n_points = static_cast<int>(wd.weights.size());

  // Face lists are expensive to enumerate; share them across calls.
  static std::mutex cache_mu;
  static std::map<std::tuple<int, int, int, long>, std::shared_ptr<const std::vector<FaceSpec>>>
      cache;

  MembershipReport rep;
  for (int k = 1; k <= rs.rank; ++k) {
    long cell_max = static_cast<long>(k) * (n_grass - k);
    long d_max = cell_max * (n_points - 1) / n_grass;
    std::shared_ptr<const std::vector<FaceSpec>> faces;
    {
      auto key = std::make_tuple(k, n_grass, n_points, d_max);
      std::lock_guard<std::mutex> lock(cache_mu);
      auto it = cache.find(key);
      if (it != cache.end()) faces = it->second;
    }
    if (!faces) {
      faces = std::make_shared<const std::vector<FaceSpec>>(
          enumerate_faces_typeA(k, n_grass, n_points, d_max));
      std::lock_guard<std::mutex> lock(cache_mu);
      cache.emplace(std::make_tuple(k, n_grass, n_points, d_max), faces);
    }
    for (const FaceSpec& face : *faces) {
      // The membership inequality pairs each class tuple's certificate with
      // the position-convention sum over the subsets themselves, which is
      // tw_slack evaluated with the words of the mirrored subsets.
      FaceSpec positioned(face);
      positioned.words.clear();
      for (const auto& I : face.subsets) {
        std::vector<int> mirrored;
        for (auto it = I.rbegin(); it != I.rend(); ++it) mirrored.push_back(n_grass + 1 - *it);
        positioned.words.push_back(subset_to_weyl(rs, k, mirrored));
      }
      Rat slack = tw_slack(wd, positioned);
      if (slack < 0) {
        rep.inside = false;
        rep.witness = positioned;
        rep.violated_slack = slack;
        return rep;
      }
    }
  }
  rep.inside = true;
  return rep;
}

}  // namespace cbred
