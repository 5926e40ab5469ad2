// The fundamental alcove, the weight-data -> alcove map, TW-face inequality
// evaluation, parabolic-degree bookkeeping, and type-A face enumeration via
// certified quantum products.
#pragma once

#include "cbred/levi.hpp"
#include "cbred/qschubert.hpp"
#include "cbred/root_system.hpp"
#include "cbred/weyl.hpp"

#include <memory>
#include <optional>
#include <string>
#include <vector>

namespace cbred {

struct WeightData {
  std::shared_ptr<const RootSystem> rs;
  std::vector<WVec> weights;
  long level = 1;
};

// Validates dominance and admissibility; throws std::domain_error naming the
// offending index.
WeightData make_weight_data(std::shared_ptr<const RootSystem> rs, std::vector<WVec> weights,
                            long level);

struct FaceSpec {
  int parabolic_node = 1;  // 1-based Bourbaki node
  std::vector<WeylElement> words;
  std::vector<std::vector<int>> subsets;  // type-A Schubert cells; may be empty
  long degree = 0;
  bool certified = false;
};

// Builds a face from type-A subset data, certifying it via is_pt_product.
FaceSpec face_from_subsets(const RootSystem& rs, int parabolic_node,
                           const std::vector<std::vector<int>>& subsets);
// Builds a face from explicit Weyl words (any type); certification is
// attempted only in type A, where words are matched back to subsets.
FaceSpec face_from_words(const RootSystem& rs, int parabolic_node,
                         const std::vector<WeylElement>& words, long degree);

struct AlcoveTuple {
  std::vector<QVec> mus;  // x-basis coordinates
};

AlcoveTuple to_alcove(const WeightData& wd);

// d - sum_i omega_P(u_i^{-1} mu_i); nonnegative iff the inequality holds,
// zero iff the data is on the face.  Rejects non-minimal representatives.
Rat tw_slack(const WeightData& wd, const FaceSpec& face);

// sum_i <omega_P, u_i^{-1} lambda_i> - l d = -l * tw_slack.
Rat parabolic_degree(const WeightData& wd, const FaceSpec& face);

struct OnFaceReport {
  bool on_face = false;
  Rat slack;
  bool certified = false;
  long degree = 0;
  std::string note;
};

OnFaceReport on_face(const WeightData& wd, const FaceSpec& face);

// All ordered tuples of Schubert classes of Gr(k, n_grass) whose quantum
// product is exactly q^d [pt] with d <= d_max, in lexicographic subset order.
std::vector<FaceSpec> enumerate_faces_typeA(int k, int n_grass, int n_points, long d_max);

struct MembershipReport {
  bool inside = false;
  std::optional<FaceSpec> witness;  // first violated face
  Rat violated_slack;
};

// Evaluates every TW inequality of a type-A weight datum.
MembershipReport in_polytope_typeA(const WeightData& wd);

}  // namespace cbred
