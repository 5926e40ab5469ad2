// Alcove map, TW-face inequalities, face enumeration, and membership.  The
// two worked sl4 faces pin the subset -> Weyl -> inequality conventions: the
// slack must vanish exactly on both.
#include <doctest.h>

#include "cbred/fusion.hpp"
#include "cbred/polytope.hpp"
#include "cbred/reduction.hpp"

#include <random>

using namespace cbred;

namespace {

WVec wv(std::initializer_list<long> v) { return WVec(v); }

std::shared_ptr<const RootSystem> rs_ptr(char t, int r) {
  return std::make_shared<const RootSystem>(build_root_system(t, r));
}

WeightData example1(std::shared_ptr<const RootSystem> a3, long level = 5) {
  std::vector<WVec> w(2, wv({4, 1, 0}));
  for (int i = 0; i < 4; ++i) w.push_back(wv({1, 0, 1}));
  return make_weight_data(a3, w, level);
}

FaceSpec example1_face(const RootSystem& a3) {
  std::vector<std::vector<int>> cells(2, {2, 3});
  for (int i = 0; i < 4; ++i) cells.push_back({3, 4});
  return face_from_subsets(a3, 2, cells);
}

WeightData example2(std::shared_ptr<const RootSystem> a3, long level = 2) {
  std::vector<WVec> w(4, wv({0, 0, 2}));
  w.push_back(wv({1, 0, 1}));
  w.push_back(wv({1, 0, 1}));
  return make_weight_data(a3, w, level);
}

FaceSpec example2_face(const RootSystem& a3) {
  std::vector<std::vector<int>> cells{{2}};
  for (int i = 0; i < 5; ++i) cells.push_back({3});
  return face_from_subsets(a3, 1, cells);
}

}  // namespace

TEST_CASE("weight data validation") {
  auto a3 = rs_ptr('A', 3);
  CHECK_THROWS_AS(make_weight_data(a3, {wv({-1, 0, 0})}, 3), std::domain_error);
  CHECK_THROWS_AS(make_weight_data(a3, {wv({4, 0, 0})}, 3), std::domain_error);
  CHECK_THROWS_AS(make_weight_data(a3, {wv({1, 0})}, 3), std::domain_error);
  CHECK_THROWS_AS(make_weight_data(a3, {wv({0, 0, 0})}, 0), std::domain_error);
}

TEST_CASE("alcove map") {
  auto a3 = rs_ptr('A', 3);
  WeightData zero = make_weight_data(a3, {wv({0, 0, 0})}, 3);
  CHECK(to_alcove(zero).mus[0] == QVec(3, 0));

  // Example 1: lambda_1 = 4w1+w2 at level 5 sits exactly on the alcove wall.
  AlcoveTuple t = to_alcove(example1(a3));
  Rat wall = 0;
  for (int j = 0; j < 3; ++j) wall += a3->theta.rt[j] * t.mus[0][j];
  CHECK(wall == 1);

  auto a1 = rs_ptr('A', 1);
  AlcoveTuple s = to_alcove(make_weight_data(a1, {wv({1})}, 2));
  CHECK(s.mus[0][0] * a1->theta.rt[0] == Rat(1, 2));
}

TEST_CASE("tw_slack vanishes on both worked faces") {
  auto a3 = rs_ptr('A', 3);
  CHECK(tw_slack(example1(a3), example1_face(*a3)) == 0);
  CHECK(tw_slack(example2(a3), example2_face(*a3)) == 0);
  // Raising the level moves Example 2 off its face by exactly 1/3.
  CHECK(tw_slack(example2(a3, 3), example2_face(*a3)) == Rat(1, 3));
}

TEST_CASE("parabolic degree is -l times the slack") {
  auto a3 = rs_ptr('A', 3);
  CHECK(parabolic_degree(example1(a3), example1_face(*a3)) == 0);
  CHECK(parabolic_degree(example2(a3, 3), example2_face(*a3)) == -1);

  WeightData zeros = make_weight_data(a3, std::vector<WVec>(6, wv({0, 0, 0})), 1);
  FaceSpec id_face = face_from_subsets(
      *a3, 1, {{1}, {4}, {4}, {4}, {4}, {4}});  // point class and big cells, d = 0
  CHECK(parabolic_degree(zeros, id_face) == 0);

  std::mt19937 rng(3);
  std::uniform_int_distribution<size_t> pick;
  FusionContext ctx(*a3, 3);
  const auto& pts = ctx.weights_at_level();
  FaceSpec face = example2_face(*a3);
  for (int trial = 0; trial < 10; ++trial) {
    std::vector<WVec> lams;
    for (int i = 0; i < 6; ++i)
      lams.push_back(pts[std::uniform_int_distribution<size_t>(0, pts.size() - 1)(rng)]);
    WeightData wd = make_weight_data(a3, lams, 3);
    CHECK(parabolic_degree(wd, face) == -Rat(3) * tw_slack(wd, face));
  }
}

TEST_CASE("non-minimal representatives are rejected") {
  auto a3 = rs_ptr('A', 3);
  WeightData wd = make_weight_data(a3, {wv({1, 0, 0})}, 2);
  FaceSpec face;
  face.parabolic_node = 1;
  face.words = {WeylElement{{1}}};  // s_2 is inside W_P for P = node 1
  face.degree = 0;
  CHECK_THROWS_AS(tw_slack(wd, face), std::domain_error);
}

TEST_CASE("on_face reports") {
  auto a3 = rs_ptr('A', 3);
  OnFaceReport r1 = on_face(example1(a3), example1_face(*a3));
  CHECK(r1.on_face);
  CHECK(r1.certified);
  CHECK(r1.degree == 0);

  OnFaceReport r2 = on_face(example2(a3), example2_face(*a3));
  CHECK(r2.on_face);
  CHECK(r2.certified);
  CHECK(r2.degree == 1);

  OnFaceReport r3 = on_face(example2(a3, 3), example2_face(*a3));
  CHECK(!r3.on_face);

  // Scaling invariance: (N lambda, N l) keeps the alcove points.
  for (long N = 1; N <= 3; ++N) {
    std::vector<WVec> scaled;
    for (const WVec& w : example2(a3).weights) {
      WVec s(w);
      for (auto& x : s) x *= N;
      scaled.push_back(std::move(s));
    }
    WeightData wdN = make_weight_data(a3, scaled, 2 * N);
    CHECK(on_face(wdN, example2_face(*a3)).on_face);
  }
}

TEST_CASE("face construction from words") {
  auto a3 = rs_ptr('A', 3);
  FaceSpec by_cells = example2_face(*a3);
  FaceSpec by_words = face_from_words(*a3, 1, by_cells.words, 1);
  CHECK(by_words.certified);
  CHECK(by_words.subsets == by_cells.subsets);

  // A wrong degree cannot be certified.
  FaceSpec wrong = face_from_words(*a3, 1, by_cells.words, 0);
  CHECK(!wrong.certified);

  // Non-type-A faces are accepted as unverified assertions.
  RootSystem c2 = build_root_system('C', 2);
  FaceSpec c2_face = face_from_words(c2, 1, {WeylElement{}, WeylElement{{0}}}, 0);
  CHECK(!c2_face.certified);
}

TEST_CASE("face enumeration") {
  auto faces = enumerate_faces_typeA(1, 2, 3, 0);
  CHECK(faces.size() == 3);  // the three placements of the point class
  for (const FaceSpec& f : faces) {
    CHECK(f.degree == 0);
    CHECK(f.certified);
  }

  auto g24 = enumerate_faces_typeA(2, 4, 6, 0);
  bool has_example1 = false;
  std::vector<std::vector<int>> target(2, std::vector<int>{2, 3});
  for (int i = 0; i < 4; ++i) target.push_back({3, 4});
  for (const FaceSpec& f : g24) has_example1 = has_example1 || f.subsets == target;
  CHECK(has_example1);

  // Degree filter: d_max = 0 excludes the degree-one face of Example 2.
  auto g14 = enumerate_faces_typeA(1, 4, 6, 0);
  std::vector<std::vector<int>> ex2{{2}, {3}, {3}, {3}, {3}, {3}};
  for (const FaceSpec& f : g14) CHECK(f.subsets != ex2);
  auto g14_d1 = enumerate_faces_typeA(1, 4, 6, 1);
  bool has_ex2 = false;
  for (const FaceSpec& f : g14_d1) has_ex2 = has_ex2 || f.subsets == ex2;
  CHECK(has_ex2);

  CHECK_THROWS_AS(enumerate_faces_typeA(1, 2, 3, -1), std::domain_error);
}

TEST_CASE("polytope membership") {
  auto a3 = rs_ptr('A', 3);
  CHECK(in_polytope_typeA(example1(a3)).inside);
  CHECK(in_polytope_typeA(example2(a3)).inside);

  // (omega_1, 0, 0) is never in the sl2 polytope: a Gr(1,2) face is violated.
  auto a1 = rs_ptr('A', 1);
  for (long l = 1; l <= 3; ++l) {
    WeightData bad = make_weight_data(a1, {wv({1}), wv({0}), wv({0})}, l);
    MembershipReport rep = in_polytope_typeA(bad);
    CHECK(!rep.inside);
    REQUIRE(rep.witness.has_value());
    CHECK(rep.witness->parabolic_node == 1);
    CHECK(rep.witness->degree == 0);
    CHECK(rep.violated_slack < 0);
  }

  // Soundness: positive rank forces membership.
  std::mt19937 rng(17);
  for (auto [t, r] : std::vector<std::pair<char, int>>{{'A', 1}, {'A', 2}}) {
    auto rs = rs_ptr(t, r);
    for (long l = 1; l <= 2; ++l) {
      auto ctx = shared_context(*rs, l);
      const auto& pts = ctx->weights_at_level();
      std::uniform_int_distribution<size_t> pick(0, pts.size() - 1);
      for (int trial = 0; trial < 12; ++trial) {
        std::vector<WVec> lams;
        for (int i = 0; i < 4; ++i) lams.push_back(pts[pick(rng)]);
        if (rank_genus0(*ctx, lams).rank > 0) {
          WeightData wd = make_weight_data(rs, lams, l);
          CHECK(in_polytope_typeA(wd).inside);
        }
      }
    }
  }
}
