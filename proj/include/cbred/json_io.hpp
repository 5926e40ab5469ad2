// JSON views of the documented exchange formats: faces, reduction reports,
// degree shifts, and divisor classes.  Exact rationals are serialized as
// "p/q" strings; integers that fit in 64 bits are plain JSON numbers.
#pragma once

#include "cbred/divisor.hpp"
#include "cbred/polytope.hpp"
#include "cbred/reduction.hpp"

#include <json.hpp>

namespace cbred {

inline nlohmann::json json_int(const Int& v) {
  if (v.fits_slong_p()) return v.get_si();
  return v.get_str();
}

inline nlohmann::json json_rat(const Rat& q) {
  if (q.get_den() == 1) return json_int(q.get_num());
  return q.get_str();
}

inline nlohmann::json json_qvec(const QVec& v) {
  nlohmann::json a = nlohmann::json::array();
  for (const Rat& x : v) a.push_back(json_rat(x));
  return a;
}

inline nlohmann::json to_json(const FaceSpec& f) {
  nlohmann::json j;
  j["parabolic_node"] = f.parabolic_node;
  if (!f.subsets.empty()) j["subsets"] = f.subsets;
  nlohmann::json words = nlohmann::json::array();
  for (const WeylElement& w : f.words) {
    nlohmann::json ww = nlohmann::json::array();
    for (int i : w.word) ww.push_back(i + 1);
    words.push_back(ww);
  }
  j["words"] = words;
  j["degree"] = f.degree;
  j["certified"] = f.certified;
  return j;
}

inline nlohmann::json to_json(const DegreeShift& ds) {
  nlohmann::json j;
  j["k_L"] = ds.k_L;
  j["N_P"] = ds.N_P;
  j["mu_P"] = json_qvec(ds.mu_P);
  j["omega_P_of_mu_P"] = ds.omega_P_of_mu_P;
  j["d_0"] = ds.d_0;
  j["mu_P_star"] = json_qvec(ds.mu_P_star);
  return j;
}

inline nlohmann::json to_json(const ReducedFactor& f) {
  nlohmann::json j;
  j["type"] = std::string(1, f.type_label) + std::to_string(f.rank);
  j["level"] = f.level;
  j["ambient_nodes"] = f.ambient_nodes;
  j["weights"] = f.weights;
  return j;
}

inline nlohmann::json to_json(const FactorizationReport& rep, const FaceSpec& face) {
  nlohmann::json j;
  j["lhs_rank"] = json_int(rep.lhs_rank);
  nlohmann::json factors = nlohmann::json::array();
  for (size_t i = 0; i < rep.reduced.factors.size(); ++i) {
    nlohmann::json f = to_json(rep.reduced.factors[i]);
    f["rank"] = json_int(rep.factor_ranks[i]);
    factors.push_back(f);
  }
  j["factors"] = factors;
  j["product"] = json_int(rep.product);
  j["equal"] = rep.equal;
  j["face"] = to_json(face);
  j["degree_shift"] = rep.reduced.shift ? to_json(*rep.reduced.shift) : nlohmann::json();
  return j;
}

inline nlohmann::json to_json(const DivisorClass& d) {
  nlohmann::json j;
  j["n"] = d.n_points;
  nlohmann::json coeffs = nlohmann::json::object();
  for (size_t i = 0; i < d.coeffs.size(); ++i)
    coeffs["D" + std::to_string(i + 2)] = json_rat(d.coeffs[i]);
  j["coeffs"] = coeffs;
  return j;
}

}  // namespace cbred
