// Root systems of the finite simple types with the invariant form normalized
// so the highest root has squared length 2.
//
// Coordinate conventions used throughout the library:
//   * weight-space vectors are written in the fundamental-weight basis, so
//     the i-th coordinate of v is <v, alpha_i_vee>;
//   * covectors (alcove points, coweights) are written in the fundamental
//     coweight basis x_1..x_r defined by alpha_i(x_j) = delta_ij, so the i-th
//     coordinate of mu is alpha_i(mu);
//   * cartan[i][j] = <alpha_i, alpha_j_vee>, hence row i of the Cartan matrix
//     is the simple root alpha_i in weight coordinates.
// With these choices the Killing-form isomorphism kappa: h* -> h is diagonal,
// kappa(v)_i = d_i v_i with d_i = <alpha_i,alpha_i>/2, and omega_i(x_j) is
// the (i,j) entry of the inverse Cartan matrix.
#pragma once

#include "cbred/numeric.hpp"

#include <optional>
#include <string>
#include <vector>

namespace cbred {

struct Root {
  WVec fw;  // fundamental-weight coordinates
  WVec rt;  // simple-root coordinates
  long height = 0;
};

struct RootSystem {
  char type_label = 0;
  int rank = 0;
  std::vector<std::vector<long>> cartan;  // cartan[i][j] = <alpha_i, alpha_j_vee>
  QMat inv_cartan;
  QVec d;  // d_i = <alpha_i, alpha_i>/2; equals 1 on long roots
  QMat gram;  // gram[i][j] = <omega_i, omega_j> = inv_cartan[i][j] * d_j
  std::vector<Root> positive_roots;
  Root theta;
  WVec theta_comarks;  // theta_vee = sum comark_i alpha_i_vee
  WVec rho;            // all ones
  long dual_coxeter = 0;
  long weyl_order_bound = 0;  // |W|, clamped to LONG_MAX for huge groups

  std::string name() const { return std::string(1, type_label) + std::to_string(rank); }
};

// Throws std::invalid_argument for a (type, rank) pair that is not a valid
// simple type: A r>=1, B r>=2, C r>=2, D r>=4, E6-E8, F4, G2.
RootSystem build_root_system(char type_label, int rank);

// Parses "<LETTER><rank>", e.g. "A3" or "C2".
RootSystem parse_root_system(const std::string& name);

// The normalized invariant form on weight space.
Rat form(const RootSystem& rs, const QVec& a, const QVec& b);
Rat form(const RootSystem& rs, const WVec& a, const WVec& b);

// kappa: h* -> h and its inverse; weight coordinates in, x-coordinates out.
QVec kappa(const RootSystem& rs, const QVec& weight_vec);
QVec kappa_inverse(const RootSystem& rs, const QVec& covector);

// Natural pairing lambda(mu) for lambda in h* (weight coords) and mu in h
// (x-coords): lambda^T A^{-1} mu.
Rat pair_weight_covector(const RootSystem& rs, const QVec& weight_vec, const QVec& covector);

// omega_i(mu) for a covector mu; i is 0-based.
Rat omega_on_covector(const RootSystem& rs, int i, const QVec& covector);

// Coordinates of a covector in the coroot basis (A^{-1} applied to x-coords).
QVec coroot_coordinates(const RootSystem& rs, const QVec& covector);
bool in_coroot_lattice(const RootSystem& rs, const QVec& covector);

// <lambda, theta> = lambda(theta_vee); admissibility at level l is <= l.
long level_pairing(const RootSystem& rs, const WVec& weight);

// Simple reflection s_i acting on weight coordinates / on covector x-coords.
void reflect_weight(const RootSystem& rs, int i, QVec& v);
void reflect_weight(const RootSystem& rs, int i, WVec& v);
void reflect_covector(const RootSystem& rs, int i, QVec& c);

bool is_dominant(const WVec& v);

// Reflects v to the dominant chamber; returns the Weyl-group sign of the
// element used, or 0 if v lies on a chamber wall (some coordinate vanishes).
int dominant_representative(const RootSystem& rs, WVec& v);

// lambda* = -w_0(lambda).
WVec dual_weight(const RootSystem& rs, const WVec& lambda);

// All dominant weights with <lambda, theta> <= level, in lexicographic order.
std::vector<WVec> enumerate_level_weights(const RootSystem& rs, long level);

// Dynkin index of a connected subdiagram (0-based node set) in rs: the ratio
// of the restriction of the ambient normalized form to the factor's own
// normalized form.  Throws if the nodes do not form a connected subdiagram.
long dynkin_index(const RootSystem& rs, const std::vector<int>& factor_nodes);

// Connected components of a node subset in the Dynkin diagram.
std::vector<std::vector<int>> diagram_components(const RootSystem& rs,
                                                 const std::vector<int>& nodes);

// Identifies the simple type of a connected subdiagram and returns the node
// relabeling: result[k] = the rs-node playing the role of Bourbaki node k+1
// in the identified type.  Deterministic (lexicographically least relabeling).
struct SubdiagramType {
  char type_label;
  int rank;
  std::vector<int> nodes_in_bourbaki_order;
};
SubdiagramType identify_subdiagram(const RootSystem& rs, const std::vector<int>& nodes);

}  // namespace cbred
