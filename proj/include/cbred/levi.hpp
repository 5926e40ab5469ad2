// Maximal parabolics and the Levi-side data of the reduction theorems:
// simple factors of L' with their Dynkin indices, restriction of weights to
// the factors, and the positive-degree invariants (k_L, mu_P, d_0).
#pragma once

#include "cbred/root_system.hpp"
#include "cbred/weyl.hpp"

#include <utility>
#include <vector>

namespace cbred {

struct LeviFactor {
  std::vector<int> nodes;  // 0-based ambient nodes, in Bourbaki order of the factor type
  char type_label;
  int rank;
  long index;  // Dynkin index of the factor in the ambient algebra
  RootSystem local;
};

struct LeviData {
  int omitted_node;  // 0-based alpha_P
  std::vector<LeviFactor> factors;
};

// Connected components of the diagram minus alpha_P, typed and indexed.
// Factors are ordered by their smallest ambient node.
LeviData levi_factors(const RootSystem& rs, int p);

struct Restriction {
  std::vector<WVec> factor_weights;
  Rat omega_defect;  // <omega_P, v>, the central component dropped by restriction
};

// Restricts an L-dominant integral weight-space vector to each simple factor
// of L'.  Throws std::domain_error if some factor-node pairing is negative or
// non-integral.
Restriction restrict_weight(const RootSystem& rs, const LeviData& levi, const QVec& v);

// (k_L, N_P): N_P is the smallest positive integer with N_P x_P in the coroot
// lattice, and k_L the modulus used by the degree-shift bookkeeping.
std::pair<long, long> compute_kL(const RootSystem& rs, int p);

// A coroot-lattice point in the fundamental alcove of L with |omega_P| = 1,
// returned as (x-basis coordinates, omega_P value).  Deterministic tie-break:
// least (sum |coroot coords|, lex coroot coords).
std::pair<QVec, int> find_muP(const RootSystem& rs, int p);

// Smallest d_0 >= 0 with d + d_0 * omega == 0 (mod k_L); omega = +-1.
long compute_d0(long k_L, int omega_P_of_mu_P, long d);

struct DegreeShift {
  long k_L = 0;
  long N_P = 0;
  QVec mu_P;       // x-basis coordinates
  int omega_P_of_mu_P = 0;
  long d_0 = 0;
  QVec mu_P_star;  // kappa^{-1}(mu_P), weight coordinates
};

DegreeShift degree_shift(const RootSystem& rs, int p, long d);

}  // namespace cbred
