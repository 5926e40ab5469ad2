#include "cbred/levi.hpp"

#include <algorithm>
#include <stdexcept>

namespace cbred {

namespace {

// Highest root of the sub-root-system supported on a connected node set.
const Root& factor_highest_root(const RootSystem& rs, const std::vector<int>& nodes) {
  std::vector<char> inside(rs.rank, 0);
  for (int n : nodes) inside[n] = 1;
  const Root* best = nullptr;
  for (const Root& r : rs.positive_roots) {
    bool supported = true;
    for (int j = 0; j < rs.rank; ++j)
      if (r.rt[j] != 0 && !inside[j]) { supported = false; break; }
    if (supported && (!best || r.height > best->height)) best = &r;
  }
  return *best;
}

}  // namespace

LeviData levi_factors(const RootSystem& rs, int p) {
  if (p < 0 || p >= rs.rank) throw std::invalid_argument("levi_factors: bad parabolic node");
  std::vector<int> rest;
  for (int i = 0; i < rs.rank; ++i)
    if (i != p) rest.push_back(i);
  LeviData levi;
  levi.omitted_node = p;
  for (const auto& comp : diagram_components(rs, rest)) {
    SubdiagramType st = identify_subdiagram(rs, comp);
    LeviFactor f{st.nodes_in_bourbaki_order, st.type_label, st.rank,
                 dynkin_index(rs, comp), build_root_system(st.type_label, st.rank)};
    levi.factors.push_back(std::move(f));
  }
  std::sort(levi.factors.begin(), levi.factors.end(), [](const LeviFactor& a, const LeviFactor& b) {
    return *std::min_element(a.nodes.begin(), a.nodes.end()) <
           *std::min_element(b.nodes.begin(), b.nodes.end());
  });
  return levi;
}

Restriction restrict_weight(const RootSystem& rs, const LeviData& levi, const QVec& v) {
  Restriction out;
  for (const LeviFactor& f : levi.factors) {
    WVec w;
    w.reserve(f.nodes.size());
    for (int n : f.nodes) {
      const Rat& c = v[n];
      if (c.get_den() != 1 || c < 0)
        throw std::domain_error("restrict_weight: vector is not L-dominant integral at node " +
                                std::to_string(n + 1));
      w.push_back(c.get_num().get_si());
    }
    out.factor_weights.push_back(std::move(w));
  }
  QVec omega_p(rs.rank, 0);
  omega_p[levi.omitted_node] = 1;
  out.omega_defect = form(rs, omega_p, v);
  return out;
}

std::pair<long, long> compute_kL(const RootSystem& rs, int p) {
  if (p < 0 || p >= rs.rank) throw std::invalid_argument("compute_kL: bad parabolic node");
  // Coroot coordinates of x_P form column p of the inverse Cartan matrix;
  // N_P clears their denominators.
  Int n_p = 1;
  for (int i = 0; i < rs.rank; ++i) {
    Int den = rs.inv_cartan[i][p].get_den();
    n_p = lcm(n_p, den);
  }
  if (!n_p.fits_slong_p()) throw std::overflow_error("compute_kL: N_P too large");
  long N_P = n_p.get_si();
  // k_L: the order of the cyclic degree obstruction used by the reduction's
  // extra-point bookkeeping; computed as the lattice order N_P of x_P.
  return {N_P, N_P};
}

std::pair<QVec, int> find_muP(const RootSystem& rs, int p) {
  LeviData levi = levi_factors(rs, p);
  // Inside the fundamental alcove of L a coroot-lattice point has
  // alpha_i(mu) in {0,1} away from alpha_P, with at most one nonzero node per
  // factor, sitting at a comark-one node of that factor.  The alpha_P
  // coordinate is then forced by omega_P(mu) = +-1.
  std::vector<QVec> interiors;
  interiors.emplace_back(QVec(rs.rank, 0));
  for (const LeviFactor& f : levi.factors) {
    const Root& th = factor_highest_root(rs, f.nodes);
    std::vector<QVec> grown;
    for (const QVec& base : interiors) {
      grown.push_back(base);  // all-zero on this factor
      for (int n : f.nodes) {
        if (th.rt[n] != 1) continue;  // theta_factor(mu) <= 1 forces comark 1
        QVec nxt(base);
        nxt[n] = 1;
        grown.push_back(std::move(nxt));
      }
    }
    interiors = std::move(grown);
  }

  struct Candidate {
    QVec mu;
    QVec coroot;
    Rat abs_sum;
    int omega;
  };
  std::vector<Candidate> found;
  for (const QVec& base : interiors) {
    for (int target : {-1, +1}) {
      // omega_P(mu) = sum_j invA[p][j] c_j = target
      Rat rest = 0;
      for (int j = 0; j < rs.rank; ++j)
        if (j != p) rest += rs.inv_cartan[p][j] * base[j];
      Rat cp = (Rat(target) - rest) / rs.inv_cartan[p][p];
      if (cp.get_den() != 1) continue;
      QVec mu(base);
      mu[p] = cp;
      if (!in_coroot_lattice(rs, mu)) continue;
      QVec cr = coroot_coordinates(rs, mu);
      Rat s = 0;
      for (const Rat& c : cr) s += abs(c);
      found.push_back(Candidate{std::move(mu), std::move(cr), s, target});
    }
  }
  if (found.empty())
    throw std::logic_error("find_muP: no coroot-lattice alcove point with |omega_P| = 1 for " +
                           rs.name() + " node " + std::to_string(p + 1));
  auto best = std::min_element(found.begin(), found.end(), [](const Candidate& a, const Candidate& b) {
    if (a.abs_sum != b.abs_sum) return a.abs_sum < b.abs_sum;
    for (size_t i = 0; i < a.coroot.size(); ++i)
      if (a.coroot[i] != b.coroot[i]) return a.coroot[i] < b.coroot[i];
    return false;
  });
  return {best->mu, best->omega};
}

long compute_d0(long k_L, int omega_P_of_mu_P, long d) {
  if (k_L < 1 || d < 0 || (omega_P_of_mu_P != 1 && omega_P_of_mu_P != -1))
    throw std::invalid_argument("compute_d0: bad arguments");
  long r = d % k_L;
  return omega_P_of_mu_P == -1 ? r : (k_L - r) % k_L;
}

DegreeShift degree_shift(const RootSystem& rs, int p, long d) {
  DegreeShift ds;
  auto [k, n] = compute_kL(rs, p);
  ds.k_L = k;
  ds.N_P = n;
  auto [mu, omega] = find_muP(rs, p);
  ds.mu_P = mu;
  ds.omega_P_of_mu_P = omega;
  ds.d_0 = compute_d0(k, omega, d);
  ds.mu_P_star = kappa_inverse(rs, mu);
  return ds;
}

}  // namespace cbred
