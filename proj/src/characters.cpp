#include "cbred/characters.hpp"

#include "cbred/weyl.hpp"

#include <algorithm>
#include <stdexcept>

namespace cbred {

namespace {

void check_dominant(const RootSystem& rs, const WVec& v, const char* who) {
  if (v.size() != static_cast<size_t>(rs.rank))
    throw std::invalid_argument(std::string(who) + ": dimension mismatch");
  if (!is_dominant(v)) throw std::invalid_argument(std::string(who) + ": weight not dominant");
}

// Root coordinates of lambda - mu, or empty if lambda - mu is not in Q+.
// c = A^{-T} (lambda - mu) must be a nonnegative integer vector.
bool root_coords_of_difference(const RootSystem& rs, const WVec& lambda, const WVec& mu, WVec& out) {
  QVec diff(rs.rank);
  for (int i = 0; i < rs.rank; ++i) diff[i] = lambda[i] - mu[i];
  out.assign(rs.rank, 0);
  for (int i = 0; i < rs.rank; ++i) {
    Rat c = 0;
    for (int j = 0; j < rs.rank; ++j) c += rs.inv_cartan[j][i] * diff[j];
    if (c.get_den() != 1 || c < 0) return false;
    out[i] = c.get_num().get_si();
  }
  return true;
}

}  // namespace

WeightDist dominant_weight_multiplicities(const RootSystem& rs, const WVec& lambda) {
  check_dominant(rs, lambda, "dominant_weight_multiplicities");
  const int r = rs.rank;

  // Dominant candidates mu = lambda - sum c_i alpha_i: the inverse Cartan
  // matrix has positive entries, so 0 <= c <= A^{-T} lambda is a finite box.
  WVec bound(r, 0);
  for (int i = 0; i < r; ++i) {
    Rat b = 0;
    for (int j = 0; j < r; ++j) b += rs.inv_cartan[j][i] * lambda[j];
    bound[i] = b.get_num().get_si() / b.get_den().get_si();
  }
  struct Cand {
    WVec mu;
    long depth;  // height of lambda - mu
  };
  std::vector<Cand> cands;
  WVec c(r, 0);
  auto rec = [&](auto&& self, int i) -> void {
    if (i == r) {
      WVec mu(lambda);
      long depth = 0;
      for (int a = 0; a < r; ++a) {
        depth += c[a];
        for (int j = 0; j < r; ++j) mu[j] -= c[a] * rs.cartan[a][j];
      }
      if (is_dominant(mu)) cands.push_back({std::move(mu), depth});
      return;
    }
    for (c[i] = 0; c[i] <= bound[i]; ++c[i]) self(self, i + 1);
    c[i] = 0;
  };
  rec(rec, 0);
  std::sort(cands.begin(), cands.end(), [](const Cand& a, const Cand& b) {
    return a.depth != b.depth ? a.depth < b.depth : a.mu < b.mu;
  });

  WVec lam_rho(lambda);
  for (auto& x : lam_rho) ++x;
  Rat top = form(rs, lam_rho, lam_rho);

  WeightDist mult;
  for (const Cand& cand : cands) {
    const WVec& mu = cand.mu;
    if (cand.depth == 0) {
      mult[mu] = 1;
      continue;
    }
    // Freudenthal: (|lambda+rho|^2 - |mu+rho|^2) m(mu)
    //   = 2 sum_{alpha>0} sum_{k>=1} <mu + k alpha, alpha> m(mu + k alpha).
    Rat acc = 0;
    for (const Root& alpha : rs.positive_roots) {
      WVec nu(mu);
      for (long k = 1;; ++k) {
        for (int j = 0; j < rs.rank; ++j) nu[j] += alpha.fw[j];
        WVec rc;
        if (!root_coords_of_difference(rs, lambda, nu, rc)) break;
        WVec dom(nu);
        dominant_representative(rs, dom);
        auto it = mult.find(dom);
        if (it == mult.end()) continue;
        acc += form(rs, to_qvec(nu), to_qvec(alpha.fw)) * Rat(it->second);
      }
    }
    WVec mu_rho(mu);
    for (auto& x : mu_rho) ++x;
    Rat denom = top - form(rs, mu_rho, mu_rho);
    Rat m = 2 * acc / denom;
    if (m.get_den() != 1 || m <= 0)
      throw std::logic_error("freudenthal: non-integral multiplicity");
    mult[mu] = m.get_num();
  }
  return mult;
}

Int weyl_dimension(const RootSystem& rs, const WVec& lambda) {
  check_dominant(rs, lambda, "weyl_dimension");
  WVec lam_rho(lambda);
  for (auto& x : lam_rho) ++x;
  Rat dim = 1;
  for (const Root& alpha : rs.positive_roots)
    dim *= form(rs, to_qvec(lam_rho), to_qvec(alpha.fw)) / form(rs, to_qvec(rs.rho), to_qvec(alpha.fw));
  if (dim.get_den() != 1) throw std::logic_error("weyl_dimension: non-integral value");
  return dim.get_num();
}

WeightDist tensor_decompose(const RootSystem& rs, const WVec& lambda, const WVec& mu) {
  check_dominant(rs, lambda, "tensor_decompose");
  check_dominant(rs, mu, "tensor_decompose");
  const WVec* big = &lambda;
  const WVec* small = &mu;
  if (weyl_dimension(rs, mu) > weyl_dimension(rs, lambda)) std::swap(big, small);

  WeightDist out;
  for (const auto& [dom, m] : dominant_weight_multiplicities(rs, *small)) {
    for (const WVec& nu : weyl_orbit(rs, dom)) {
      WVec xi(*big);
      for (int j = 0; j < rs.rank; ++j) xi[j] += nu[j] + 1;  // lambda + nu + rho
      int sign = dominant_representative(rs, xi);
      if (sign == 0) continue;
      for (auto& x : xi) --x;
      auto it = out.emplace(std::move(xi), 0).first;
      if (sign > 0)
        it->second += m;
      else
        it->second -= m;
      if (it->second == 0) out.erase(it);
    }
  }
  for (const auto& [nu, m] : out)
    if (m < 0) throw std::logic_error("tensor_decompose: negative multiplicity");
  return out;
}

Int invariant_dimension(const RootSystem& rs, const std::vector<WVec>& lambdas) {
  for (const WVec& l : lambdas) check_dominant(rs, l, "invariant_dimension");
  const WVec zero(rs.rank, 0);
  if (lambdas.empty()) return 1;
  WeightDist dist{{lambdas[0], Int(1)}};
  std::map<std::pair<WVec, WVec>, WeightDist> memo;
  for (size_t i = 1; i < lambdas.size(); ++i) {
    WeightDist next;
    for (const auto& [nu, m] : dist) {
      auto key = std::make_pair(nu, lambdas[i]);
      auto it = memo.find(key);
      if (it == memo.end()) it = memo.emplace(key, tensor_decompose(rs, nu, lambdas[i])).first;
      for (const auto& [sigma, c] : it->second) next[sigma] += m * c;
    }
    dist = std::move(next);
  }
  auto it = dist.find(zero);
  return it == dist.end() ? Int(0) : it->second;
}

}  // namespace cbred
