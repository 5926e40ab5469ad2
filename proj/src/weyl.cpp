#include "cbred/weyl.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>

namespace cbred {

namespace {

template <typename Vec>
void check_letters(const RootSystem& rs, const WeylElement& w) {
  for (int i : w.word)
    if (i < 0 || i >= rs.rank) throw std::invalid_argument("weyl word: reflection index out of range");
}

}  // namespace

WVec weyl_apply(const RootSystem& rs, const WeylElement& w, const WVec& v) {
  check_letters<WVec>(rs, w);
  WVec r(v);
  for (auto it = w.word.rbegin(); it != w.word.rend(); ++it) reflect_weight(rs, *it, r);
  return r;
}

QVec weyl_apply(const RootSystem& rs, const WeylElement& w, const QVec& v) {
  check_letters<QVec>(rs, w);
  QVec r(v);
  for (auto it = w.word.rbegin(); it != w.word.rend(); ++it) reflect_weight(rs, *it, r);
  return r;
}

WVec weyl_apply_inverse(const RootSystem& rs, const WeylElement& w, const WVec& v) {
  check_letters<WVec>(rs, w);
  WVec r(v);
  for (int i : w.word) reflect_weight(rs, i, r);
  return r;
}

QVec weyl_apply_inverse(const RootSystem& rs, const WeylElement& w, const QVec& v) {
  check_letters<QVec>(rs, w);
  QVec r(v);
  for (int i : w.word) reflect_weight(rs, i, r);
  return r;
}

QVec weyl_apply_cov(const RootSystem& rs, const WeylElement& w, const QVec& c) {
  QVec r(c);
  for (auto it = w.word.rbegin(); it != w.word.rend(); ++it) reflect_covector(rs, *it, r);
  return r;
}

QVec weyl_apply_inverse_cov(const RootSystem& rs, const WeylElement& w, const QVec& c) {
  QVec r(c);
  for (int i : w.word) reflect_covector(rs, i, r);
  return r;
}

bool weyl_equal(const RootSystem& rs, const WeylElement& a, const WeylElement& b) {
  return weyl_apply(rs, a, rs.rho) == weyl_apply(rs, b, rs.rho);
}

WeylElement reduce_word(const RootSystem& rs, const WeylElement& w) {
  // Walk w(rho) back to rho, recording the descents used.  The recorded
  // letters d_1..d_k satisfy s_{d_k} ... s_{d_1} w = e, so w = s_{d_1} ... s_{d_k}
  // read in reverse order of discovery.
  WVec p = weyl_apply(rs, w, rs.rho);
  std::vector<int> rev;
  for (;;) {
    int neg = -1;
    for (int i = 0; i < rs.rank; ++i)
      if (p[i] < 0) { neg = i; break; }
    if (neg < 0) break;
    rev.push_back(neg);
    reflect_weight(rs, neg, p);
  }
  if (p != rs.rho) throw std::logic_error("reduce_word: rho walk failed");
  return WeylElement{std::vector<int>(rev.begin(), rev.end())};
}

std::vector<WeylElement> minimal_coset_reps(const RootSystem& rs, int p) {
  if (p < 0 || p >= rs.rank) throw std::invalid_argument("minimal_coset_reps: bad node");
  // Cosets of W/W_P correspond to the W-orbit of the fundamental coweight
  // x_p, whose stabilizer is exactly W_P.  A breadth-first search finds, for
  // every orbit point, a shortest word reaching it; that word is a reduced
  // word for the minimal coset representative.
  QVec x(rs.rank, 0);
  x[p] = 1;
  std::map<QVec, std::vector<int>> best;
  std::vector<std::pair<QVec, std::vector<int>>> queue{{x, {}}};
  best[x] = {};
  for (size_t q = 0; q < queue.size(); ++q) {
    auto [pt, word] = queue[q];
    for (int i = 0; i < rs.rank; ++i) {
      QVec nxt(pt);
      reflect_covector(rs, i, nxt);
      if (best.count(nxt)) continue;
      std::vector<int> nword;
      nword.reserve(word.size() + 1);
      nword.push_back(i);
      nword.insert(nword.end(), word.begin(), word.end());
      best[nxt] = nword;
      queue.emplace_back(std::move(nxt), std::move(nword));
    }
  }
  std::vector<WeylElement> reps;
  reps.reserve(best.size());
  for (auto& [pt, word] : best) reps.push_back(WeylElement{word});
  std::sort(reps.begin(), reps.end(), [](const WeylElement& a, const WeylElement& b) {
    return a.word.size() != b.word.size() ? a.word.size() < b.word.size() : a.word < b.word;
  });
  return reps;
}

std::vector<WeylElement> enumerate_weyl_group(const RootSystem& rs, long max_size) {
  if (rs.weyl_order_bound > max_size)
    throw std::domain_error("enumerate_weyl_group: group too large for dense enumeration");
  std::map<WVec, std::vector<int>> best;
  std::vector<std::pair<WVec, std::vector<int>>> queue{{rs.rho, {}}};
  best[rs.rho] = {};
  for (size_t q = 0; q < queue.size(); ++q) {
    auto [pt, word] = queue[q];
    for (int i = 0; i < rs.rank; ++i) {
      WVec nxt(pt);
      reflect_weight(rs, i, nxt);
      if (best.count(nxt)) continue;
      std::vector<int> nword;
      nword.reserve(word.size() + 1);
      nword.push_back(i);
      nword.insert(nword.end(), word.begin(), word.end());
      best[nxt] = nword;
      queue.emplace_back(std::move(nxt), std::move(nword));
    }
  }
  std::vector<WeylElement> out;
  out.reserve(best.size());
  for (auto& [pt, word] : best) out.push_back(WeylElement{word});
  return out;
}

std::vector<WVec> weyl_orbit(const RootSystem& rs, const WVec& v) {
  std::set<WVec> seen{v};
  std::vector<WVec> queue{v};
  for (size_t q = 0; q < queue.size(); ++q) {
    WVec cur = queue[q];
    for (int i = 0; i < rs.rank; ++i) {
      WVec nxt(cur);
      reflect_weight(rs, i, nxt);
      if (seen.insert(nxt).second) queue.push_back(nxt);
    }
  }
  return queue;
}

}  // namespace cbred
