#include "cbred/qschubert.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace cbred {

namespace {

void normalize(Partition& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
  for (size_t i = 0; i + 1 < p.size(); ++i)
    if (p[i] < p[i + 1]) throw std::invalid_argument("partition parts must be weakly decreasing");
  for (long x : p)
    if (x < 0) throw std::invalid_argument("partition parts must be nonnegative");
}

long weight_of(const Partition& p) { return std::accumulate(p.begin(), p.end(), 0L); }

// Counts Littlewood-Richardson skew tableaux of shape c/a and content b by
// filling the reverse reading word (rows top to bottom, right to left) and
// maintaining the ballot condition incrementally.
Int count_lr_tableaux(const Partition& a, const Partition& b, const Partition& c) {
  const int rows = static_cast<int>(c.size());
  const int letters = static_cast<int>(b.size());
  std::vector<long> inner(rows, 0);
  for (size_t i = 0; i < a.size(); ++i) inner[i] = a[i];
  for (int i = 0; i < rows; ++i)
    if (inner[i] > c[i]) return 0;

  std::vector<std::vector<int>> fill(rows);
  for (int i = 0; i < rows; ++i) fill[i].assign(c[i] - inner[i], -1);
  std::vector<long> used(letters, 0);

  Int total = 0;
  // Cell order: row-major, right to left within each row.
  struct Cell {
    int row;
    long col;  // absolute column in c
  };
  std::vector<Cell> order;
  for (int i = 0; i < rows; ++i)
    for (long col = c[i] - 1; col >= inner[i]; --col) order.push_back({i, col});

  auto rec = [&](auto&& self, size_t idx) -> void {
    if (idx == order.size()) {
      total += 1;
      return;
    }
    auto [row, col] = order[idx];
    for (int v = 0; v < letters; ++v) {
      if (used[v] == b[v]) continue;
      // Ballot: after placing v, counts must satisfy used[v-1] > used[v]
      // among the cells placed so far (reverse reading word prefix).
      if (v > 0 && used[v - 1] <= used[v]) continue;
      // Row weakly increasing left to right: the cell to the right (placed
      // earlier in this order) must be >= v.
      if (col + 1 < c[row]) {
        int right = fill[row][col + 1 - inner[row]];
        if (right >= 0 && right < v) continue;
      }
      // Column strictly increasing downward: cell above must be < v, and if
      // the cell above is part of the inner shape it counts as unconstrained.
      if (row > 0 && col < c[row - 1] && col >= inner[row - 1]) {
        int above = fill[row - 1][col - inner[row - 1]];
        if (above >= v) continue;
      }
      fill[row][col - inner[row]] = v;
      used[v]++;
      self(self, idx + 1);
      used[v]--;
      fill[row][col - inner[row]] = -1;
    }
  };
  rec(rec, 0);
  return total;
}

// Enumerates partitions c containing a with |c| = |a| + |b|, at most max_rows
// rows, and c/a having at most b_1 cells per... (loose horizontal bound not
// applied; containment and column bounds suffice at these sizes).
void candidate_shapes(const Partition& a, long total, int max_rows, long max_first,
                      std::vector<Partition>& out) {
  Partition cur;
  auto rec = [&](auto&& self, int row, long remaining, long prev) -> void {
    if (remaining == 0) {
      Partition c(cur);
      for (size_t i = c.size(); i < a.size(); ++i) c.push_back(0);
      bool contains = true;
      for (size_t i = 0; i < a.size(); ++i) contains = contains && c[i] >= a[i];
      if (contains) {
        normalize(c);
        out.push_back(std::move(c));
      }
      return;
    }
    if (row == max_rows) return;
    long lo = row < static_cast<int>(a.size()) ? a[row] : 0;
    for (long part = std::min(prev, remaining); part >= std::max(lo, 1L); --part) {
      cur.push_back(part);
      self(self, row + 1, remaining - part, part);
      cur.pop_back();
    }
  };
  rec(rec, 0, total, max_first);
}

}  // namespace

SchubertClass subset_class(int k, int n, const std::vector<int>& subset) {
  if (k < 1 || k >= n) throw std::invalid_argument("subset_class: need 1 <= k < n");
  if (static_cast<int>(subset.size()) != k)
    throw std::invalid_argument("subset_class: subset size must be k");
  SchubertClass sc;
  sc.k = k;
  sc.n = n;
  sc.subset = subset;
  for (int j = 0; j < k; ++j) {
    int i = subset[j];
    if (i < 1 || i > n || (j > 0 && subset[j - 1] >= i))
      throw std::invalid_argument("subset_class: subset must be strictly increasing in 1..n");
    sc.partition.push_back(n - k + (j + 1) - i);
  }
  normalize(sc.partition);
  for (long part : sc.partition)
    if (part > n - k) throw std::logic_error("subset_class: partition escapes the box");
  sc.codim = weight_of(sc.partition);
  return sc;
}

SchubertClass partition_class(int k, int n, const Partition& p) {
  Partition q(p);
  normalize(q);
  if (static_cast<int>(q.size()) > k || (!q.empty() && q[0] > n - k))
    throw std::invalid_argument("partition_class: partition outside the k x (n-k) box");
  std::vector<int> subset;
  for (int j = 1; j <= k; ++j) {
    long part = j <= static_cast<int>(q.size()) ? q[j - 1] : 0;
    subset.push_back(static_cast<int>(n - k + j - part));
  }
  return subset_class(k, n, subset);
}

Int lr_coefficient(const Partition& a, const Partition& b, const Partition& c) {
  Partition pa(a), pb(b), pc(c);
  normalize(pa);
  normalize(pb);
  normalize(pc);
  if (weight_of(pa) + weight_of(pb) != weight_of(pc)) return 0;
  if (pc.size() < pa.size()) return 0;
  return count_lr_tableaux(pa, pb, pc);
}

std::map<Partition, Int> schur_multiply(const Partition& a, const Partition& b, int max_rows) {
  Partition pa(a), pb(b);
  normalize(pa);
  normalize(pb);
  if (weight_of(pa) < weight_of(pb)) std::swap(pa, pb);
  std::map<Partition, Int> out;
  std::vector<Partition> shapes;
  long max_first = (pa.empty() ? 0 : pa[0]) + (pb.empty() ? 0 : pb[0]);
  candidate_shapes(pa, weight_of(pa) + weight_of(pb), max_rows, max_first, shapes);
  for (const Partition& c : shapes) {
    Int coeff = count_lr_tableaux(pa, pb, c);
    if (coeff != 0) out[c] = coeff;
  }
  return out;
}

QuantumProductResult quantum_multi_product_pt(int k, int n,
                                              const std::vector<SchubertClass>& classes) {
  QuantumProductResult res;
  res.k = k;
  res.n = n;
  long total_codim = 0;
  for (const SchubertClass& c : classes) {
    if (c.k != k || c.n != n)
      throw std::invalid_argument("quantum product: classes from mixed Grassmannians");
    total_codim += c.codim;
  }
  long shift = total_codim - static_cast<long>(k) * (n - k);
  if (shift >= 0 && shift % n == 0) res.forced_degree = shift / n;

  // Classical multi-product in the ring of Schur polynomials in k variables.
  std::map<Partition, Int> acc{{Partition{}, Int(1)}};
  for (const SchubertClass& c : classes) {
    std::map<Partition, Int> next;
    for (const auto& [p, m] : acc)
      for (const auto& [q, d] : schur_multiply(p, c.partition, k)) next[q] += m * d;
    acc = std::move(next);
  }

  // Single rim-hook pass in beta-number form: subtract multiples of n from
  // the beta-set, demand distinct residues, and record the sorting sign
  // together with (-1)^{d(k-1)}.
  for (const auto& [p, m] : acc) {
    std::vector<long> beta(k);
    for (int i = 0; i < k; ++i)
      beta[i] = (i < static_cast<int>(p.size()) ? p[i] : 0) + (k - 1 - i);
    std::vector<long> residue(k);
    long d = 0;
    for (int i = 0; i < k; ++i) {
      residue[i] = beta[i] % n;
      d += (beta[i] - residue[i]) / n;
    }
    bool distinct = true;
    int inversions = 0;
    for (int i = 0; i < k && distinct; ++i)
      for (int j = i + 1; j < k; ++j) {
        if (residue[i] == residue[j]) { distinct = false; break; }
        if (residue[i] < residue[j]) ++inversions;
      }
    if (!distinct) continue;
    int sign = (inversions + d * (k - 1)) % 2 == 0 ? 1 : -1;
    std::vector<long> sorted(residue);
    std::sort(sorted.rbegin(), sorted.rend());
    Partition q(k);
    for (int i = 0; i < k; ++i) q[i] = sorted[i] - (k - 1 - i);
    normalize(q);
    auto key = std::make_pair(d, std::move(q));
    auto it = res.expansion.emplace(key, 0).first;
    if (sign > 0)
      it->second += m;
    else
      it->second -= m;
    if (it->second == 0) res.expansion.erase(it);
  }

  Partition box(k, n - k);
  for (const auto& [key, coeff] : res.expansion) {
    if (coeff < 0) throw std::logic_error("quantum product: negative Gromov-Witten coefficient");
    if (key.second == box)
      res.pt_coefficient[key.first] = coeff;
    else
      res.non_pt_term = true;
  }
  return res;
}

std::optional<long> is_pt_product(int k, int n, const std::vector<SchubertClass>& classes) {
  QuantumProductResult r = quantum_multi_product_pt(k, n, classes);
  if (r.non_pt_term || r.pt_coefficient.size() != 1) return std::nullopt;
  const auto& [d, coeff] = *r.pt_coefficient.begin();
  if (coeff != 1) return std::nullopt;
  return d;
}

WeylElement subset_to_weyl(const RootSystem& rs, int k, const std::vector<int>& subset) {
  if (rs.type_label != 'A') throw std::invalid_argument("subset_to_weyl: type A only");
  const int n = rs.rank + 1;
  SchubertClass sc = subset_class(k, n, subset);

  // Grassmannian permutation with descent only at position k: the first k
  // values are j + lambda_{k+1-j}, the rest fill in ascending order.
  std::vector<int> perm(n, 0);  // 0-based values
  std::vector<char> taken(n, 0);
  for (int j = 1; j <= k; ++j) {
    long part = k - j + 1 <= static_cast<int>(sc.partition.size()) ? sc.partition[k - j] : 0;
    int val = static_cast<int>(j + part) - 1;
    perm[j - 1] = val;
    taken[val] = 1;
  }
  for (int pos = k, val = 0; pos < n; ++val)
    if (!taken[val]) perm[pos++] = val;

  // Peel simple reflections from the left: s_i u shortens u exactly when the
  // value i sits to the right of i+1 in one-line notation.
  std::vector<int> pos_of(n);
  for (int i = 0; i < n; ++i) pos_of[perm[i]] = i;
  std::vector<int> word;
  for (;;) {
    int pick = -1;
    for (int v = 0; v + 1 < n; ++v)
      if (pos_of[v] > pos_of[v + 1]) { pick = v; break; }
    if (pick < 0) break;
    word.push_back(pick);
    std::swap(perm[pos_of[pick]], perm[pos_of[pick + 1]]);
    std::swap(pos_of[pick], pos_of[pick + 1]);
  }
  WeylElement u{word};

  // W^P membership: u(alpha_i) positive for every simple root of the Levi.
  for (int i = 0; i < rs.rank; ++i) {
    if (i == k - 1) continue;
    WVec alpha(rs.cartan[i].begin(), rs.cartan[i].end());
    WVec img = weyl_apply(rs, u, alpha);
    bool found = false;
    for (const Root& r : rs.positive_roots) found = found || r.fw == img;
    if (!found) throw std::logic_error("subset_to_weyl: produced a non-minimal representative");
  }
  return u;
}

}  // namespace cbred
