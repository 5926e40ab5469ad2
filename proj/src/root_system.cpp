#include "cbred/root_system.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <numeric>
#include <set>
#include <sstream>

namespace cbred {

namespace {

void check_type(char t, int r) {
  switch (t) {
    case 'A': if (r >= 1) return; break;
    case 'B': if (r >= 2) return; break;
    case 'C': if (r >= 2) return; break;
    case 'D': if (r >= 4) return; break;
    case 'E': if (r >= 6 && r <= 8) return; break;
    case 'F': if (r == 4) return; break;
    case 'G': if (r == 2) return; break;
    default: break;
  }
  std::ostringstream os;
  os << "invalid simple type " << t << r
     << " (valid: A r>=1, B r>=2, C r>=2, D r>=4, E6-E8, F4, G2)";
  throw std::invalid_argument(os.str());
}

// cartan[i][j] = <alpha_i, alpha_j_vee>; d_i = <alpha_i,alpha_i>/2 with long
// roots of squared length 2.
void cartan_data(char t, int r, std::vector<std::vector<long>>& A, QVec& d) {
  A.assign(r, std::vector<long>(r, 0));
  for (int i = 0; i < r; ++i) A[i][i] = 2;
  d.assign(r, Rat(1));
  auto edge = [&](int i, int j) { A[i][j] = -1; A[j][i] = -1; };
  switch (t) {
    case 'A':
      for (int i = 0; i + 1 < r; ++i) edge(i, i + 1);
      break;
    case 'B':  // last node short
      for (int i = 0; i + 1 < r; ++i) edge(i, i + 1);
      A[r - 2][r - 1] = -2;
      d[r - 1] = Rat(1, 2);
      break;
    case 'C':  // last node long, the rest short
      for (int i = 0; i + 1 < r; ++i) edge(i, i + 1);
      A[r - 1][r - 2] = -2;
      for (int i = 0; i + 1 < r; ++i) d[i] = Rat(1, 2);
      break;
    case 'D':
      for (int i = 0; i + 1 < r - 1; ++i) edge(i, i + 1);
      edge(r - 3, r - 1);
      break;
    case 'E':  // Bourbaki: branch node 4 carries node 2; chain 1-3-4-5-6(-7-8)
      edge(0, 2);
      edge(2, 3);
      edge(1, 3);
      for (int i = 3; i + 1 < r; ++i) edge(i, i + 1);
      break;
    case 'F':  // 1-2=>3-4, nodes 3,4 short
      edge(0, 1);
      edge(2, 3);
      A[1][2] = -2;
      A[2][1] = -1;
      d[2] = d[3] = Rat(1, 2);
      break;
    case 'G':  // node 1 short, node 2 long
      A[0][1] = -1;
      A[1][0] = -3;
      d[0] = Rat(1, 3);
      break;
  }
}

long weyl_order(char t, int r) {
  auto fact = [](long n) { long f = 1; for (long k = 2; k <= n; ++k) f *= k; return f; };
  switch (t) {
    case 'A': return fact(r + 1);
    case 'B':
    case 'C': return fact(r) << r;
    case 'D': return fact(r) << (r - 1);
    case 'E': return r == 6 ? 51840L : (r == 7 ? 2903040L : 696729600L);
    case 'F': return 1152;
    case 'G': return 12;
  }
  return 0;
}

}  // namespace

RootSystem build_root_system(char type_label, int rank) {
  check_type(type_label, rank);
  RootSystem rs;
  rs.type_label = type_label;
  rs.rank = rank;
  cartan_data(type_label, rank, rs.cartan, rs.d);

  QMat cq(rank, QVec(rank));
  for (int i = 0; i < rank; ++i)
    for (int j = 0; j < rank; ++j) cq[i][j] = rs.cartan[i][j];
  rs.inv_cartan = qmat_inverse(cq);
  rs.gram.assign(rank, QVec(rank));
  for (int i = 0; i < rank; ++i)
    for (int j = 0; j < rank; ++j) rs.gram[i][j] = rs.inv_cartan[i][j] * rs.d[j];

  // Positive roots: reflection closure of the simple roots, keeping vectors
  // with nonnegative simple-root coordinates.
  std::map<WVec, WVec> seen;  // fw -> rt
  std::vector<Root> queue;
  for (int i = 0; i < rank; ++i) {
    Root a;
    a.fw.assign(rs.cartan[i].begin(), rs.cartan[i].end());
    a.rt.assign(rank, 0);
    a.rt[i] = 1;
    a.height = 1;
    seen[a.fw] = a.rt;
    queue.push_back(a);
  }
  for (size_t q = 0; q < queue.size(); ++q) {
    Root cur = queue[q];
    for (int i = 0; i < rank; ++i) {
      long c = cur.fw[i];
      if (c == 0) continue;
      Root nxt = cur;
      for (int j = 0; j < rank; ++j) nxt.fw[j] -= c * rs.cartan[i][j];
      nxt.rt[i] -= c;
      bool positive = true;
      for (long x : nxt.rt) positive = positive && x >= 0;
      if (!positive || seen.count(nxt.fw)) continue;
      nxt.height = std::accumulate(nxt.rt.begin(), nxt.rt.end(), 0L);
      seen[nxt.fw] = nxt.rt;
      queue.push_back(nxt);
    }
  }
  rs.positive_roots = std::move(queue);
  std::sort(rs.positive_roots.begin(), rs.positive_roots.end(),
            [](const Root& a, const Root& b) {
              return a.height != b.height ? a.height < b.height : a.rt < b.rt;
            });

  rs.theta = rs.positive_roots.back();
  if (!is_dominant(rs.theta.fw))
    throw std::logic_error("root closure: highest root is not dominant");
  if (form(rs, rs.theta.fw, rs.theta.fw) != 2)
    throw std::logic_error("normalization: <theta,theta> != 2");

  rs.theta_comarks.assign(rank, 0);
  for (int i = 0; i < rank; ++i) {
    Rat c = Rat(rs.theta.rt[i]) * rs.d[i];
    if (c.get_den() != 1) throw std::logic_error("non-integral comark");
    rs.theta_comarks[i] = c.get_num().get_si();
  }
  rs.rho.assign(rank, 1);
  rs.dual_coxeter = 1 + std::accumulate(rs.theta_comarks.begin(), rs.theta_comarks.end(), 0L);
  rs.weyl_order_bound = weyl_order(type_label, rank);
  return rs;
}

RootSystem parse_root_system(const std::string& name) {
  if (name.size() < 2 || !std::isalpha(static_cast<unsigned char>(name[0])))
    throw std::invalid_argument("algebra name must look like \"A3\" or \"C2\": " + name);
  char t = static_cast<char>(std::toupper(static_cast<unsigned char>(name[0])));
  int r = 0;
  try {
    size_t pos = 0;
    r = std::stoi(name.substr(1), &pos);
    if (pos + 1 != name.size()) throw std::invalid_argument("");
  } catch (...) {
    throw std::invalid_argument("algebra name must look like \"A3\" or \"C2\": " + name);
  }
  return build_root_system(t, r);
}

Rat form(const RootSystem& rs, const QVec& a, const QVec& b) {
  if (a.size() != static_cast<size_t>(rs.rank) || b.size() != static_cast<size_t>(rs.rank))
    throw std::invalid_argument("form: dimension mismatch");
  Rat s = 0;
  for (int i = 0; i < rs.rank; ++i) {
    if (a[i] == 0) continue;
    for (int j = 0; j < rs.rank; ++j) s += a[i] * rs.gram[i][j] * b[j];
  }
  return s;
}

Rat form(const RootSystem& rs, const WVec& a, const WVec& b) {
  return form(rs, to_qvec(a), to_qvec(b));
}

QVec kappa(const RootSystem& rs, const QVec& weight_vec) {
  QVec c(weight_vec);
  for (int i = 0; i < rs.rank; ++i) c[i] *= rs.d[i];
  return c;
}

QVec kappa_inverse(const RootSystem& rs, const QVec& covector) {
  QVec v(covector);
  for (int i = 0; i < rs.rank; ++i) v[i] /= rs.d[i];
  return v;
}

Rat pair_weight_covector(const RootSystem& rs, const QVec& weight_vec, const QVec& covector) {
  Rat s = 0;
  for (int i = 0; i < rs.rank; ++i) {
    if (weight_vec[i] == 0) continue;
    for (int j = 0; j < rs.rank; ++j) s += weight_vec[i] * rs.inv_cartan[i][j] * covector[j];
  }
  return s;
}

Rat omega_on_covector(const RootSystem& rs, int i, const QVec& covector) {
  Rat s = 0;
  for (int j = 0; j < rs.rank; ++j) s += rs.inv_cartan[i][j] * covector[j];
  return s;
}

QVec coroot_coordinates(const RootSystem& rs, const QVec& covector) {
  return qmat_apply(rs.inv_cartan, covector);
}

bool in_coroot_lattice(const RootSystem& rs, const QVec& covector) {
  for (const Rat& c : coroot_coordinates(rs, covector))
    if (c.get_den() != 1) return false;
  return true;
}

long level_pairing(const RootSystem& rs, const WVec& weight) {
  long s = 0;
  for (int i = 0; i < rs.rank; ++i) s += weight[i] * rs.theta_comarks[i];
  return s;
}

void reflect_weight(const RootSystem& rs, int i, QVec& v) {
  Rat c = v[i];
  if (c == 0) return;
  for (int j = 0; j < rs.rank; ++j) v[j] -= c * rs.cartan[i][j];
}

void reflect_weight(const RootSystem& rs, int i, WVec& v) {
  long c = v[i];
  if (c == 0) return;
  for (int j = 0; j < rs.rank; ++j) v[j] -= c * rs.cartan[i][j];
}

void reflect_covector(const RootSystem& rs, int i, QVec& c) {
  Rat ci = c[i];
  if (ci == 0) return;
  for (int j = 0; j < rs.rank; ++j) c[j] -= ci * rs.cartan[j][i];
}

bool is_dominant(const WVec& v) {
  for (long x : v)
    if (x < 0) return false;
  return true;
}

int dominant_representative(const RootSystem& rs, WVec& v) {
  int sign = 1;
  for (;;) {
    int neg = -1;
    for (int i = 0; i < rs.rank; ++i)
      if (v[i] < 0) { neg = i; break; }
    if (neg < 0) break;
    reflect_weight(rs, neg, v);
    sign = -sign;
  }
  for (long x : v)
    if (x == 0) return 0;
  return sign;
}

WVec dual_weight(const RootSystem& rs, const WVec& lambda) {
  WVec v(lambda);
  for (auto& x : v) x = -x;
  dominant_representative(rs, v);
  return v;
}

std::vector<WVec> enumerate_level_weights(const RootSystem& rs, long level) {
  if (level < 0) throw std::invalid_argument("enumerate_level_weights: negative level");
  std::vector<WVec> out;
  WVec cur(rs.rank, 0);
  auto rec = [&](auto&& self, int i, long used) -> void {
    if (i == rs.rank) {
      out.push_back(cur);
      return;
    }
    long step = rs.theta_comarks[i];
    for (long c = 0; used + c * step <= level; ++c) {
      cur[i] = c;
      self(self, i + 1, used + c * step);
    }
    cur[i] = 0;
  };
  rec(rec, 0, 0);
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<std::vector<int>> diagram_components(const RootSystem& rs,
                                                 const std::vector<int>& nodes) {
  std::set<int> todo(nodes.begin(), nodes.end());
  std::vector<std::vector<int>> comps;
  while (!todo.empty()) {
    std::vector<int> comp{*todo.begin()};
    todo.erase(todo.begin());
    for (size_t q = 0; q < comp.size(); ++q) {
      for (auto it = todo.begin(); it != todo.end();) {
        if (rs.cartan[comp[q]][*it] != 0) {
          comp.push_back(*it);
          it = todo.erase(it);
        } else {
          ++it;
        }
      }
    }
    std::sort(comp.begin(), comp.end());
    comps.push_back(std::move(comp));
  }
  std::sort(comps.begin(), comps.end());
  return comps;
}

long dynkin_index(const RootSystem& rs, const std::vector<int>& factor_nodes) {
  if (diagram_components(rs, factor_nodes).size() != 1)
    throw std::invalid_argument("dynkin_index: factor must be a connected subdiagram");
  std::vector<char> inside(rs.rank, 0);
  for (int n : factor_nodes) inside[n] = 1;
  // Highest root of the factor: the maximal-height positive root of rs
  // supported on the factor's nodes.
  const Root* best = nullptr;
  for (const Root& r : rs.positive_roots) {
    bool supported = true;
    for (int j = 0; j < rs.rank; ++j)
      if (r.rt[j] != 0 && !inside[j]) { supported = false; break; }
    if (supported && (!best || r.height > best->height)) best = &r;
  }
  // m = <theta_f_vee, theta_f_vee>_g / 2 = 2 / <theta_f, theta_f>_g.
  Rat len2 = form(rs, best->fw, best->fw);
  Rat m = Rat(2) / len2;
  if (m.get_den() != 1 || m <= 0) throw std::logic_error("dynkin_index: non-integral index");
  return m.get_num().get_si();
}

SubdiagramType identify_subdiagram(const RootSystem& rs, const std::vector<int>& nodes) {
  if (diagram_components(rs, nodes).size() != 1)
    throw std::invalid_argument("identify_subdiagram: nodes not connected");
  const int r = static_cast<int>(nodes.size());
  std::vector<char> candidates;
  switch (r) {
    case 1: candidates = {'A'}; break;
    case 2: candidates = {'A', 'B', 'C', 'G'}; break;
    case 3: candidates = {'A', 'B', 'C'}; break;
    case 4: candidates = {'A', 'B', 'C', 'D', 'F'}; break;
    default: candidates = {'A', 'B', 'C', 'D'}; if (r >= 6 && r <= 8) candidates.push_back('E');
  }
  for (char t : candidates) {
    std::vector<std::vector<long>> std_cartan;
    QVec std_d;
    cartan_data(t, r, std_cartan, std_d);
    // Search for the lexicographically least node ordering matching the
    // standard Cartan matrix of type t.
    std::vector<int> order(nodes.begin(), nodes.end());
    std::sort(order.begin(), order.end());
    do {
      bool ok = true;
      for (int a = 0; a < r && ok; ++a)
        for (int b = 0; b < r && ok; ++b)
          ok = rs.cartan[order[a]][order[b]] == std_cartan[a][b];
      if (ok) return SubdiagramType{t, r, order};
    } while (std::next_permutation(order.begin(), order.end()));
  }
  throw std::logic_error("identify_subdiagram: unrecognized diagram shape");
}

}  // namespace cbred
