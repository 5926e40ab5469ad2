// Classical and small quantum cohomology of the type-A Grassmannian Gr(k,n):
// Littlewood-Richardson coefficients by tableau enumeration, multi-factor
// products reduced by n-rim-hook stripping (beta-number form), and the
// certification test sigma_{u_1} * ... * sigma_{u_n} = q^d [pt].
//
// Subset convention, pinned by the worked cells of the ambient theory:
// I = {i_1 < ... < i_k} in {1..n} has partition lambda_j = n - k + j - i_j,
// so {n-k+1..n} is the fundamental class and {1..k} the point class, and the
// associated minimal coset representative has length |lambda| (codimension).
#pragma once

#include "cbred/root_system.hpp"
#include "cbred/weyl.hpp"

#include <map>
#include <optional>
#include <vector>

namespace cbred {

using Partition = std::vector<long>;  // weakly decreasing, no trailing zeros

struct SchubertClass {
  int k = 0, n = 0;
  std::vector<int> subset;  // 1-based, strictly increasing, size k
  Partition partition;
  long codim = 0;
};

SchubertClass subset_class(int k, int n, const std::vector<int>& subset);
SchubertClass partition_class(int k, int n, const Partition& p);

Int lr_coefficient(const Partition& a, const Partition& b, const Partition& c);

// s_a * s_b restricted to partitions with at most max_rows rows.
std::map<Partition, Int> schur_multiply(const Partition& a, const Partition& b, int max_rows);

struct QuantumProductResult {
  int k = 0, n = 0;
  // Reduced expansion of the full product: (degree, class) -> coefficient.
  std::map<std::pair<long, Partition>, Int> expansion;
  // Coefficient of q^d [pt] per degree (only the grading-forced degree can
  // carry it; kept as a map to match the query shape).
  std::map<long, Int> pt_coefficient;
  bool non_pt_term = false;
  long forced_degree = -1;  // (sum codim - k(n-k))/n, or -1 if not integral
};

QuantumProductResult quantum_multi_product_pt(int k, int n,
                                              const std::vector<SchubertClass>& classes);

// Some(d) iff the product is exactly q^d [pt] with coefficient 1.
std::optional<long> is_pt_product(int k, int n, const std::vector<SchubertClass>& classes);

// The minimal coset representative in W^P(A_{n-1}, P = node k) whose Schubert
// class matches the subset; validated against the W^P membership criterion.
WeylElement subset_to_weyl(const RootSystem& rs, int k, const std::vector<int>& subset);

}  // namespace cbred
