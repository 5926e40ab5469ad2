// Weyl group elements as words in the simple reflections.  Equality and
// normalization go through the action on the Weyl vector rho, which is
// faithful; no normal-form machinery is needed at the ranks in scope.
#pragma once

#include "cbred/root_system.hpp"

#include <vector>

namespace cbred {

struct WeylElement {
  std::vector<int> word;  // 0-based reflection indices; w = s_{w0} s_{w1} ...

  bool is_identity() const { return word.empty(); }
  size_t length() const { return word.size(); }  // valid on reduced words
};

// w(v): letters act right-to-left, so the last letter is applied first.
WVec weyl_apply(const RootSystem& rs, const WeylElement& w, const WVec& v);
QVec weyl_apply(const RootSystem& rs, const WeylElement& w, const QVec& v);
// w^{-1}(v): letters applied left-to-right.
WVec weyl_apply_inverse(const RootSystem& rs, const WeylElement& w, const WVec& v);
QVec weyl_apply_inverse(const RootSystem& rs, const WeylElement& w, const QVec& v);

// Covector actions (x-basis coordinates).
QVec weyl_apply_cov(const RootSystem& rs, const WeylElement& w, const QVec& c);
QVec weyl_apply_inverse_cov(const RootSystem& rs, const WeylElement& w, const QVec& c);

bool weyl_equal(const RootSystem& rs, const WeylElement& a, const WeylElement& b);

// Rewrites w as a reduced word (deterministic descent-picking).
WeylElement reduce_word(const RootSystem& rs, const WeylElement& w);

// Minimal-length representatives of W/W_P for the maximal parabolic omitting
// node p (0-based), sorted by (length, lexicographic word).
std::vector<WeylElement> minimal_coset_reps(const RootSystem& rs, int p);

// Full Weyl group as reduced words; throws if |W| exceeds max_size.
std::vector<WeylElement> enumerate_weyl_group(const RootSystem& rs, long max_size);

// Orbit of a weight under W (each point once).
std::vector<WVec> weyl_orbit(const RootSystem& rs, const WVec& v);

}  // namespace cbred
