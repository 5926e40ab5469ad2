#include "cbred/verlinde.hpp"

#include "cbred/weyl.hpp"

#include <boost/multiprecision/mpfr.hpp>

#include <map>
#include <stdexcept>

namespace cbred {

namespace {

using MF = boost::multiprecision::mpfr_float;

struct Cx {
  MF re, im;
  Cx() : re(0), im(0) {}
  Cx(MF r, MF i) : re(std::move(r)), im(std::move(i)) {}
  Cx& operator+=(const Cx& o) { re += o.re; im += o.im; return *this; }
  Cx& operator-=(const Cx& o) { re -= o.re; im -= o.im; return *this; }
  Cx operator*(const Cx& o) const { return {re * o.re - im * o.im, re * o.im + im * o.re}; }
  Cx operator/(const Cx& o) const {
    MF n = o.re * o.re + o.im * o.im;
    return {(re * o.re + im * o.im) / n, (im * o.re - re * o.im) / n};
  }
  MF norm2() const { return re * re + im * im; }
};

// e^{-2 pi i x} for exact rational x, reduced mod 1 exactly first.
Cx unit_phase(const Rat& x, const MF& two_pi) {
  Rat frac = x;
  Int fl = frac.get_num() / frac.get_den();
  if (frac < 0 && frac.get_num() % frac.get_den() != 0) fl -= 1;
  frac -= Rat(fl);
  MF theta = two_pi * MF(frac.get_num().get_str()) / MF(frac.get_den().get_str());
  return {cos(theta), -sin(theta)};
}

// One full evaluation at the current working precision.
MF evaluate(const FusionContext& ctx, const std::vector<WVec>& lambdas, MF* imag_out) {
  const RootSystem& rs = ctx.rs();
  const long L = ctx.level() + rs.dual_coxeter;
  const auto& points = ctx.weights_at_level();
  std::vector<WeylElement> W = enumerate_weyl_group(rs, 50000);
  if (points.size() > 5000 || W.size() * points.size() > 5000000)
    throw std::domain_error("verlinde_rank_oracle: instance too large for dense evaluation");

  // Distinct insertion weights with counts.
  std::map<WVec, long> counts;
  for (const WVec& l : lambdas) {
    ctx.require_admissible(l);
    counts[l]++;
  }

  // Precompute Weyl translates of rho and of each lambda + rho.
  struct Orbit {
    std::vector<WVec> img;
    std::vector<int> sign;
  };
  auto orbit_of = [&](const WVec& shifted) {
    Orbit o;
    for (const WeylElement& w : W) {
      o.img.push_back(weyl_apply(rs, w, shifted));
      o.sign.push_back(w.length() % 2 == 0 ? 1 : -1);
    }
    return o;
  };
  WVec rho = rs.rho;
  Orbit rho_orbit = orbit_of(rho);
  std::vector<std::pair<Orbit, long>> lam_orbits;
  for (const auto& [l, c] : counts) {
    WVec sh(l);
    for (int j = 0; j < rs.rank; ++j) sh[j] += 1;
    lam_orbits.emplace_back(orbit_of(sh), c);
  }

  MF pi;
  mpfr_const_pi(pi.backend().data(), MPFR_RNDN);
  MF two_pi = 2 * pi;
  auto alt_sum = [&](const Orbit& o, const WVec& xi) {
    Cx s;
    for (size_t k = 0; k < o.img.size(); ++k) {
      Rat x = form(rs, o.img[k], xi) / L;
      Cx ph = unit_phase(x, two_pi);
      if (o.sign[k] > 0)
        s += ph;
      else
        s -= ph;
    }
    return s;
  };

  Cx numerator;
  MF total_weight(0);
  for (const WVec& mu : points) {
    WVec xi(mu);
    for (int j = 0; j < rs.rank; ++j) xi[j] += 1;
    Cx d = alt_sum(rho_orbit, xi);
    MF w2 = d.norm2();
    total_weight += w2;
    Cx term{w2, MF(0)};
    for (const auto& [orb, count] : lam_orbits) {
      Cx chi = alt_sum(orb, xi) / d;
      for (long c = 0; c < count; ++c) term = term * chi;
    }
    numerator += term;
  }
  if (imag_out) *imag_out = numerator.im / total_weight;
  return numerator.re / total_weight;
}

}  // namespace

Int verlinde_rank_oracle(const FusionContext& ctx, const std::vector<WVec>& lambdas) {
  Int rounded_prev;
  for (int pass = 0; pass < 2; ++pass) {
    MF::default_precision(pass == 0 ? 60 : 100);  // decimal digits
    MF im(0);
    MF value = evaluate(ctx, lambdas, &im);
    MF rounded = round(value);
    MF residual = abs(value - rounded);
    MF tol = pow(MF(10), -30);
    if (residual > tol || abs(im) > tol || rounded < -MF(0.5))
      throw std::logic_error("verlinde_rank_oracle: precision verification failed");
    Int result(rounded.convert_to<long>());
    if (pass == 1 && result != rounded_prev)
      throw std::logic_error("verlinde_rank_oracle: precision passes disagree");
    rounded_prev = result;
  }
  return rounded_prev;
}

}  // namespace cbred
