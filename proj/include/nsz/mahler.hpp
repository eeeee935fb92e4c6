#ifndef NSZ_MAHLER_HPP
#define NSZ_MAHLER_HPP

#include <cmath>
#include <complex>
#include <stdexcept>
#include <string>
#include <vector>

#include "nsz/places.hpp"
#include "nsz/poly.hpp"
#include "nsz/rng.hpp"
#include "nsz/roots.hpp"

namespace nsz {

struct MahlerEstimate {
  double value = 0.0;
  double stderr_ = 0.0;
  long samples = 0;
  std::string method;  // "Jensen-exact" | "torus-MC" | "sphere-MC"
};

inline constexpr long kDefaultSamples = 200000;

namespace detail {

// Fixed-coefficient complex evaluator with per-variable power tables.
class ComplexEvaluator {
 public:
  explicit ComplexEvaluator(const MultiPoly& f) : nvars_(f.nvars()) {
    maxdeg_.assign(nvars_, 0);
    for (const auto& [m, c] : f.terms()) {
      exps_.push_back(m);
      coeffs_.push_back(std::complex<double>(mpq_get_d(c.get_mpq_t()), 0.0));
      for (int i = 0; i < nvars_; ++i) maxdeg_[i] = std::max(maxdeg_[i], m[i]);
    }
    pw_.resize(nvars_);
    for (int i = 0; i < nvars_; ++i) pw_[i].resize(maxdeg_[i] + 1);
  }

  std::complex<double> eval(const std::vector<std::complex<double>>& z) {
    for (int i = 0; i < nvars_; ++i) {
      pw_[i][0] = {1.0, 0.0};
      for (int e = 1; e <= maxdeg_[i]; ++e) pw_[i][e] = pw_[i][e - 1] * z[i];
    }
    std::complex<double> acc(0.0, 0.0);
    for (size_t t = 0; t < exps_.size(); ++t) {
      std::complex<double> term = coeffs_[t];
      const Monomial& m = exps_[t];
      for (int i = 0; i < nvars_; ++i)
        if (m[i] > 0) term *= pw_[i][m[i]];
      acc += term;
    }
    return acc;
  }

 private:
  int nvars_;
  std::vector<Monomial> exps_;
  std::vector<std::complex<double>> coeffs_;
  std::vector<int> maxdeg_;
  std::vector<std::vector<std::complex<double>>> pw_;
};

template <typename PointGen>
MahlerEstimate mc_log_abs(const MultiPoly& f, long samples, Rng rng, PointGen gen,
                          const std::string& method) {
  if (f.is_zero()) throw std::domain_error("Mahler measure of zero polynomial");
  if (samples <= 0) throw std::invalid_argument("samples must be positive");
  ComplexEvaluator ev(f);
  // compensated accumulation: plain summation drifts by ~n*eps on
  // zero-variance integrands and breaks the 4*stderr tolerance
  double sum = 0.0, csum = 0.0, sumsq = 0.0, csq = 0.0;
  long n = 0;
  auto kahan = [](double& acc, double& comp, double v) {
    double y = v - comp;
    double t = acc + y;
    comp = (t - acc) - y;
    acc = t;
  };
  while (n < samples) {
    auto z = gen(rng);
    double a = std::abs(ev.eval(z));
    if (a == 0.0) continue;  // measure-zero hit: redraw
    double v = std::log(a);
    kahan(sum, csum, v);
    kahan(sumsq, csq, v * v);
    ++n;
  }
  MahlerEstimate out;
  out.value = sum / samples;
  double var = std::max(0.0, (sumsq - sum * sum / samples) / std::max(1L, samples - 1));
  out.stderr_ = std::sqrt(var / samples);
  out.samples = samples;
  out.method = method;
  return out;
}

}  // namespace detail

// Exact univariate Mahler measure: log|lead| + sum of log+ of root moduli,
// with roots refined to the requested precision.
inline MahlerEstimate mahler_univariate_exact(const MultiPoly& f, double precision = 1e-12) {
  if (f.is_zero()) throw std::domain_error("Mahler measure of zero polynomial");
  if (f.nvars() != 1) throw std::invalid_argument("mahler_univariate_exact: input not univariate");
  int d = f.degree();
  MahlerEstimate out;
  out.method = "Jensen-exact";
  out.samples = 0;
  out.stderr_ = 0.0;
  if (d == 0) {
    out.value = log_abs(f.leading_term().second);
    return out;
  }
  std::vector<std::complex<double>> coeffs(d + 1, std::complex<double>(0.0, 0.0));
  for (const auto& [m, c] : f.terms()) coeffs[m[0]] = {mpq_get_d(c.get_mpq_t()), 0.0};
  RootResult rr = find_roots(coeffs, precision);
  if (rr.max_residual > 1e-6)
    throw std::runtime_error("mahler_univariate_exact: root refinement did not converge");
  double acc = log_abs(f.coeff(Monomial{d}));
  for (const auto& z : rr.roots) {
    double mod = std::abs(z);
    if (mod > 1.0) acc += std::log(mod);
  }
  out.value = acc;
  return out;
}

// Monte Carlo average of log|f| over the unit torus.
inline MahlerEstimate mahler_torus_mc(const MultiPoly& f, long samples = kDefaultSamples,
                                      std::uint64_t seed = 0) {
  int n = f.nvars();
  return detail::mc_log_abs(
      f, samples, Rng(seed), [n](Rng& rng) { return rng.torus_point(std::max(1, n)); },
      "torus-MC");
}

// Monte Carlo average of log|f| over a product of r complex unit spheres of
// dimension group_size each. f must have exactly r*group_size variables.
inline MahlerEstimate mahler_sphere_mc(const MultiPoly& f, int groups, int group_size,
                                       long samples = kDefaultSamples, std::uint64_t seed = 0) {
  if (groups < 1 || group_size < 1) throw std::invalid_argument("mahler_sphere_mc: bad group shape");
  if (f.nvars() != groups * group_size)
    throw std::invalid_argument("mahler_sphere_mc: variable count does not match groups*group_size");
  return detail::mc_log_abs(
      f, samples, Rng(seed),
      [groups, group_size](Rng& rng) {
        std::vector<std::complex<double>> z;
        z.reserve(static_cast<size_t>(groups) * group_size);
        for (int g = 0; g < groups; ++g) {
          auto part = rng.sphere_point(group_size);
          z.insert(z.end(), part.begin(), part.end());
        }
        return z;
      },
      "sphere-MC");
}

}  // namespace nsz

#endif
