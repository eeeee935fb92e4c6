#ifndef NSZ_ROOTS_HPP
#define NSZ_ROOTS_HPP

#include <algorithm>
#include <cmath>
#include <complex>
#include <stdexcept>
#include <vector>

namespace nsz {

// Aberth-Ehrlich simultaneous root refinement for a complex-coefficient
// univariate polynomial, with a long-double Newton polish. Good to near
// machine precision at the low degrees this project needs.
struct RootResult {
  std::vector<std::complex<double>> roots;
  double max_residual;  // max |f(z_i)| / |lead|, scale-free-ish
  int iterations;
};

namespace detail {

inline std::complex<double> horner(const std::vector<std::complex<double>>& c,
                                   std::complex<double> z) {
  std::complex<double> acc(0.0, 0.0);
  for (size_t i = c.size(); i-- > 0;) acc = acc * z + c[i];
  return acc;
}

inline std::complex<long double> horner_l(const std::vector<std::complex<long double>>& c,
                                          std::complex<long double> z) {
  std::complex<long double> acc(0.0L, 0.0L);
  for (size_t i = c.size(); i-- > 0;) acc = acc * z + c[i];
  return acc;
}

}  // namespace detail

// coeffs[k] multiplies x^k; coeffs.back() != 0, degree >= 1.
inline RootResult find_roots(std::vector<std::complex<double>> coeffs,
                             double tol = 1e-14, int max_iter = 400) {
  while (coeffs.size() > 1 && std::abs(coeffs.back()) == 0.0) coeffs.pop_back();
  int d = static_cast<int>(coeffs.size()) - 1;
  if (d < 1) throw std::invalid_argument("find_roots: degree must be >= 1");

  // Strip roots at the origin.
  int zero_roots = 0;
  while (zero_roots < d && std::abs(coeffs[zero_roots]) == 0.0) ++zero_roots;
  std::vector<std::complex<double>> c(coeffs.begin() + zero_roots, coeffs.end());
  int dd = d - zero_roots;

  std::vector<std::complex<double>> z(dd);
  // Initial guesses on a circle sized by a coefficient-based root bound.
  double lead = std::abs(c.back());
  double radius = 0.0;
  for (int k = 0; k < dd; ++k) radius = std::max(radius, std::pow(std::abs(c[k]) / lead, 1.0 / (dd - k)));
  radius = 2.0 * std::max(radius, 0.5);
  for (int i = 0; i < dd; ++i) {
    double a = 2.0 * M_PI * i / dd + 0.4;
    z[i] = std::polar(radius * (1.0 + 0.05 * i / std::max(1, dd)), a);
  }

  std::vector<std::complex<double>> deriv(dd);
  for (int k = 1; k <= dd; ++k) deriv[k - 1] = c[k] * static_cast<double>(k);

  int iters = 0;
  for (; iters < max_iter; ++iters) {
    double worst = 0.0;
    for (int i = 0; i < dd; ++i) {
      std::complex<double> p = detail::horner(c, z[i]);
      std::complex<double> dp = detail::horner(deriv, z[i]);
      std::complex<double> newton = (dp == std::complex<double>(0.0, 0.0)) ? p : p / dp;
      std::complex<double> repulse(0.0, 0.0);
      for (int j = 0; j < dd; ++j) {
        if (j == i) continue;
        std::complex<double> diff = z[i] - z[j];
        if (std::abs(diff) < 1e-300) diff = std::complex<double>(1e-300, 0);
        repulse += 1.0 / diff;
      }
      std::complex<double> delta = newton / (1.0 - newton * repulse);
      z[i] -= delta;
      worst = std::max(worst, std::abs(delta) / std::max(1.0, std::abs(z[i])));
    }
    if (worst < tol) break;
  }

  // Newton polish in long double.
  std::vector<std::complex<long double>> cl(c.size()), dl(deriv.size());
  for (size_t k = 0; k < c.size(); ++k) cl[k] = c[k];
  for (size_t k = 0; k < deriv.size(); ++k) dl[k] = deriv[k];
  for (int i = 0; i < dd; ++i) {
    std::complex<long double> zi(z[i].real(), z[i].imag());
    for (int it = 0; it < 6; ++it) {
      std::complex<long double> p = detail::horner_l(cl, zi);
      std::complex<long double> dp = detail::horner_l(dl, zi);
      if (std::abs(dp) == 0.0L) break;
      zi -= p / dp;
    }
    z[i] = {static_cast<double>(zi.real()), static_cast<double>(zi.imag())};
  }

  RootResult out;
  out.roots.assign(zero_roots, std::complex<double>(0.0, 0.0));
  out.roots.insert(out.roots.end(), z.begin(), z.end());
  out.iterations = iters;
  out.max_residual = 0.0;
  double scale = std::abs(coeffs.back());
  for (const auto& r : out.roots) {
    double m = std::max(1.0, std::abs(r));
    double denom = scale * std::pow(m, d);
    out.max_residual = std::max(out.max_residual, std::abs(detail::horner(coeffs, r)) / denom);
  }
  return out;
}

}  // namespace nsz

#endif
