#ifndef NSZ_RNG_HPP
#define NSZ_RNG_HPP

#include <cmath>
#include <complex>
#include <cstdint>
#include <vector>

namespace nsz {

// Counter-based deterministic generator (splitmix64 stream). Identical
// (seed, draw index) always yields identical output, on any platform.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next_u64() {
    std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

  // Uniform in [0, 1).
  double next_double() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

  // Uniform in (0, 1].
  double next_double_pos() { return static_cast<double>((next_u64() >> 11) + 1) * 0x1.0p-53; }

  // Uniform integer in [lo, hi] (inclusive).
  long next_int(long lo, long hi) {
    return lo + static_cast<long>(next_u64() % static_cast<std::uint64_t>(hi - lo + 1));
  }

  double next_gaussian() {
    if (have_spare_) {
      have_spare_ = false;
      return spare_;
    }
    double u1 = next_double_pos();
    double u2 = next_double();
    double r = std::sqrt(-2.0 * std::log(u1));
    double a = 2.0 * M_PI * u2;
    spare_ = r * std::sin(a);
    have_spare_ = true;
    return r * std::cos(a);
  }

  std::complex<double> next_complex_gaussian() {
    return {next_gaussian(), next_gaussian()};
  }

  // Point on the unit torus (|z_i| = 1) in C^n.
  std::vector<std::complex<double>> torus_point(int n) {
    std::vector<std::complex<double>> z(n);
    for (int i = 0; i < n; ++i) {
      double a = 2.0 * M_PI * next_double();
      z[i] = {std::cos(a), std::sin(a)};
    }
    return z;
  }

  // Point on the complex unit sphere S_n (unitary-invariant law): a
  // normalized standard complex Gaussian vector.
  std::vector<std::complex<double>> sphere_point(int n) {
    while (true) {
      std::vector<std::complex<double>> z(n);
      double norm2 = 0.0;
      for (int i = 0; i < n; ++i) {
        z[i] = next_complex_gaussian();
        norm2 += std::norm(z[i]);
      }
      if (norm2 == 0.0) continue;
      double inv = 1.0 / std::sqrt(norm2);
      for (auto& c : z) c *= inv;
      return z;
    }
  }

  // Derive an independent stream deterministically.
  Rng substream(std::uint64_t id) const {
    std::uint64_t z = state_ ^ (0xd1342543de82ef95ULL * (id + 1));
    z = (z ^ (z >> 33)) * 0xff51afd7ed558ccdULL;
    return Rng(z ^ (z >> 33));
  }

 private:
  std::uint64_t state_;
  bool have_spare_ = false;
  double spare_ = 0.0;
};

}  // namespace nsz

#endif
