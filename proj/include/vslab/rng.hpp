#pragma once

#include <cmath>
#include <cstdint>
#include <Eigen/Dense>

namespace vslab {

// Counter-based splittable PRNG (splitmix64 core). A stream is a Weyl
// counter plus a finalizer; substreams are derived by hashing the parent
// seed with a child id, so Monte-Carlo work can be partitioned into
// chunks whose merged results do not depend on evaluation order.
class Rng {
 public:
  explicit Rng(std::uint64_t seed, std::uint64_t stream = 0)
      : state_(mix(seed ^ mix(stream + 0x9e3779b97f4a7c15ull))) {}

  std::uint64_t next_u64() {
    state_ += 0x9e3779b97f4a7c15ull;
    return mix(state_);
  }

  // Independent child stream; deterministic in (parent seed, child id).
  Rng split(std::uint64_t child) const {
    Rng r(0);
    r.state_ = mix(state_ ^ mix(child + 0xbf58476d1ce4e5b9ull));
    r.spare_valid_ = false;
    return r;
  }

  // Uniform in [0,1) with 53-bit resolution.
  double uniform01() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

  double uniform(double a, double b) { return a + (b - a) * uniform01(); }

  // Uniform integer in [lo, hi], inclusive, unbiased.
  std::int64_t uniform_int(std::int64_t lo, std::int64_t hi) {
    const std::uint64_t range = static_cast<std::uint64_t>(hi - lo) + 1;
    if (range == 0) return static_cast<std::int64_t>(next_u64());  // full 64-bit span
    const std::uint64_t reject_above = UINT64_MAX - UINT64_MAX % range;
    std::uint64_t v = next_u64();
    while (v >= reject_above) v = next_u64();
    return lo + static_cast<std::int64_t>(v % range);
  }

  // Standard normal via Box-Muller (inverse-free); pairs are cached.
  double normal() {
    if (spare_valid_) {
      spare_valid_ = false;
      return spare_;
    }
    const double u1 = static_cast<double>((next_u64() >> 11) + 1) * 0x1.0p-53;  // (0,1]
    const double u2 = uniform01();
    const double r = std::sqrt(-2.0 * std::log(u1));
    const double a = 2.0 * M_PI * u2;
    spare_ = r * std::sin(a);
    spare_valid_ = true;
    return r * std::cos(a);
  }

  Eigen::VectorXd gaussian_vector(int dim) {
    Eigen::VectorXd v(dim);
    for (int i = 0; i < dim; ++i) v[i] = normal();
    return v;
  }

  Eigen::VectorXd unit_sphere(int dim) {
    Eigen::VectorXd v = gaussian_vector(dim);
    double n = v.norm();
    while (n < 1e-12) {  // astronomically rare
      v = gaussian_vector(dim);
      n = v.norm();
    }
    return v / n;
  }

  // Uniform in the unit ball: sphere direction scaled by U^(1/dim).
  Eigen::VectorXd ball_point(int dim) {
    return unit_sphere(dim) * std::pow(uniform01(), 1.0 / dim);
  }

 private:
  static std::uint64_t mix(std::uint64_t z) {
    z ^= z >> 30;
    z *= 0xbf58476d1ce4e5b9ull;
    z ^= z >> 27;
    z *= 0x94d049bb133111ebull;
    z ^= z >> 31;
    return z;
  }

  std::uint64_t state_;
  double spare_ = 0.0;
  bool spare_valid_ = false;
};

}  // namespace vslab
