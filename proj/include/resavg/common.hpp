#pragma once

#include <Eigen/Dense>

#include <cstdint>
#include <random>
#include <stdexcept>
#include <string>

namespace resavg {

using Vec = Eigen::VectorXd;
using Mat = Eigen::MatrixXd;

/// Raised when a spec fails validation (bad weights, non-monotone matrix,
/// dimension mismatch, malformed JSON, ...).
class SpecError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Raised when a computation cannot be completed (singular system where
/// invertibility is guaranteed in exact arithmetic, exhausted budget where a
/// value is required, ...).
class ComputeError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Knobs for sampled checks and fixed-point iterations.
struct SampleConfig {
  std::uint64_t seed = 0;
  int pairCount = 200;
  double radius = 10.0;
  double tol = 1e-10;
  int maxIter = 100000;

  void validate() const {
    if (pairCount < 1) throw SpecError("SampleConfig: pairCount must be >= 1");
    if (!(radius > 0)) throw SpecError("SampleConfig: radius must be > 0");
    if (!(tol > 0)) throw SpecError("SampleConfig: tol must be > 0");
    if (maxIter < 1) throw SpecError("SampleConfig: maxIter must be >= 1");
  }
};

inline void checkFinite(const Vec& x, const char* what) {
  if (!x.allFinite()) throw SpecError(std::string(what) + ": entries must be finite");
}

inline void checkDim(const Vec& x, Eigen::Index d, const char* what) {
  if (x.size() != d)
    throw SpecError(std::string(what) + ": dimension mismatch (" +
                    std::to_string(x.size()) + " vs " + std::to_string(d) + ")");
}

/// Deterministic sampler. Draws are derived from raw mt19937_64 output so
/// that streams do not depend on the standard library's distribution
/// implementations.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : gen_(seed) {}

  double uniform01() { return static_cast<double>(gen_() >> 11) * 0x1.0p-53; }

  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform01(); }

  double normal() {
    if (haveSpare_) {
      haveSpare_ = false;
      return spare_;
    }
    // Box-Muller; u clamped away from 0.
    double u = uniform01();
    if (u < 1e-300) u = 1e-300;
    double v = uniform01();
    double r = std::sqrt(-2.0 * std::log(u));
    spare_ = r * std::sin(2.0 * M_PI * v);
    haveSpare_ = true;
    return r * std::cos(2.0 * M_PI * v);
  }

  /// Uniform in the closed ball of the given radius.
  Vec inBall(int dim, double radius) {
    Vec g(dim);
    for (int i = 0; i < dim; ++i) g[i] = normal();
    double n = g.norm();
    if (n < 1e-300) return Vec::Zero(dim);
    double r = radius * std::pow(uniform01(), 1.0 / dim);
    return (r / n) * g;
  }

 private:
  std::mt19937_64 gen_;
  bool haveSpare_ = false;
  double spare_ = 0.0;
};

}  // namespace resavg
