#pragma once

#include <cstdint>
#include <random>

#include <Eigen/Dense>

namespace grasshard {

// Deterministic RNG used everywhere a seed is accepted.
//
// Engine: std::mt19937_64 seeded with the raw 64-bit seed. Its output sequence
// is fixed by the C++ standard, so it is identical across platforms.
// Uniform doubles take the top 53 bits: (x >> 11) * 2^-53, in [0, 1).
// Normals use the basic Box-Muller transform on two uniforms, emitting both
// variates in order. We avoid std::*_distribution because their algorithms
// are implementation-defined.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t next_u64() { return engine_(); }
  double uniform();
  // Uniform integer in [0, bound) by rejection, bound > 0.
  std::uint64_t below(std::uint64_t bound);
  double normal();

  Eigen::MatrixXd gaussian(Eigen::Index rows, Eigen::Index cols);

 private:
  std::mt19937_64 engine_;
  bool has_spare_ = false;
  double spare_ = 0.0;
};

}  // namespace grasshard
