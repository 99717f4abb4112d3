#pragma once

#include <cstdint>
#include <random>

#include "sobolev/jordan.hpp"

namespace sobolev {

/// Portable uniform doubles on top of mt19937_64 (the standard distributions
/// are implementation-defined, which would break byte-identical reruns).
class Rng {
public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  double uniform() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }
  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }
  /// Integer in [lo, hi].
  int integer(int lo, int hi) {
    return lo + static_cast<int>(engine_() % static_cast<std::uint64_t>(hi - lo + 1));
  }
  cplx unimodular();

private:
  std::mt19937_64 engine_;
};

struct RandomSpectralOptions {
  int max_dim = 40;
  int min_dim = 1;
  int max_block = 4;
  double re_lo = -2.0, re_hi = 2.0;
  double im_lo = -1.0, im_hi = 1.0;
  /// Nodes are rejected if closer than this to an earlier node.
  double min_separation = 0.2;
  /// |alpha| and |beta| are drawn from [scale_lo, scale_hi] with random phase.
  double scale_lo = 0.5, scale_hi = 2.0;
  bool real_data = false;
};

/// Random valid (Z, w) with block sizes in [1, max_block] and total dimension
/// in [min_dim, max_dim].
SpectralData random_spectral_data(Rng& rng, const RandomSpectralOptions& opts = {});

} // namespace sobolev
