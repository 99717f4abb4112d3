#include "sobolev/random.hpp"

#include <cmath>
#include <numbers>

namespace sobolev {

cplx Rng::unimodular() { return std::polar(1.0, uniform(0.0, 2.0 * std::numbers::pi)); }

SpectralData random_spectral_data(Rng& rng, const RandomSpectralOptions& opts) {
  const int target = rng.integer(opts.min_dim, opts.max_dim);
  std::vector<JordanBlock> blocks;
  std::vector<cplx> betas;
  int dim = 0;
  while (dim < target) {
    const int size = std::min(rng.integer(1, opts.max_block), target - dim);
    cplx node;
    for (int attempt = 0;; ++attempt) {
      node = cplx(rng.uniform(opts.re_lo, opts.re_hi),
                  opts.real_data ? 0.0 : rng.uniform(opts.im_lo, opts.im_hi));
      bool ok = true;
      for (const auto& b : blocks) ok = ok && std::abs(b.eigenvalue - node) >= opts.min_separation;
      if (ok) break;
      if (attempt > 10000) throw std::invalid_argument("random spectral data: box too crowded");
    }
    JordanBlock block{node, {}};
    for (int r = 1; r < size; ++r) {
      const double mag = rng.uniform(opts.scale_lo, opts.scale_hi);
      block.superdiag.push_back(opts.real_data ? cplx(mag) : mag * rng.unimodular());
    }
    const double bmag = rng.uniform(opts.scale_lo, opts.scale_hi);
    betas.push_back(opts.real_data ? cplx(bmag) : bmag * rng.unimodular());
    blocks.push_back(std::move(block));
    dim += size;
  }
  return {JordanOperator(std::move(blocks)), WeightVector(std::move(betas))};
}

} // namespace sobolev
