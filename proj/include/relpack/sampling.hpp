#pragma once

#include <cstddef>
#include <cstdint>
#include <string_view>
#include <vector>

#include "relpack/params.hpp"
#include "relpack/types.hpp"

namespace relpack {

enum class SampleStrategy {
  Grid,            // cell centres of a g x g grid in the first factor disc
  UniformBall,     // uniform in B^{2n}(r)
  BoundaryBiased,  // squared radius uniform in [0.99 r^2, r^2 - 1e-12]
  Midline,         // near the real slice: every |p_k| in [1e-6, 1e-2] or 0
  DiameterOnly,    // on the real slice: all p_k = 0
};

std::string_view to_string(SampleStrategy strategy);

struct SampleSpec {
  SampleStrategy strategy = SampleStrategy::UniformBall;
  std::size_t count = 0;
  std::uint64_t seed = 0;
};

/// Points of the open ball B^{2n}(r), interleaved (q1, p1, ..., qn, pn),
/// all with squared norm < r^2 - 1e-14.
///
/// Points are generated in fixed-size chunks, each from its own engine
/// seeded by (seed, chunk, strategy), so the sequence does not depend on
/// the number of threads. Grid ignores the seed and emits at most
/// count points (cells outside the disc are dropped).
std::vector<ProductPoint> sample(const SampleSpec& spec,
                                 const PackingParams& params);

}  // namespace relpack
