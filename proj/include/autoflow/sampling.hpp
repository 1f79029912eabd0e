#pragma once

#include <cstdint>

#include "autoflow/hurwitz.hpp"

namespace autoflow {

/// splitmix64; deterministic so verification output is identical across runs.
class Rng {
  public:
    explicit Rng(std::uint64_t seed) : state_(seed) {}
    std::uint64_t next() {
        std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ull);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
        return z ^ (z >> 31);
    }
    /// Uniform in [lo, hi], inclusive.
    long range(long lo, long hi) {
        return lo + static_cast<long>(next() % static_cast<std::uint64_t>(hi - lo + 1));
    }

  private:
    std::uint64_t state_;
};

/// Small random element with coordinates bounded by `bound`.
Value random_element(const Ring &ring, Rng &rng, long bound = 9);
Value random_nonzero(const Ring &ring, Rng &rng, long bound = 9);
/// Random unit: torsion units (and small powers of the fundamental unit)
/// for modeled rings, a nonzero element for fields.
Value random_unit(const Ring &ring, Rng &rng);

CoefficientSequence random_sequence(const Ring &ring, Rng &rng, int len,
                                    bool unit_head);
HurwitzSeries random_series(const Ring &ring, Rng &rng, int order,
                            bool zero_constant = false,
                            bool nonzero_lead = false);

} // namespace autoflow
