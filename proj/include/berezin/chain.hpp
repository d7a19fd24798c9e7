#pragma once

#include "berezin/half_int.hpp"
#include "berezin/wigner.hpp"

#include <cstdint>
#include <functional>
#include <random>

namespace berezin {

struct SpherePoint {
    double x = 0.0, y = 0.0, z = 1.0;
};

struct ChainConfig {
    HalfInt j, m;
    std::int64_t steps = 0;
    std::int64_t burnIn = 0;
    std::uint64_t seed = 0;
};

struct GapEstimate {
    double lambda1Hat = 0.0;
    double stdError = 0.0;
    double acceptanceRate = 0.0;
    std::int64_t samples = 0;
};

// Deterministic random stream: mt19937_64 core with a fixed 53-bit uniform
// mapping, so trajectories are bit-identical for a given seed everywhere.
// Child streams for concurrent chains come from splitmix64 seed derivation.
class RandomStream {
public:
    explicit RandomStream(std::uint64_t seed) : engine_(seed) {}
    static RandomStream child(std::uint64_t seed, std::uint64_t stream);

    std::uint64_t next_raw() { return engine_(); }
    double uniform() { return static_cast<double>(next_raw() >> 11) * 0x1.0p-53; }

private:
    std::mt19937_64 engine_;
};

SpherePoint uniform_sphere_point(RandomStream& rng);

// One step of the measurement chain: draws the geodesic angle by rejection
// against the flat envelope of height (2j+1)/2, then a uniform azimuth
// about x.  `proposals`, when given, accumulates the envelope draws (for
// acceptance-rate accounting).
SpherePoint sample_transition(const SpherePoint& x, const ZonalKernel& kernel,
                              RandomStream& rng, std::int64_t* proposals = nullptr);

// Runs the chain from a uniform start and estimates the subleading
// eigenvalue from the lag-1 autocorrelation of the z coordinate; standard
// error by batch means over 50 batches.  steps >= 1000 required.
GapEstimate estimate_lambda1(const ChainConfig& config);
GapEstimate estimate_lambda1(const ChainConfig& config,
                             const std::function<void(std::int64_t, const SpherePoint&)>& observer);

// Combines estimates from independent chains by inverse-variance weighting.
GapEstimate merge_estimates(const std::vector<GapEstimate>& estimates);

}
