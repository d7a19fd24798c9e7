#include "berezin/chain.hpp"

#include <cmath>
#include <stdexcept>
#include <vector>

namespace berezin {

namespace {

constexpr double kPi = 3.14159265358979323846;
constexpr int kBatches = 50;

std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

SpherePoint rotate_from(const SpherePoint& x, double cosGamma, double phi) {
    double sinGamma = std::sqrt(std::max(0.0, 1.0 - cosGamma * cosGamma));

    // orthonormal frame (e1, e2) perpendicular to x
    double ax = 0.0, ay = 0.0, az = 0.0;
    if (std::abs(x.z) < 0.9)
        az = 1.0;
    else
        ax = 1.0;
    double e1x = x.y * az - x.z * ay, e1y = x.z * ax - x.x * az, e1z = x.x * ay - x.y * ax;
    double n1 = std::sqrt(e1x * e1x + e1y * e1y + e1z * e1z);
    e1x /= n1;
    e1y /= n1;
    e1z /= n1;
    double e2x = x.y * e1z - x.z * e1y, e2y = x.z * e1x - x.x * e1z, e2z = x.x * e1y - x.y * e1x;

    double c = std::cos(phi), s = std::sin(phi);
    SpherePoint p;
    p.x = cosGamma * x.x + sinGamma * (c * e1x + s * e2x);
    p.y = cosGamma * x.y + sinGamma * (c * e1y + s * e2y);
    p.z = cosGamma * x.z + sinGamma * (c * e1z + s * e2z);
    double n = std::sqrt(p.x * p.x + p.y * p.y + p.z * p.z);
    p.x /= n;
    p.y /= n;
    p.z /= n;
    return p;
}

}

RandomStream RandomStream::child(std::uint64_t seed, std::uint64_t stream) {
    return RandomStream(splitmix64(seed ^ splitmix64(stream)));
}

SpherePoint uniform_sphere_point(RandomStream& rng) {
    double z = 1.0 - 2.0 * rng.uniform();
    double phi = 2.0 * kPi * rng.uniform();
    double r = std::sqrt(std::max(0.0, 1.0 - z * z));
    return {r * std::cos(phi), r * std::sin(phi), z};
}

SpherePoint sample_transition(const SpherePoint& x, const ZonalKernel& kernel,
                              RandomStream& rng, std::int64_t* proposals) {
    const double envelope = 0.5 * kernel.dim();
    for (int attempt = 0; attempt < 1000000; ++attempt) {
        double t = -1.0 + 2.0 * rng.uniform();
        double h = envelope * rng.uniform();
        if (proposals) ++*proposals;
        if (h <= 0.5 * kernel(std::acos(t))) {
            double phi = 2.0 * kPi * rng.uniform();
            return rotate_from(x, t, phi);
        }
    }
    throw std::runtime_error("sample_transition: rejection sampler exceeded iteration cap");
}

GapEstimate estimate_lambda1(const ChainConfig& config) {
    return estimate_lambda1(config, nullptr);
}

GapEstimate estimate_lambda1(
    const ChainConfig& config,
    const std::function<void(std::int64_t, const SpherePoint&)>& observer) {
    if (config.steps < 1000)
        throw std::invalid_argument("estimate_lambda1: need at least 1000 steps");
    if (config.burnIn < 0) throw std::invalid_argument("estimate_lambda1: negative burn-in");

    ZonalKernel kernel(config.j, config.m);
    RandomStream rng(config.seed);
    std::int64_t proposals = 0, accepted = 0;

    SpherePoint p = uniform_sphere_point(rng);
    std::int64_t step = 0;
    if (observer) observer(step, p);
    for (std::int64_t i = 0; i < config.burnIn; ++i) {
        p = sample_transition(p, kernel, rng, &proposals);
        ++accepted;
        if (observer) observer(++step, p);
    }

    const std::int64_t n = config.steps;
    std::vector<double> y(n + 1);
    y[0] = p.z;
    for (std::int64_t i = 0; i < n; ++i) {
        p = sample_transition(p, kernel, rng, &proposals);
        ++accepted;
        y[i + 1] = p.z;
        if (observer) observer(++step, p);
    }

    double num = 0.0, den = 0.0;
    for (std::int64_t i = 0; i < n; ++i) {
        num += y[i] * y[i + 1];
        den += y[i] * y[i];
    }

    // batch means on the ratio estimator
    std::vector<double> batch(kBatches, 0.0);
    const std::int64_t len = n / kBatches;
    for (int b = 0; b < kBatches; ++b) {
        double bn = 0.0, bd = 0.0;
        std::int64_t lo = b * len;
        std::int64_t hi = (b == kBatches - 1) ? n : lo + len;
        for (std::int64_t i = lo; i < hi; ++i) {
            bn += y[i] * y[i + 1];
            bd += y[i] * y[i];
        }
        batch[b] = bd > 0.0 ? bn / bd : 0.0;
    }
    double mean = 0.0;
    for (double v : batch) mean += v;
    mean /= kBatches;
    double var = 0.0;
    for (double v : batch) var += (v - mean) * (v - mean);
    var /= (kBatches - 1);

    GapEstimate est;
    est.lambda1Hat = den > 0.0 ? num / den : 0.0;
    est.stdError = std::sqrt(var / kBatches);
    est.acceptanceRate = proposals > 0 ? static_cast<double>(accepted) / proposals : 1.0;
    est.samples = n;
    return est;
}

GapEstimate merge_estimates(const std::vector<GapEstimate>& estimates) {
    if (estimates.empty()) throw std::invalid_argument("merge_estimates: nothing to merge");
    double wsum = 0.0, value = 0.0, acc = 0.0;
    std::int64_t samples = 0;
    for (const auto& e : estimates) {
        if (e.stdError <= 0.0) throw std::invalid_argument("merge_estimates: nonpositive stderr");
        double w = 1.0 / (e.stdError * e.stdError);
        wsum += w;
        value += w * e.lambda1Hat;
        samples += e.samples;
        acc += e.acceptanceRate * static_cast<double>(e.samples);
    }
    GapEstimate out;
    out.lambda1Hat = value / wsum;
    out.stdError = std::sqrt(1.0 / wsum);
    out.samples = samples;
    out.acceptanceRate = samples > 0 ? acc / static_cast<double>(samples) : 1.0;
    return out;
}

}
