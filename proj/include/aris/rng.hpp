#pragma once

#include <cstdint>
#include <initializer_list>

#include <Eigen/Dense>

namespace aris {

/// SplitMix64 step (Steele, Lea, Flood 2014). Used both as the stream mixer
/// and as the generator itself; output quality is sufficient for scenario
/// draws and fully portable, which keeps runs byte-reproducible.
inline std::uint64_t splitmix64(std::uint64_t& state) {
    std::uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

/// Deterministic sub-stream derivation: folds each path element into the
/// master seed. Distinct paths give statistically independent streams, so
/// user placement and per-start initialization never share draws.
inline std::uint64_t derive_stream(std::uint64_t master,
                                   std::initializer_list<std::uint64_t> path) {
    std::uint64_t s = master;
    (void)splitmix64(s);
    for (std::uint64_t p : path) {
        s ^= 0x9e3779b97f4a7c15ULL * (p + 1);
        (void)splitmix64(s);
    }
    return s;
}

/// Minimal uniform generator over SplitMix64, 53-bit mantissa mapping.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : state_(seed) {}

    /// Uniform in [0, 1).
    double next() { return static_cast<double>(splitmix64(state_) >> 11) * 0x1.0p-53; }

    /// Uniform in [lo, hi).
    double uniform(double lo, double hi) { return lo + next() * (hi - lo); }

    Eigen::VectorXd uniform_vector(const Eigen::VectorXd& lo, const Eigen::VectorXd& hi) {
        Eigen::VectorXd x(lo.size());
        for (Eigen::Index i = 0; i < x.size(); ++i) x[i] = uniform(lo[i], hi[i]);
        return x;
    }

private:
    std::uint64_t state_;
};

}  // namespace aris
