#pragma once

#include <cstdint>
#include <vector>

#include "entroconv/density.hpp"
#include "entroconv/discrete.hpp"

namespace entroconv::testutil {

// Deterministic generator (splitmix64) so every platform replays the same
// random cases; std::uniform_real_distribution is not portable across
// standard libraries.
class TestRng {
public:
    explicit TestRng(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next() {
        state_ += 0x9e3779b97f4a7c15ULL;
        std::uint64_t z = state_;
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

    double uniform() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }
    double uniform(double lo, double hi) { return lo + uniform() * (hi - lo); }
    int uniform_int(int lo, int hi) {
        return lo + static_cast<int>(next() % static_cast<std::uint64_t>(hi - lo + 1));
    }

private:
    std::uint64_t state_;
};

// Strictly positive piecewise-constant density on [0,1] with random cell
// boundaries and values, normalized to unit mass.
inline Density random_positive_pc(TestRng& rng, int min_cells = 2, int max_cells = 8) {
    const int cells = rng.uniform_int(min_cells, max_cells);
    std::vector<double> breakpoints{0.0};
    for (int i = 1; i < cells; ++i)
        breakpoints.push_back(static_cast<double>(i) / cells +
                              rng.uniform(-0.3, 0.3) / cells);
    breakpoints.push_back(1.0);
    std::vector<double> values(static_cast<std::size_t>(cells));
    double mass = 0.0;
    for (int i = 0; i < cells; ++i) {
        values[static_cast<std::size_t>(i)] = rng.uniform(0.1, 3.0);
        mass += values[static_cast<std::size_t>(i)] * (breakpoints[i + 1] - breakpoints[i]);
    }
    for (double& v : values) v /= mass;
    return Density::piecewise_constant(std::move(breakpoints), std::move(values));
}

// Strictly positive random finite PMF with the given support size.
inline DiscretePmf random_positive_pmf(TestRng& rng, int size) {
    std::vector<double> p(static_cast<std::size_t>(size));
    double total = 0.0;
    for (double& v : p) {
        v = rng.uniform(0.05, 1.0);
        total += v;
    }
    for (double& v : p) v /= total;
    // nudge the last entry so the sum is exactly representable near 1
    double partial = 0.0;
    for (std::size_t i = 0; i + 1 < p.size(); ++i) partial += p[i];
    p.back() = 1.0 - partial;
    return DiscretePmf::finite(std::move(p));
}

} // namespace entroconv::testutil
