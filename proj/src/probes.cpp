#include "entroconv/probes.hpp"

#include <cmath>

#include "entroconv/errors.hpp"

namespace entroconv {

namespace {

std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

} // namespace

std::vector<double> unit_probes(std::size_t count, std::uint64_t seed) {
    // 2 - golden ratio = 1/phi^2, the classic Kronecker increment
    constexpr double kStep = 0.38196601125010515;
    const double offset =
        static_cast<double>(splitmix64(seed) >> 11) * 0x1.0p-53;
    std::vector<double> out(count);
    double u = offset;
    for (std::size_t i = 0; i < count; ++i) {
        u += kStep;
        if (u >= 1.0) u -= 1.0;
        out[i] = u;
    }
    return out;
}

std::vector<double> probe_points(const SupportSpec& support, std::size_t count,
                                 std::uint64_t seed) {
    if (!support.one_dimensional())
        throw UnsupportedDimensionError("probe_points: support must be 1-D");
    std::vector<double> u = unit_probes(count, seed);
    if (support.kind() == SupportKind::BoundedInterval) {
        const double lo = support.lower(), hi = support.upper();
        for (double& x : u) x = lo + x * (hi - lo);
        return u;
    }
    const double anchor = support.anchor();
    const bool up = support.direction() == HalfLineDirection::Up;
    for (double& x : u) {
        const double r = x / (1.0 - x);
        x = up ? anchor + r : anchor - r;
    }
    return u;
}

} // namespace entroconv
