#pragma once

#include <functional>
#include <limits>
#include <memory>
#include <optional>

namespace entroconv {

enum class SupportKind { BoundedInterval, HalfLine, PlaneRegion };

enum class HalfLineDirection { Up, Down }; // [a, +inf) or (-inf, a]

/// Domain description for a density: a bounded interval, a half-line, or an
/// unbounded plane region given by an indicator plus a 1-D cross-section
/// profile used to integrate over it.
class SupportSpec {
public:
    static SupportSpec bounded_interval(double a, double b);
    static SupportSpec half_line(double a, HalfLineDirection dir = HalfLineDirection::Up);

    /// 2-D region {(x1,x2) : indicator}. `x1_domain` bounds the first
    /// coordinate; `cross_section(x1)` is the 1-D Lebesgue measure of the
    /// slice {x2 : (x1,x2) in region}.
    static SupportSpec plane_region(std::function<bool(double, double)> indicator,
                                    SupportSpec x1_domain,
                                    std::function<double(double)> cross_section);

    SupportKind kind() const { return kind_; }
    bool one_dimensional() const { return kind_ != SupportKind::PlaneRegion; }

    double lower() const; // -inf for a downward half-line
    double upper() const; // +inf for an upward half-line
    bool contains(double x) const;
    bool contains(double x1, double x2) const;

    HalfLineDirection direction() const { return direction_; }
    double anchor() const { return a_; } // endpoint of interval / half-line

    const SupportSpec& x1_domain() const;
    double cross_section(double x1) const;

    /// Lebesgue measure of the support when declared at construction;
    /// may be +infinity. nullopt when not declared.
    std::optional<double> declared_lebesgue_measure() const { return measure_; }
    SupportSpec& declare_lebesgue_measure(double m);

private:
    SupportSpec() = default;

    SupportKind kind_ = SupportKind::BoundedInterval;
    double a_ = 0.0;
    double b_ = 1.0;
    HalfLineDirection direction_ = HalfLineDirection::Up;
    std::optional<double> measure_;
    std::function<bool(double, double)> indicator_;
    std::function<double(double)> cross_section_;
    std::shared_ptr<SupportSpec> x1_domain_;
};

} // namespace entroconv
