#pragma once

#include <cstdint>
#include <string>

#include "fishnet/coloring.hpp"
#include "fishnet/spec.hpp"

namespace fishnet {

// Exact rational arithmetic; denominators stay positive, values reduced.
struct Rational {
    std::int64_t num = 0;
    std::int64_t den = 1;

    Rational() = default;
    Rational(std::int64_t n, std::int64_t d);

    bool operator==(const Rational& rhs) const { return num == rhs.num && den == rhs.den; }
    bool operator>(const Rational& rhs) const { return num * rhs.den > rhs.num * den; }
    bool operator>=(const Rational& rhs) const { return num * rhs.den >= rhs.num * den; }
    std::string display() const;

    static Rational parse(const std::string& text);  // "p/q" or "p"
};

// Johnson-Moriah induced-sphere distance for strong fishnets of width >= 6:
// ceil(n / (m-4)). Ineligible inputs are a report state, not an error.
struct DistanceReport {
    std::string digest;
    int width = 0;
    int height = 0;
    bool eligible = false;
    std::int64_t distance = 0;  // valid when eligible
    Rational ratio;             // distance / (m/2), valid when eligible
    std::string note;
};

DistanceReport jm_distance(const FishnetSpec& spec);

struct HighRatioResult {
    FishnetSpec spec;
    DistanceReport report;
    Prop14Result certificate;
    std::int64_t target_height = 0;  // smallest odd n >= r m^2 / 2
};

// Width 2b knot whose induced-sphere distance over bridge number exceeds r:
// a one-component strong Delta-divisible spec padded with identity-image row
// blocks until the height reaches the target.
HighRatioResult build_high_ratio_knot(int bridges, const Rational& r);

}  // namespace fishnet
