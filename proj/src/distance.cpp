#include "fishnet/distance.hpp"

#include <numeric>
#include <stdexcept>

namespace fishnet {

Rational::Rational(std::int64_t n, std::int64_t d) : num(n), den(d) {
    if (den == 0) throw std::invalid_argument("zero denominator");
    if (den < 0) {
        num = -num;
        den = -den;
    }
    const std::int64_t g = std::gcd(num < 0 ? -num : num, den);
    if (g > 1) {
        num /= g;
        den /= g;
    }
}

std::string Rational::display() const {
    if (den == 1) return std::to_string(num);
    return std::to_string(num) + "/" + std::to_string(den);
}

Rational Rational::parse(const std::string& text) {
    const size_t slash = text.find('/');
    try {
        size_t used = 0;
        if (slash == std::string::npos) {
            const std::int64_t n = std::stoll(text, &used);
            if (used != text.size()) throw std::invalid_argument("");
            return Rational(n, 1);
        }
        const std::int64_t n = std::stoll(text.substr(0, slash), &used);
        if (used != slash) throw std::invalid_argument("");
        const std::string dtxt = text.substr(slash + 1);
        const std::int64_t d = std::stoll(dtxt, &used);
        if (used != dtxt.size()) throw std::invalid_argument("");
        return Rational(n, d);
    } catch (const std::exception&) {
        throw std::invalid_argument("bad rational '" + text + "', expected p or p/q");
    }
}

DistanceReport jm_distance(const FishnetSpec& spec) {
    DistanceReport report;
    report.digest = spec_digest(spec);
    report.width = spec.width;
    report.height = spec.height;
    report.eligible = spec.is_strong() && spec.width >= 6;
    if (!report.eligible) {
        report.note = spec.width < 6 ? "ineligible: width < 6" : "ineligible: not a strong fishnet";
        return report;
    }
    const std::int64_t n = spec.height, m = spec.width;
    report.distance = (n + (m - 4) - 1) / (m - 4);  // ceil(n / (m-4)), exact
    report.ratio = Rational(report.distance, m / 2);
    report.note = "induced-sphere distance (Johnson-Moriah)";
    return report;
}

HighRatioResult build_high_ratio_knot(int bridges, const Rational& r) {
    if (bridges < 3) throw std::invalid_argument("high-ratio construction needs b >= 3");
    if (r.num < 0) throw std::invalid_argument("ratio bound must be nonnegative");
    const int m = 2 * bridges;

    // Smallest odd integer n0 >= r m^2 / 2, i.e. >= r.num * m^2 / (2 r.den).
    const std::int64_t p = r.num * static_cast<std::int64_t>(m) * m;
    const std::int64_t q = 2 * r.den;
    std::int64_t n0 = (p + q - 1) / q;  // ceil for nonnegative p
    if (n0 < 1) n0 = 1;
    if (n0 % 2 == 0) ++n0;

    DeltaSet delta(std::vector<std::int64_t>(static_cast<size_t>((m - 2) / 2), 3));
    ComponentSearchResult search = build_with_component_count(m, delta, 1);
    if (!search.found)
        throw std::runtime_error("component search exhausted (frontier " +
                                 std::to_string(search.frontier_size) + ")");
    FishnetSpec spec = search.spec;
    const int base_components = component_count(spec);

    // Identity-image padding: even rows of 4s and odd rows of 6s keep the
    // spec strong and Delta-divisible without touching the components.
    while (spec.height < n0) {
        auto rows = spec.rows;
        rows.emplace_back(static_cast<size_t>(m / 2), 4);
        rows.emplace_back(static_cast<size_t>((m - 2) / 2), 6);
        spec = FishnetSpec(m, std::move(rows));
    }
    if (component_count(spec) != base_components || base_components != 1)
        throw std::logic_error("padding changed the component count");
    if (!in_l_delta(spec, delta)) throw std::logic_error("padding left the Delta family");

    HighRatioResult out;
    out.spec = std::move(spec);
    out.target_height = n0;
    out.report = jm_distance(out.spec);
    out.certificate = prop14_certificate(out.spec);
    if (out.certificate.status != Prop14Result::Status::Ok)
        throw std::logic_error("high-ratio spec failed its certificate");
    if (!(out.report.ratio > r))
        throw std::logic_error("achieved ratio " + out.report.ratio.display() +
                               " does not exceed the bound " + r.display());
    return out;
}

}  // namespace fishnet
