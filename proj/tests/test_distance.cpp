#include <doctest.h>

#include "fishnet/distance.hpp"

using namespace fishnet;

namespace {

FishnetSpec all_threes(int m, int n) {
    std::vector<std::vector<std::int64_t>> rows;
    for (int i = 1; i <= n; ++i)
        rows.emplace_back(static_cast<size_t>(FishnetSpec::row_length(m, i)), 3);
    return FishnetSpec(m, std::move(rows));
}

}  // namespace

TEST_CASE("rational arithmetic") {
    CHECK(Rational(6, 4).display() == "3/2");
    CHECK(Rational(-6, -4) == Rational(3, 2));
    CHECK(Rational(1, -2).display() == "-1/2");
    CHECK(Rational(19, 3) > Rational(2, 1));
    CHECK(Rational::parse("7/2") == Rational(7, 2));
    CHECK(Rational::parse("5") == Rational(5, 1));
    CHECK_THROWS_AS(Rational::parse("x/2"), std::invalid_argument);
    CHECK_THROWS_AS(Rational(1, 0), std::invalid_argument);
}

TEST_CASE("induced-sphere distance on worked cases") {
    const DistanceReport a = jm_distance(all_threes(6, 5));
    CHECK(a.eligible);
    CHECK(a.distance == 3);  // ceil(5/2)
    CHECK(a.ratio == Rational(1, 1));

    const DistanceReport b = jm_distance(all_threes(8, 5));
    CHECK(b.eligible);
    CHECK(b.distance == 2);  // ceil(5/4)

    FishnetSpec weak = all_threes(6, 1);
    weak.set_entry(1, 2, 2);
    CHECK_FALSE(jm_distance(weak).eligible);

    CHECK_FALSE(jm_distance(all_threes(4, 1)).eligible);  // width < 6
}

TEST_CASE("distance is monotone in height and antitone in width") {
    for (int m : {6, 8, 10}) {
        std::int64_t prev = 0;
        for (int n = 1; n <= 9; n += 2) {
            const DistanceReport r = jm_distance(all_threes(m, n));
            REQUIRE(r.eligible);
            CHECK(r.distance >= prev);
            prev = r.distance;
        }
    }
    for (int n : {5, 7, 9}) {
        std::int64_t prev = 1'000'000;
        for (int m : {6, 8, 10}) {
            const DistanceReport r = jm_distance(all_threes(m, n));
            REQUIRE(r.eligible);
            CHECK(r.distance <= prev);
            prev = r.distance;
        }
    }
}

TEST_CASE("high-ratio knots follow the n >= r m^2 / 2 recipe") {
    const HighRatioResult r2 = build_high_ratio_knot(3, Rational(2, 1));
    CHECK(r2.spec.width == 6);
    CHECK(r2.target_height == 37);  // smallest odd >= 36
    CHECK(r2.spec.height >= 37);
    CHECK(r2.spec.height % 2 == 1);
    CHECK(r2.report.eligible);
    CHECK(r2.report.distance >= 19);
    CHECK(r2.report.ratio > Rational(2, 1));
    CHECK(component_count(r2.spec) == 1);
    CHECK(r2.spec.is_strong());
    CHECK(check_mrc_hypothesis(r2.spec).passed());
    CHECK(r2.certificate.status == Prop14Result::Status::Ok);
    CHECK(r2.certificate.certificate.beta == 3);

    const HighRatioResult r0 = build_high_ratio_knot(3, Rational(0, 1));
    CHECK(component_count(r0.spec) == 1);
    CHECK(r0.report.ratio > Rational(0, 1));

    const HighRatioResult r1 = build_high_ratio_knot(4, Rational(1, 1));
    CHECK(r1.spec.width == 8);
    CHECK(r1.target_height == 33);  // smallest odd >= 32
    CHECK(r1.report.distance >= 9);
    CHECK(r1.report.ratio > Rational(1, 1));
    CHECK(component_count(r1.spec) == 1);

    CHECK_THROWS_AS(build_high_ratio_knot(2, Rational(1, 1)), std::invalid_argument);
}

TEST_CASE("exact ceiling arithmetic, no floating point") {
    // d = ceil(n/(m-4)) probed across remainders.
    CHECK(jm_distance(all_threes(6, 1)).distance == 1);
    CHECK(jm_distance(all_threes(6, 3)).distance == 2);
    CHECK(jm_distance(all_threes(10, 11)).distance == 2);  // ceil(11/6)
    CHECK(jm_distance(all_threes(10, 13)).distance == 3);  // ceil(13/6)
}
