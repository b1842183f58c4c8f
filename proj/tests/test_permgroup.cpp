#include <doctest.h>

#include <random>

#include "fishnet/permgroup.hpp"
#include "test_util.hpp"

using namespace fishnet;
using namespace fishnet::permgroup;

namespace {

// Exhaustive check that no subset of the given size generates S_N.
bool some_subset_generates(int degree, int subset_size, std::int64_t full_order) {
    const auto transpositions = all_transpositions(degree);
    const int n = static_cast<int>(transpositions.size());
    std::vector<int> pick(static_cast<size_t>(subset_size));
    for (int i = 0; i < subset_size; ++i) pick[static_cast<size_t>(i)] = i;
    while (true) {
        std::vector<Permutation> gens;
        for (int i : pick) gens.push_back(transpositions[static_cast<size_t>(i)]);
        if (generate(gens).order == full_order) return true;
        int j = subset_size - 1;
        while (j >= 0 && pick[static_cast<size_t>(j)] == n - subset_size + j) --j;
        if (j < 0) return false;
        ++pick[static_cast<size_t>(j)];
        for (int i = j + 1; i < subset_size; ++i)
            pick[static_cast<size_t>(i)] = pick[static_cast<size_t>(i - 1)] + 1;
    }
}

std::int64_t factorial(int n) {
    std::int64_t f = 1;
    for (int i = 2; i <= n; ++i) f *= i;
    return f;
}

}  // namespace

TEST_CASE("generate: closure orders on small sets") {
    const auto s3 = generate({Permutation::transposition(3, 1, 2), Permutation::transposition(3, 2, 3)});
    CHECK(s3.order == 6);
    CHECK(s3.transitive);
    CHECK_FALSE(s3.cap_exceeded);

    CHECK(generate({Permutation::transposition(3, 1, 2)}).order == 2);

    const auto klein = generate({Permutation::transposition(4, 1, 2), Permutation::transposition(4, 3, 4)});
    CHECK(klein.order == 4);
    CHECK_FALSE(klein.transitive);

    const auto capped = generate({Permutation::transposition(4, 1, 2),
                                  Permutation::transposition(4, 2, 3),
                                  Permutation::transposition(4, 3, 4)},
                                 10);
    CHECK(capped.cap_exceeded);
}

TEST_CASE("transposition graph connectivity detects full symmetric images") {
    const std::vector<Permutation> path4{Permutation::transposition(4, 1, 2),
                                         Permutation::transposition(4, 2, 3),
                                         Permutation::transposition(4, 3, 4)};
    CHECK(is_full_symmetric_via_transpositions(path4, 4));

    const std::vector<Permutation> split{Permutation::transposition(4, 1, 2),
                                         Permutation::transposition(4, 3, 4)};
    CHECK_FALSE(is_full_symmetric_via_transpositions(split, 4));

    std::vector<Permutation> path6;
    for (int i = 1; i < 6; ++i) path6.push_back(Permutation::transposition(6, i, i + 1));
    CHECK(is_full_symmetric_via_transpositions(path6, 6));
    CHECK(generate(path6).order == 720);  // brute-force cross-check

    CHECK_THROWS_AS(
        is_full_symmetric_via_transpositions({Permutation::identity(4)}, 4),
        std::invalid_argument);
}

TEST_CASE("connectivity agrees with brute-force generation on random sets") {
    std::mt19937 rng(5150);
    for (int trial = 0; trial < 200; ++trial) {
        const int degree = 3 + static_cast<int>(rng() % 4);  // 3..6
        const auto all = all_transpositions(degree);
        std::uniform_int_distribution<size_t> pick(0, all.size() - 1);
        std::uniform_int_distribution<int> count(1, 2 * degree);
        std::vector<Permutation> gens;
        for (int i = count(rng); i > 0; --i) gens.push_back(all[pick(rng)]);
        CHECK(is_full_symmetric_via_transpositions(gens, degree) ==
              (generate(gens).order == factorial(degree)));
    }
}

TEST_CASE("minimum transposition count: spanning bound matches exhaustion") {
    CHECK(min_transpositions_lower_bound(2) == 1);
    CHECK(min_transpositions_lower_bound(4) == 3);
    CHECK(min_transpositions_lower_bound(5) == 4);
    for (int degree : {3, 4, 5}) {
        CHECK_FALSE(some_subset_generates(degree, degree - 2, factorial(degree)));
        CHECK(some_subset_generates(degree, degree - 1, factorial(degree)));
    }
}

TEST_CASE("order of a product") {
    CHECK(order_of_product(Permutation::transposition(3, 1, 2), Permutation::transposition(3, 2, 3)) == 3);
    CHECK(order_of_product(Permutation::transposition(4, 1, 2), Permutation::transposition(4, 3, 4)) == 2);
    const Permutation a = Permutation::transposition(4, 1, 3);
    CHECK(order_of_product(a, a) == 1);
}

TEST_CASE("order of a product divides the generated order") {
    std::mt19937 rng(31);
    for (int trial = 0; trial < 100; ++trial) {
        const int degree = 4 + static_cast<int>(rng() % 3);
        const Permutation a = testutil::random_involution(rng, degree);
        const Permutation b = testutil::random_involution(rng, degree);
        const auto group = generate({a, b});
        CHECK(group.order % order_of_product(a, b) == 0);
    }
}

TEST_CASE("dihedral realizations") {
    const auto d3 = dihedral_reflections(3);
    CHECK(d3.reflections.size() == 3);
    CHECK(generate(d3.reflections).order == 6);

    const auto d11 = dihedral_reflections(11);
    CHECK(d11.reflections.size() == 11);
    CHECK(generate(d11.reflections).order == 22);

    const auto d2 = dihedral_reflections(2);
    CHECK(d2.degree == 4);
    CHECK(d2.reflections.size() == 2);
    CHECK(generate(d2.reflections).order == 4);  // Klein four
    CHECK(order_of_product(d2.reflections[0], d2.reflections[1]) == 2);

    for (int q = 2; q <= 12; ++q) {
        const auto d = dihedral_reflections(q);
        for (const auto& r : d.reflections) CHECK(r.is_involution());
        CHECK(generate(d.reflections).order == 2 * q);
        if (q >= 3)
            CHECK(order_of_product(d.reflections[0], d.reflections[1]) == q);
    }
}
