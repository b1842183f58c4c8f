#include <doctest.h>

#include <random>

#include "fishnet/coloring.hpp"
#include "test_util.hpp"

using namespace fishnet;

namespace {

Permutation tr(int n, int i, int j) { return Permutation::transposition(n, i, j); }

FishnetSpec trefoil() { return FishnetSpec(4, {{3}}); }

}  // namespace

TEST_CASE("twist propagation on worked pairs") {
    // Shared point, order 3, t = 3: pass-through in the same order.
    auto [a1, b1] = propagate_twist(tr(3, 1, 2), tr(3, 2, 3), 3);
    CHECK(a1 == tr(3, 1, 2));
    CHECK(b1 == tr(3, 2, 3));
    // Commuting labels, odd t: they swap.
    auto [a2, b2] = propagate_twist(tr(4, 1, 2), tr(4, 3, 4), 1);
    CHECK(a2 == tr(4, 3, 4));
    CHECK(b2 == tr(4, 1, 2));
    // One positive crossing conjugates: (1 2)(2 3)(1 2) = (1 3).
    auto [a3, b3] = propagate_twist(tr(3, 1, 2), tr(3, 2, 3), 1);
    CHECK(a3 == tr(3, 1, 3));
    CHECK(b3 == tr(3, 1, 2));

    CHECK_THROWS_AS(propagate_twist(Permutation::identity(3), tr(3, 1, 2), 1),
                    std::invalid_argument);
}

TEST_CASE("propagation laws on random involution pairs") {
    std::mt19937 rng(123);
    std::uniform_int_distribution<int> t_dist(-9, 9);
    for (int trial = 0; trial < 1000; ++trial) {
        const int degree = 4 + static_cast<int>(rng() % 5);  // 4..8
        const Permutation a = testutil::random_involution(rng, degree);
        const Permutation b = testutil::random_involution(rng, degree);
        const std::int64_t t = t_dist(rng);

        // Inverse law.
        auto [x, y] = propagate_twist(a, b, t);
        auto [back_a, back_b] = propagate_twist(x, y, -t);
        CHECK(back_a == a);
        CHECK(back_b == b);

        // Divisibility law: multiples of ord(ab) act trivially.
        const std::int64_t r = permgroup::order_of_product(a, b);
        for (std::int64_t k = -3; k <= 3; ++k) {
            auto [u, v] = propagate_twist(a, b, k * r);
            CHECK(u == a);
            CHECK(v == b);
        }

        // Commuting-parity law.
        if (r <= 2) {
            auto [u, v] = propagate_twist(a, b, t);
            if (t % 2 == 0) {
                CHECK(u == a);
                CHECK(v == b);
            } else {
                CHECK(u == b);
                CHECK(v == a);
            }
        }

        // The modular reduction matches naive single-crossing iteration.
        Permutation na = a, nb = b;
        for (std::int64_t i = 0; i < std::abs(t); ++i) {
            auto step = propagate_twist(na, nb, t >= 0 ? 1 : -1);
            na = step.first;
            nb = step.second;
        }
        CHECK(na == x);
        CHECK(nb == y);
    }
}

TEST_CASE("verify_coloring on the trefoil") {
    // Symbolic backend.
    const auto symbolic =
        verify_coloring(trefoil(), {Label::symbolic(1), Label::symbolic(2)}, Backend::Symbolic);
    REQUIRE(symbolic.ok);
    CHECK_FALSE(recheck(symbolic.coloring).has_value());

    // Concrete backend, dihedral image of order 6.
    const auto concrete = verify_coloring(
        trefoil(), {Label::concrete(tr(3, 1, 2)), Label::concrete(tr(3, 2, 3))}, Backend::Concrete);
    REQUIRE(concrete.ok);
    std::vector<Permutation> gens;
    for (const auto& l : concrete.coloring.maxima) gens.push_back(l.perm());
    CHECK(permgroup::generate(gens).order == 6);

    // Commuting labels swap under t = 3 and the bottom cap fails.
    const auto bad = verify_coloring(
        trefoil(), {Label::concrete(tr(4, 1, 2)), Label::concrete(tr(4, 3, 4))}, Backend::Concrete);
    CHECK_FALSE(bad.ok);
    CHECK(bad.failure.kind == ColoringFailure::Kind::CapMismatch);
    CHECK(bad.failure.cap == 1);
}

TEST_CASE("symbolic fragment fails loudly outside its two rules") {
    const FishnetSpec spec(6, {{3, 7}, {5, 5, 5}, {6, 7}});
    // Non-adjacent labels meet at the first even-column box.
    const auto far = verify_coloring(
        spec, {Label::symbolic(1), Label::symbolic(3), Label::symbolic(2)}, Backend::Symbolic);
    CHECK_FALSE(far.ok);
    CHECK(far.failure.kind == ColoringFailure::Kind::SymbolicUnrepresentable);
    CHECK(far.failure.row == 1);
    CHECK(far.failure.column == 2);

    // Adjacent pair governed by d_2 = 3 meets a 7-twist: relation violated.
    const auto wrong = verify_coloring(
        spec, {Label::symbolic(1), Label::symbolic(2), Label::symbolic(1)}, Backend::Symbolic);
    CHECK_FALSE(wrong.ok);
    CHECK(wrong.failure.kind == ColoringFailure::Kind::RelationViolated);
    CHECK(wrong.failure.column == 4);
}

TEST_CASE("prop14 certificates") {
    const Prop14Result t = prop14_certificate(trefoil());
    REQUIRE(t.status == Prop14Result::Status::Ok);
    CHECK(t.certificate.concluded);
    CHECK(t.certificate.beta == 2);
    CHECK(t.certificate.mu == 2);
    CHECK(t.certificate.lower_bound.trusted);
    CHECK_FALSE(t.certificate.upper_bound.trusted);

    const Prop14Result six = prop14_certificate(FishnetSpec(6, {{3, 7}, {5, 5, 5}, {6, 7}}));
    REQUIRE(six.status == Prop14Result::Status::Ok);
    CHECK(six.certificate.beta == 3);
    CHECK(six.certificate.target.find("(3, 7)") != std::string::npos);

    const Prop14Result fail = prop14_certificate(FishnetSpec(6, {{3, 7}, {5, 5, 5}, {6, 2}}));
    CHECK(fail.status == Prop14Result::Status::HypothesisFailed);
    CHECK(fail.hypothesis.failing_columns == std::vector<int>{4});

    const FishnetSpec loose(6, {{0, 3}});
    CHECK(prop14_certificate(loose).status == Prop14Result::Status::NotRegular);
    const Prop14Result forced = prop14_certificate(loose, true);
    REQUIRE(forced.status == Prop14Result::Status::Ok);
    CHECK(forced.certificate.beta == 3);
}

TEST_CASE("certificate conclusions are always justified") {
    // Every emitted certificate carries a tagged lower bound and concludes
    // only when the bounds meet.
    for (const auto& result :
         {prop14_certificate(trefoil()), prop14_certificate(FishnetSpec(6, {{3, 7}, {5, 5, 5}, {6, 7}}))}) {
        CHECK_FALSE(result.certificate.lower_bound.justification.empty());
        CHECK_FALSE(result.certificate.upper_bound.justification.empty());
        if (result.certificate.concluded)
            CHECK(result.certificate.lower_bound.value == result.certificate.upper_bound.value);
    }
}

TEST_CASE("find_coloring: found, exhausted, budget-exceeded") {
    const FindResult dihedral = find_coloring(trefoil(), dihedral_reflection_class(3));
    REQUIRE(dihedral.status == SearchStatus::Found);
    CHECK_FALSE(recheck(dihedral.coloring).has_value());

    // No propagation constraints on the unlink: found trivially, intransitive.
    const FindResult unlink = find_coloring(FishnetSpec(6, {{0, 0}}), transposition_class(6));
    REQUIRE(unlink.status == SearchStatus::Found);
    std::vector<Permutation> gens;
    for (const auto& l : unlink.coloring.maxima) gens.push_back(l.perm());
    CHECK_FALSE(permgroup::generate(gens).transitive);

    // Two disjoint transpositions can never span four points.
    FindOptions spanning;
    spanning.require_spanning = true;
    const FindResult exhausted = find_coloring(trefoil(), dihedral_reflection_class(2), spanning);
    CHECK(exhausted.status == SearchStatus::Exhausted);

    FindOptions tiny;
    tiny.max_nodes = 1;
    CHECK(find_coloring(trefoil(), transposition_class(4), tiny).status ==
          SearchStatus::BudgetExceeded);
}

TEST_CASE("find_coloring is deterministic and lexicographically first") {
    const FindResult a = find_coloring(trefoil(), transposition_class(3));
    const FindResult b = find_coloring(trefoil(), transposition_class(3));
    REQUIRE(a.status == SearchStatus::Found);
    REQUIRE(b.status == SearchStatus::Found);
    CHECK(a.coloring.maxima == b.coloring.maxima);
    // The all-(1 2) assignment is valid and lexicographically least.
    CHECK(a.coloring.maxima[0] == Label::concrete(tr(3, 1, 2)));
    CHECK(a.coloring.maxima[1] == Label::concrete(tr(3, 1, 2)));
}

TEST_CASE("recheck rejects a tampered coloring") {
    auto outcome = verify_coloring(
        trefoil(), {Label::concrete(tr(3, 1, 2)), Label::concrete(tr(3, 2, 3))}, Backend::Concrete);
    REQUIRE(outcome.ok);
    Coloring hacked = outcome.coloring;
    hacked.boundaries[1][0] = Label::concrete(tr(3, 1, 3));
    CHECK(recheck(hacked).has_value());
}

TEST_CASE("meridian images are conjugate within each component") {
    // Track which top strand occupies each position to map segments to
    // components, then demand pairwise conjugacy of that component's labels.
    const FishnetSpec spec(6, {{3, 7}, {5, 5, 5}, {6, 7}});
    const FindResult found = find_coloring(spec, transposition_class(4));
    REQUIRE(found.status == SearchStatus::Found);
    const Coloring& coloring = found.coloring;

    const PlatComponents comps = trace_components(to_braid(spec));
    std::vector<int> strand_at(static_cast<size_t>(spec.width));
    for (int p = 0; p < spec.width; ++p) strand_at[static_cast<size_t>(p)] = p + 1;

    std::vector<Permutation> gens;
    for (const auto& l : coloring.maxima) gens.push_back(l.perm());
    const auto group = permgroup::generate(gens);

    std::vector<std::vector<Permutation>> labels_of_component(static_cast<size_t>(comps.count + 1));
    auto record = [&](int boundary) {
        for (int p = 1; p <= spec.width; ++p) {
            const int comp = comps.top[static_cast<size_t>(strand_at[static_cast<size_t>(p - 1)] - 1)];
            labels_of_component[static_cast<size_t>(comp)].push_back(
                coloring.boundaries[static_cast<size_t>(boundary)][static_cast<size_t>(p - 1)].perm());
        }
    };
    record(0);
    for (int i = 1; i <= spec.height; ++i) {
        for (int j : spec.row_columns(i))
            if (spec.entry(i, j) % 2 != 0)
                std::swap(strand_at[static_cast<size_t>(j - 1)], strand_at[static_cast<size_t>(j)]);
        record(i);
    }
    for (int c = 1; c <= comps.count; ++c) {
        const auto& labels = labels_of_component[static_cast<size_t>(c)];
        for (size_t i = 1; i < labels.size(); ++i)
            CHECK(testutil::conjugate_in(labels[0], labels[i], group.elements));
    }
}

TEST_CASE("direct sum coloring of a split union of trefoils") {
    const FishnetSpec split(8, {{3, 0, 3}});
    REQUIRE(component_count(split) == 2);
    DirectSumPart left{"D_3", 3, {1}, {{1, tr(3, 1, 2)}, {2, tr(3, 2, 3)}}};
    DirectSumPart right{"D_3", 3, {2}, {{3, tr(3, 1, 2)}, {4, tr(3, 2, 3)}}};
    const ColoringOutcome outcome = direct_sum_coloring(split, {left, right});
    REQUIRE(outcome.ok);
    CHECK_FALSE(recheck(outcome.coloring).has_value());
    std::vector<Permutation> gens;
    for (const auto& l : outcome.coloring.maxima) gens.push_back(l.perm());
    CHECK(permgroup::generate(gens).order == 36);  // D_3 x D_3

    // Partition errors are reported as bad input.
    CHECK_FALSE(direct_sum_coloring(split, {left}).ok);
    DirectSumPart overlap = right;
    overlap.components = {1};
    CHECK_FALSE(direct_sum_coloring(split, {left, overlap}).ok);
}

TEST_CASE("find_coloring over a product class") {
    const FishnetSpec split(8, {{3, 0, 3}});
    const InvolutionClass product =
        product_class({dihedral_reflection_class(3), dihedral_reflection_class(3)});
    CHECK(product.degree == 6);
    CHECK(product.members.size() == 6);
    for (const auto& m : product.members) CHECK(m.is_involution());
    const FindResult found = find_coloring(split, product);
    REQUIRE(found.status == SearchStatus::Found);
    CHECK_FALSE(recheck(found.coloring).has_value());
}

TEST_CASE("direct sum over a single part matches plain verification") {
    DirectSumPart all{"D_3", 3, {1}, {{1, tr(3, 1, 2)}, {2, tr(3, 2, 3)}}};
    const ColoringOutcome sum = direct_sum_coloring(trefoil(), {all});
    const ColoringOutcome direct = verify_coloring(
        trefoil(), {Label::concrete(tr(3, 1, 2)), Label::concrete(tr(3, 2, 3))}, Backend::Concrete);
    REQUIRE(sum.ok);
    REQUIRE(direct.ok);
    CHECK(sum.coloring.boundaries == direct.coloring.boundaries);
}

TEST_CASE("direct sum survives interweaving for any parity-legal gray filling") {
    // l: connected sum of two trefoils (width 6), u: trefoil (width 4).
    const FishnetSpec l(6, {{3, 3}});
    const FishnetSpec u(4, {{3}});
    const InterweaveLayout lay = interweave_layout(3, 1);
    std::mt19937 rng(41);
    std::uniform_int_distribution<int> magnitude(0, 2);
    for (int trial = 0; trial < 25; ++trial) {
        GrayAssignment gray;
        for (const auto& g : lay.gray_boxes)
            gray[{g.row, g.column}] = (magnitude(rng) % 2 ? -1 : 1) *
                                      (2 * magnitude(rng) + g.required_parity);
        const FishnetSpec combined = interweave(l, u, gray);
        const PlatComponents comps = trace_components(to_braid(combined));
        REQUIRE(comps.count == 2);
        DirectSumPart lpart{"S_3", 3, {comps.top[0]},
                            {{1, tr(3, 1, 2)}, {3, tr(3, 2, 3)}, {5, tr(3, 1, 3)}}};
        DirectSumPart upart{"D_3", 3, {comps.top[2]}, {{2, tr(3, 1, 2)}, {4, tr(3, 2, 3)}}};
        const ColoringOutcome outcome = direct_sum_coloring(combined, {lpart, upart});
        REQUIRE(outcome.ok);
        CHECK_FALSE(recheck(outcome.coloring).has_value());
    }
}
