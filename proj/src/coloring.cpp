#include "fishnet/coloring.hpp"

#include <algorithm>
#include <stdexcept>

namespace fishnet {

std::string Label::display() const {
    if (is_concrete()) return perm().cycle_string();
    return "a" + std::to_string(index());
}

std::pair<Permutation, Permutation> propagate_twist(const Permutation& a, const Permutation& b,
                                                    std::int64_t t) {
    if (a.degree() != b.degree()) throw std::invalid_argument("label degree mismatch");
    if (!a.is_involution() || !b.is_involution())
        throw std::invalid_argument("twist labels must be involutions");
    const std::int64_t r = (a * b).order();
    std::int64_t k = ((t % r) + r) % r;
    if (t < 0) k = (r - k) % r;  // we iterate the matching rule |t| mod r times
    Permutation x = a, y = b;
    if (t >= 0) {
        for (std::int64_t i = 0; i < k; ++i) {
            Permutation nx = x * y * x;
            y = x;
            x = std::move(nx);
        }
    } else {
        for (std::int64_t i = 0; i < k; ++i) {
            Permutation ny = y * x * y;
            x = y;
            y = std::move(ny);
        }
    }
    return {std::move(x), std::move(y)};
}

SymbolicStep propagate_twist_symbolic(int a_index, int b_index, std::int64_t t,
                                      const ColumnGcds& gcds) {
    SymbolicStep step;
    if (t == 0 || a_index == b_index) {
        step.ok = true;
        return step;
    }
    if (std::abs(a_index - b_index) == 1) {
        const int l = std::min(a_index, b_index);
        const int governing_column = 2 * l;
        if (gcds.divides(governing_column, t)) {
            step.ok = true;
            return step;
        }
        step.relation_violation = true;
        step.failure = "relation exponent d_" + std::to_string(governing_column) + " = " +
                       gcds.display(governing_column) + " does not divide twist " +
                       std::to_string(t);
        return step;
    }
    step.failure = "labels a" + std::to_string(a_index) + ", a" + std::to_string(b_index) +
                   " are neither equal nor adjacent";
    return step;
}

ColoringOutcome verify_coloring(const FishnetSpec& spec, const std::vector<Label>& maxima,
                                Backend backend) {
    ColoringOutcome out;
    const int m = spec.width;
    if (static_cast<int>(maxima.size()) != m / 2) {
        out.failure = {ColoringFailure::Kind::BadInput, 0, 0, 0,
                       "expected " + std::to_string(m / 2) + " maxima labels"};
        return out;
    }
    for (const auto& lbl : maxima) {
        if (backend == Backend::Concrete) {
            if (!lbl.is_concrete() || !lbl.perm().is_involution() ||
                lbl.perm().degree() != maxima[0].perm().degree()) {
                out.failure = {ColoringFailure::Kind::BadInput, 0, 0, 0,
                               "concrete maxima labels must be involutions of one degree"};
                return out;
            }
        } else if (lbl.is_concrete() || lbl.index() < 1 || lbl.index() > m / 2) {
            out.failure = {ColoringFailure::Kind::BadInput, 0, 0, 0,
                           "symbolic maxima labels must be a_1..a_" + std::to_string(m / 2)};
            return out;
        }
    }

    const ColumnGcds gcds = column_gcds(spec);
    Coloring coloring;
    coloring.spec = spec;
    coloring.backend = backend;
    coloring.maxima = maxima;

    std::vector<Label> cur;
    cur.reserve(static_cast<size_t>(m));
    for (int i = 1; i <= m / 2; ++i) {
        cur.push_back(maxima[static_cast<size_t>(i - 1)]);
        cur.push_back(maxima[static_cast<size_t>(i - 1)]);
    }
    coloring.boundaries.push_back(cur);

    for (int i = 1; i <= spec.height; ++i) {
        for (int j : spec.row_columns(i)) {
            const std::int64_t t = spec.entry(i, j);
            Label& left = cur[static_cast<size_t>(j - 1)];
            Label& right = cur[static_cast<size_t>(j)];
            if (backend == Backend::Concrete) {
                auto [x, y] = propagate_twist(left.perm(), right.perm(), t);
                left = Label::concrete(std::move(x));
                right = Label::concrete(std::move(y));
            } else {
                const SymbolicStep step =
                    propagate_twist_symbolic(left.index(), right.index(), t, gcds);
                if (!step.ok) {
                    out.failure = {step.relation_violation
                                       ? ColoringFailure::Kind::RelationViolated
                                       : ColoringFailure::Kind::SymbolicUnrepresentable,
                                   i, j, 0,
                                   "box (" + std::to_string(i) + "," + std::to_string(j) +
                                       "): " + step.failure};
                    return out;
                }
                // Pass-through: labels unchanged in the same order.
            }
        }
        coloring.boundaries.push_back(cur);
    }

    for (int c = 1; c <= m / 2; ++c) {
        if (cur[static_cast<size_t>(2 * c - 2)] != cur[static_cast<size_t>(2 * c - 1)]) {
            out.failure = {ColoringFailure::Kind::CapMismatch, 0, 0, c,
                           "bottom cap " + std::to_string(c) + " joins labels " +
                               cur[static_cast<size_t>(2 * c - 2)].display() + " and " +
                               cur[static_cast<size_t>(2 * c - 1)].display()};
            return out;
        }
    }
    out.ok = true;
    out.coloring = std::move(coloring);
    return out;
}

std::optional<std::string> recheck(const Coloring& coloring) {
    const FishnetSpec& spec = coloring.spec;
    const int m = spec.width;
    if (static_cast<int>(coloring.boundaries.size()) != spec.height + 1)
        return "boundary count mismatch";
    if (static_cast<int>(coloring.maxima.size()) != m / 2) return "maxima count mismatch";
    const ColumnGcds gcds = column_gcds(spec);
    for (int i = 1; i <= m / 2; ++i) {
        if (coloring.boundaries[0][static_cast<size_t>(2 * i - 2)] !=
                coloring.maxima[static_cast<size_t>(i - 1)] ||
            coloring.boundaries[0][static_cast<size_t>(2 * i - 1)] !=
                coloring.maxima[static_cast<size_t>(i - 1)])
            return "top cap " + std::to_string(i) + " does not carry its bridge label";
    }
    for (int i = 1; i <= spec.height; ++i) {
        const auto& above = coloring.boundaries[static_cast<size_t>(i - 1)];
        const auto& below = coloring.boundaries[static_cast<size_t>(i)];
        std::vector<char> in_box(static_cast<size_t>(m) + 1, 0);
        for (int j : spec.row_columns(i)) {
            in_box[static_cast<size_t>(j)] = 1;
            in_box[static_cast<size_t>(j + 1)] = 1;
            const std::int64_t t = spec.entry(i, j);
            const Label& a = above[static_cast<size_t>(j - 1)];
            const Label& b = above[static_cast<size_t>(j)];
            if (coloring.backend == Backend::Concrete) {
                auto [x, y] = propagate_twist(a.perm(), b.perm(), t);
                if (below[static_cast<size_t>(j - 1)] != Label::concrete(x) ||
                    below[static_cast<size_t>(j)] != Label::concrete(y))
                    return "box (" + std::to_string(i) + "," + std::to_string(j) +
                           ") violates the propagation relation";
            } else {
                const SymbolicStep step = propagate_twist_symbolic(a.index(), b.index(), t, gcds);
                if (!step.ok || below[static_cast<size_t>(j - 1)] != a ||
                    below[static_cast<size_t>(j)] != b)
                    return "box (" + std::to_string(i) + "," + std::to_string(j) +
                           ") violates the symbolic propagation relation";
            }
        }
        for (int p = 1; p <= m; ++p)
            if (!in_box[static_cast<size_t>(p)] &&
                above[static_cast<size_t>(p - 1)] != below[static_cast<size_t>(p - 1)])
                return "strand " + std::to_string(p) + " changes label outside a box in row " +
                       std::to_string(i);
    }
    const auto& last = coloring.boundaries.back();
    for (int c = 1; c <= m / 2; ++c)
        if (last[static_cast<size_t>(2 * c - 2)] != last[static_cast<size_t>(2 * c - 1)])
            return "bottom cap " + std::to_string(c) + " does not close";
    return std::nullopt;
}

// ---------------------------------------------------------------------------

Prop14Result prop14_certificate(const FishnetSpec& spec, bool allow_loose) {
    Prop14Result result;
    if (!allow_loose && !spec.is_regular()) {
        result.status = Prop14Result::Status::NotRegular;
        result.hypothesis = check_mrc_hypothesis(spec, false);
        return result;
    }
    result.hypothesis = check_mrc_hypothesis(spec, allow_loose);
    if (!result.hypothesis.passed()) {
        result.status = Prop14Result::Status::HypothesisFailed;
        return result;
    }

    const int k = spec.width / 2;
    std::vector<Label> maxima;
    for (int i = 1; i <= k; ++i) maxima.push_back(Label::symbolic(i));
    result.outcome = verify_coloring(spec, maxima, Backend::Symbolic);
    if (!result.outcome.ok) {
        result.status = Prop14Result::Status::ColoringFailed;
        return result;
    }
    if (auto err = recheck(result.outcome.coloring))
        throw std::logic_error("coloring re-check failed: " + *err);

    const ColumnGcds gcds = column_gcds(spec);
    std::string exponents;
    for (int j = 2; j <= spec.width - 2; j += 2) {
        if (!exponents.empty()) exponents += ", ";
        exponents += gcds.display(j);
    }

    QuotientCertificate cert;
    cert.input_digest = spec_digest(spec);
    cert.backend = "symbolic";
    cert.target = "path Coxeter group <a_1..a_" + std::to_string(k) +
                  " | a_i^2 = 1, (a_j a_j+1)^d_2j = 1> with exponents (" + exponents + ")";
    cert.meridian_class = "Coxeter generators (reflections)";
    for (const auto& lbl : maxima) cert.maxima_labels.push_back(lbl.display());
    cert.homomorphism_verified = true;
    cert.image = "rank-" + std::to_string(k) + " path Coxeter quotient";
    cert.checks.push_back("even-column gcd hypothesis d_2j > 1 holds (" + exponents + ")");
    cert.checks.push_back("symbolic propagation coherent over " + std::to_string(spec.height) +
                          " rows; all bottom caps close");
    cert.lower_bound = {k,
                        "a Coxeter group whose defining exponents all exceed 1 has reflection "
                        "rank equal to its generator count (Felikson-Tumarkin, Lemma 2.1)",
                        true};
    cert.upper_bound = {k, "fishnet diagram bridge count m/2", false};
    cert.concluded = true;
    cert.beta = k;
    cert.mu = k;
    result.certificate = std::move(cert);
    result.status = Prop14Result::Status::Ok;
    return result;
}

// ---------------------------------------------------------------------------

InvolutionClass transposition_class(int degree) {
    InvolutionClass cls;
    cls.name = "transpositions of S_" + std::to_string(degree);
    cls.group_name = "S_" + std::to_string(degree);
    cls.degree = degree;
    cls.members = permgroup::all_transpositions(degree);
    return cls;
}

InvolutionClass dihedral_reflection_class(int q) {
    const auto d = permgroup::dihedral_reflections(q);
    InvolutionClass cls;
    cls.name = "reflections of D_" + std::to_string(q);
    cls.group_name = "D_" + std::to_string(q);
    cls.degree = d.degree;
    cls.members = d.reflections;
    return cls;
}

InvolutionClass product_class(const std::vector<InvolutionClass>& factors) {
    if (factors.empty()) throw std::invalid_argument("product needs at least one factor");
    InvolutionClass cls;
    cls.degree = 0;
    for (const auto& f : factors) cls.degree += f.degree;
    int offset = 0;
    for (const auto& f : factors) {
        if (!cls.name.empty()) cls.name += " x ";
        cls.name += f.name;
        if (!cls.group_name.empty()) cls.group_name += " x ";
        cls.group_name += f.group_name;
        for (const auto& g : f.members) {
            std::vector<int> images(static_cast<size_t>(cls.degree));
            for (int x = 1; x <= cls.degree; ++x) images[static_cast<size_t>(x - 1)] = x;
            for (int x = 1; x <= g.degree(); ++x)
                images[static_cast<size_t>(offset + x - 1)] = offset + g.apply(x);
            cls.members.push_back(Permutation::from_images(images));
        }
        offset += f.degree;
    }
    cls.name = "product(" + cls.name + ")";
    return cls;
}

namespace {

// Partial propagation with unknown labels; nullopt absorbs.
bool partial_caps_ok(const FishnetSpec& spec, const std::vector<std::optional<Permutation>>& maxima) {
    const int m = spec.width;
    std::vector<std::optional<Permutation>> cur(static_cast<size_t>(m));
    for (int i = 1; i <= m / 2; ++i) {
        cur[static_cast<size_t>(2 * i - 2)] = maxima[static_cast<size_t>(i - 1)];
        cur[static_cast<size_t>(2 * i - 1)] = maxima[static_cast<size_t>(i - 1)];
    }
    for (int i = 1; i <= spec.height; ++i)
        for (int j : spec.row_columns(i)) {
            const std::int64_t t = spec.entry(i, j);
            if (t == 0) continue;
            auto& left = cur[static_cast<size_t>(j - 1)];
            auto& right = cur[static_cast<size_t>(j)];
            if (left && right) {
                auto [x, y] = propagate_twist(*left, *right, t);
                left = std::move(x);
                right = std::move(y);
            } else {
                left.reset();
                right.reset();
            }
        }
    for (int c = 1; c <= m / 2; ++c) {
        const auto& a = cur[static_cast<size_t>(2 * c - 2)];
        const auto& b = cur[static_cast<size_t>(2 * c - 1)];
        if (a && b && !(*a == *b)) return false;
    }
    return true;
}

bool spanning_transpositions(const std::vector<Label>& maxima, int degree) {
    std::vector<Permutation> gens;
    for (const auto& lbl : maxima) {
        int a = 0, b = 0;
        if (!lbl.perm().is_transposition(&a, &b)) return false;
        gens.push_back(lbl.perm());
    }
    return permgroup::is_full_symmetric_via_transpositions(gens, degree);
}

}  // namespace

FindResult find_coloring(const FishnetSpec& spec, const InvolutionClass& cls, FindOptions options) {
    FindResult result;
    const int k = spec.width / 2;
    for (const auto& p : cls.members)
        if (!p.is_involution()) throw std::invalid_argument("class member is not an involution");

    // When a spanning transposition image is demanded, any prefix whose
    // edges already close a cycle (or repeat) can never extend to a spanning
    // tree, so it is skipped before propagating. This cannot change which
    // assignment is found first.
    std::vector<std::pair<int, int>> edges(cls.members.size(), {0, 0});
    bool forest_prune = options.require_spanning;
    for (size_t i = 0; i < cls.members.size() && forest_prune; ++i) {
        int a = 0, b = 0;
        if (cls.members[i].is_transposition(&a, &b))
            edges[i] = {a, b};
        else
            forest_prune = false;
    }
    std::vector<int> uf(static_cast<size_t>(cls.degree) + 1);
    auto prefix_is_forest = [&](const std::vector<int>& choice, int depth) {
        for (int v = 0; v <= cls.degree; ++v) uf[static_cast<size_t>(v)] = v;
        auto root = [&](int x) {
            while (uf[static_cast<size_t>(x)] != x) x = uf[static_cast<size_t>(x)] = uf[static_cast<size_t>(uf[static_cast<size_t>(x)])];
            return x;
        };
        for (int d = 0; d <= depth; ++d) {
            const auto [a, b] = edges[static_cast<size_t>(choice[static_cast<size_t>(d)])];
            const int ra = root(a), rb = root(b);
            if (ra == rb) return false;
            uf[static_cast<size_t>(ra)] = rb;
        }
        return true;
    };

    std::vector<std::optional<Permutation>> assignment(static_cast<size_t>(k));
    std::vector<int> choice(static_cast<size_t>(k), -1);
    int depth = 0;
    while (depth >= 0) {
        ++choice[static_cast<size_t>(depth)];
        if (choice[static_cast<size_t>(depth)] >= static_cast<int>(cls.members.size())) {
            choice[static_cast<size_t>(depth)] = -1;
            assignment[static_cast<size_t>(depth)].reset();
            --depth;
            continue;
        }
        if (++result.nodes > options.max_nodes) {
            result.status = SearchStatus::BudgetExceeded;
            return result;
        }
        if (forest_prune && !prefix_is_forest(choice, depth)) continue;
        assignment[static_cast<size_t>(depth)] =
            cls.members[static_cast<size_t>(choice[static_cast<size_t>(depth)])];
        if (!partial_caps_ok(spec, assignment)) continue;
        if (depth + 1 < k) {
            ++depth;
            continue;
        }
        std::vector<Label> maxima;
        for (const auto& p : assignment) maxima.push_back(Label::concrete(*p));
        ColoringOutcome outcome = verify_coloring(spec, maxima, Backend::Concrete);
        if (!outcome.ok) continue;
        if (options.require_spanning && !spanning_transpositions(maxima, cls.degree)) continue;
        if (auto err = recheck(outcome.coloring))
            throw std::logic_error("coloring re-check failed: " + *err);
        result.status = SearchStatus::Found;
        result.coloring = std::move(outcome.coloring);
        return result;
    }
    result.status = SearchStatus::Exhausted;
    return result;
}

QuotientCertificate concrete_certificate(const FishnetSpec& spec, const Coloring& coloring,
                                         const InvolutionClass& cls,
                                         std::int64_t group_order_cap) {
    QuotientCertificate cert;
    cert.input_digest = spec_digest(spec);
    cert.backend = cls.group_name;
    cert.target = cls.group_name;
    cert.meridian_class = cls.name;
    for (const auto& lbl : coloring.maxima) cert.maxima_labels.push_back(lbl.display());
    cert.homomorphism_verified = true;
    cert.checks.push_back("propagation coherent over " + std::to_string(spec.height) +
                          " rows; all bottom caps close");

    std::vector<Permutation> gens;
    for (const auto& lbl : coloring.maxima) gens.push_back(lbl.perm());
    const auto group = permgroup::generate(gens, group_order_cap);
    cert.checks.push_back("generated image order " + std::to_string(group.order) +
                          (group.cap_exceeded ? " (cap exceeded)" : "") +
                          (group.transitive ? ", transitive" : ", intransitive"));

    bool all_transpositions = true;
    for (const auto& g : gens)
        if (!g.is_transposition()) all_transpositions = false;

    const int upper = bridge_upper_bound(spec);
    cert.upper_bound = {upper, "fishnet diagram bridge count m/2", false};

    if (all_transpositions && permgroup::is_full_symmetric_via_transpositions(gens, cls.degree)) {
        cert.image = "S_" + std::to_string(cls.degree) + " (transposition graph connected)";
        cert.lower_bound = {
            permgroup::min_transpositions_lower_bound(cls.degree),
            "meridians map to transpositions generating S_" +
                std::to_string(cls.degree) + "; any transposition generating set has >= " +
                std::to_string(cls.degree - 1) + " elements (spanning bound)",
            false};
    } else if (!group.cap_exceeded) {
        bool cyclic = false;
        for (const auto& e : group.elements)
            if (e.order() == group.order) cyclic = true;
        cert.image = "subgroup of order " + std::to_string(group.order);
        if (!cyclic && group.order > 1)
            cert.lower_bound = {2, "image is non-cyclic", false};
        else
            cert.lower_bound = {1, "image is nontrivial", false};
    } else {
        cert.image = "subgroup (order cap exceeded)";
        cert.lower_bound = {1, "image is nontrivial", false};
    }

    if (cert.lower_bound.value == cert.upper_bound.value) {
        cert.concluded = true;
        cert.beta = cert.lower_bound.value;
        cert.mu = cert.lower_bound.value;
    }
    return cert;
}

// ---------------------------------------------------------------------------

ColoringOutcome direct_sum_coloring(const FishnetSpec& spec,
                                    const std::vector<DirectSumPart>& parts) {
    ColoringOutcome out;
    const PlatComponents comps = trace_components(to_braid(spec));

    std::vector<int> part_of_component(static_cast<size_t>(comps.count) + 1, 0);
    for (size_t p = 0; p < parts.size(); ++p)
        for (int c : parts[p].components) {
            if (c < 1 || c > comps.count || part_of_component[static_cast<size_t>(c)] != 0) {
                out.failure = {ColoringFailure::Kind::BadInput, 0, 0, 0,
                               "components must be partitioned exactly once"};
                return out;
            }
            part_of_component[static_cast<size_t>(c)] = static_cast<int>(p) + 1;
        }
    for (int c = 1; c <= comps.count; ++c)
        if (part_of_component[static_cast<size_t>(c)] == 0) {
            out.failure = {ColoringFailure::Kind::BadInput, 0, 0, 0,
                           "component " + std::to_string(c) + " is not covered by any part"};
            return out;
        }

    std::vector<int> offset(parts.size() + 1, 0);
    for (size_t p = 0; p < parts.size(); ++p)
        offset[p + 1] = offset[p] + parts[p].degree;
    const int total_degree = offset[parts.size()];

    auto embed = [&](const Permutation& g, size_t part) {
        std::vector<int> images(static_cast<size_t>(total_degree));
        for (int x = 1; x <= total_degree; ++x) images[static_cast<size_t>(x - 1)] = x;
        for (int x = 1; x <= g.degree(); ++x)
            images[static_cast<size_t>(offset[part] + x - 1)] = offset[part] + g.apply(x);
        return Permutation::from_images(images);
    };

    std::vector<Label> maxima;
    for (int bridge = 1; bridge <= spec.width / 2; ++bridge) {
        const int comp = comps.top[static_cast<size_t>(2 * bridge - 2)];
        const size_t part = static_cast<size_t>(part_of_component[static_cast<size_t>(comp)] - 1);
        const auto it = parts[part].bridge_labels.find(bridge);
        if (it == parts[part].bridge_labels.end()) {
            out.failure = {ColoringFailure::Kind::BadInput, 0, 0, 0,
                           "part " + std::to_string(part + 1) + " is missing a label for bridge " +
                               std::to_string(bridge)};
            return out;
        }
        if (it->second.degree() != parts[part].degree || !it->second.is_involution()) {
            out.failure = {ColoringFailure::Kind::BadInput, 0, 0, 0,
                           "bridge " + std::to_string(bridge) + " label must be an involution of "
                           "the part's degree"};
            return out;
        }
        maxima.push_back(Label::concrete(embed(it->second, part)));
    }

    // Crossings between parts must commute factor-wise; check each
    // bichromatic box against the trace labeling before propagating.
    std::vector<int> strand_part(static_cast<size_t>(spec.width) + 1, 0);
    for (int p = 1; p <= spec.width; ++p)
        strand_part[static_cast<size_t>(p)] =
            part_of_component[static_cast<size_t>(comps.top[static_cast<size_t>(p - 1)])];
    {
        std::vector<int> pos(static_cast<size_t>(spec.width) + 1);
        for (int p = 1; p <= spec.width; ++p) pos[static_cast<size_t>(p)] = strand_part[static_cast<size_t>(p)];
        std::vector<Label> cur;
        for (int i = 1; i <= spec.width / 2; ++i) {
            cur.push_back(maxima[static_cast<size_t>(i - 1)]);
            cur.push_back(maxima[static_cast<size_t>(i - 1)]);
        }
        for (int i = 1; i <= spec.height; ++i)
            for (int j : spec.row_columns(i)) {
                const std::int64_t t = spec.entry(i, j);
                if (t == 0) continue;
                const int pa = pos[static_cast<size_t>(j)];
                const int pb = pos[static_cast<size_t>(j + 1)];
                const Permutation& a = cur[static_cast<size_t>(j - 1)].perm();
                const Permutation& b = cur[static_cast<size_t>(j)].perm();
                if (pa != pb && !(a * b == b * a)) {
                    out.failure = {ColoringFailure::Kind::RelationViolated, i, j, 0,
                                   "bichromatic box (" + std::to_string(i) + "," +
                                       std::to_string(j) + ") has non-commuting labels"};
                    return out;
                }
                auto [x, y] = propagate_twist(a, b, t);
                cur[static_cast<size_t>(j - 1)] = Label::concrete(std::move(x));
                cur[static_cast<size_t>(j)] = Label::concrete(std::move(y));
                if (t % 2 != 0) std::swap(pos[static_cast<size_t>(j)], pos[static_cast<size_t>(j + 1)]);
            }
    }

    out = verify_coloring(spec, maxima, Backend::Concrete);
    return out;
}

}  // namespace fishnet
