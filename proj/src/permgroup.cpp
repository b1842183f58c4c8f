#include "fishnet/permgroup.hpp"

#include <stdexcept>
#include <unordered_set>

namespace fishnet {
namespace permgroup {

bool GeneratedSubgroup::contains(const Permutation& p) const {
    for (const auto& e : elements)
        if (e == p) return true;
    return false;
}

GeneratedSubgroup generate(const std::vector<Permutation>& gens, std::int64_t order_cap) {
    if (gens.empty()) throw std::invalid_argument("generate needs at least one generator");
    const int degree = gens[0].degree();
    for (const auto& g : gens)
        if (g.degree() != degree) throw std::invalid_argument("generators must share a degree");

    GeneratedSubgroup out;
    out.degree = degree;
    out.generators = gens;

    std::unordered_set<Permutation, PermutationHash> seen;
    std::vector<Permutation> frontier;
    const Permutation id = Permutation::identity(degree);
    seen.insert(id);
    out.elements.push_back(id);
    frontier.push_back(id);
    while (!frontier.empty() && !out.cap_exceeded) {
        std::vector<Permutation> next;
        for (const auto& e : frontier) {
            for (const auto& g : gens) {
                Permutation p = e * g;
                if (seen.insert(p).second) {
                    out.elements.push_back(p);
                    next.push_back(std::move(p));
                    if (static_cast<std::int64_t>(out.elements.size()) > order_cap) {
                        out.cap_exceeded = true;
                        break;
                    }
                }
            }
            if (out.cap_exceeded) break;
        }
        frontier = std::move(next);
    }
    out.order = static_cast<std::int64_t>(out.elements.size());

    // Orbit of point 1 under the generators.
    std::vector<char> in_orbit(static_cast<size_t>(degree) + 1, 0);
    std::vector<int> stack{1};
    in_orbit[1] = 1;
    int orbit_size = 1;
    while (!stack.empty()) {
        const int x = stack.back();
        stack.pop_back();
        for (const auto& g : gens) {
            for (int y : {g.apply(x), g.inverse().apply(x)}) {
                if (!in_orbit[static_cast<size_t>(y)]) {
                    in_orbit[static_cast<size_t>(y)] = 1;
                    ++orbit_size;
                    stack.push_back(y);
                }
            }
        }
    }
    out.transitive = orbit_size == degree;
    return out;
}

bool is_full_symmetric_via_transpositions(const std::vector<Permutation>& gens, int degree) {
    std::vector<int> parent(static_cast<size_t>(degree) + 1);
    for (int i = 0; i <= degree; ++i) parent[static_cast<size_t>(i)] = i;
    auto root = [&](int x) {
        while (parent[static_cast<size_t>(x)] != x) x = parent[static_cast<size_t>(x)] = parent[static_cast<size_t>(parent[static_cast<size_t>(x)])];
        return x;
    };
    for (const auto& g : gens) {
        int a = 0, b = 0;
        if (g.degree() != degree || !g.is_transposition(&a, &b))
            throw std::invalid_argument("generator " + g.cycle_string() + " is not a transposition");
        parent[static_cast<size_t>(root(a))] = root(b);
    }
    for (int i = 2; i <= degree; ++i)
        if (root(i) != root(1)) return false;
    return true;
}

int min_transpositions_lower_bound(int degree) {
    if (degree < 2) throw std::invalid_argument("degree must be >= 2");
    // Spanning-connectivity bound: a transposition set generates S_N iff its
    // graph on N vertices is connected, which takes at least N-1 edges.
    return degree - 1;
}

std::int64_t order_of_product(const Permutation& a, const Permutation& b) {
    return (a * b).order();
}

DihedralRealization dihedral_reflections(int q) {
    if (q < 2) throw std::invalid_argument("dihedral parameter must be >= 2");
    DihedralRealization out;
    out.q = q;
    if (q == 2) {
        out.degree = 4;
        out.reflections.push_back(Permutation::transposition(4, 1, 2));
        out.reflections.push_back(Permutation::transposition(4, 3, 4));
        return out;
    }
    out.degree = q;
    for (int k = 0; k < q; ++k) {
        // Reflection x -> k - x (mod q) on 0-based vertex labels.
        std::vector<int> images(static_cast<size_t>(q));
        for (int x = 0; x < q; ++x) images[static_cast<size_t>(x)] = ((k - x) % q + q) % q + 1;
        Permutation p = Permutation::from_images(images);
        if (!p.is_identity()) out.reflections.push_back(std::move(p));
    }
    return out;
}

std::vector<Permutation> all_transpositions(int degree) {
    std::vector<Permutation> out;
    for (int i = 1; i <= degree; ++i)
        for (int j = i + 1; j <= degree; ++j) out.push_back(Permutation::transposition(degree, i, j));
    return out;
}

}  // namespace permgroup
}  // namespace fishnet
