#pragma once

#include <cstdint>
#include <vector>

#include "fishnet/perm.hpp"

namespace fishnet {
namespace permgroup {

constexpr std::int64_t kDefaultOrderCap = 10'000'000;

// Closure of a generating set under products, materialized by breadth-first
// multiplication. The order is exact when it stays within the cap; otherwise
// cap_exceeded is set and order holds the count reached.
struct GeneratedSubgroup {
    int degree = 0;
    std::vector<Permutation> generators;
    std::vector<Permutation> elements;  // discovery order, identity first
    std::int64_t order = 0;
    bool cap_exceeded = false;
    bool transitive = false;  // single orbit on {1..N}

    bool contains(const Permutation& p) const;
};

GeneratedSubgroup generate(const std::vector<Permutation>& gens,
                           std::int64_t order_cap = kDefaultOrderCap);

// True iff every generator is a transposition and their graph on {1..N} is
// connected, which is equivalent to generating the full symmetric group.
bool is_full_symmetric_via_transpositions(const std::vector<Permutation>& gens, int degree);

// Minimum size of a transposition set generating S_N: the spanning bound N-1.
int min_transpositions_lower_bound(int degree);

// Least r >= 1 with (a*b)^r = identity.
std::int64_t order_of_product(const Permutation& a, const Permutation& b);

// Dihedral group of order 2q realized by permutations: for q >= 3 the
// symmetries of a q-gon on q points; q = 2 degenerates to the Klein four
// group on two 2-point blocks so that the reflections stay involutions with
// product of order 2.
struct DihedralRealization {
    int q = 0;
    int degree = 0;
    std::vector<Permutation> reflections;
};

DihedralRealization dihedral_reflections(int q);

// Canonical enumeration of the transpositions of S_N in lexicographic order.
std::vector<Permutation> all_transpositions(int degree);

}  // namespace permgroup
}  // namespace fishnet
