#pragma once

#include <random>
#include <vector>

#include "fishnet/braid.hpp"
#include "fishnet/perm.hpp"

namespace testutil {

// Independent component-count derivation: the first-return map on top
// endpoints alternates the strand permutation with the cap involution; each
// plat component contributes exactly two of its cycles (one per traversal
// direction).
inline int oracle_component_count(const fishnet::BraidWord& w) {
    using fishnet::Permutation;
    const int m = w.strands;
    std::vector<int> cap_images(static_cast<size_t>(m));
    for (int i = 1; i <= m; ++i)
        cap_images[static_cast<size_t>(i - 1)] = i % 2 == 1 ? i + 1 : i - 1;
    const Permutation cap = Permutation::from_images(cap_images);
    const Permutation phi = fishnet::permutation_image(w);
    const Permutation rho = phi * cap * phi.inverse() * cap;
    return rho.cycle_count() / 2;
}

inline fishnet::BraidWord random_word(std::mt19937& rng, int strands, int max_syllables,
                                      int max_abs_exponent = 9) {
    std::uniform_int_distribution<int> len_dist(0, max_syllables);
    std::uniform_int_distribution<int> idx_dist(1, strands - 1);
    std::uniform_int_distribution<int> exp_dist(-max_abs_exponent, max_abs_exponent);
    std::vector<fishnet::Syllable> syllables;
    const int len = len_dist(rng);
    for (int i = 0; i < len; ++i) {
        int e = 0;
        while (e == 0) e = exp_dist(rng);
        syllables.push_back(fishnet::Syllable{idx_dist(rng), e});
    }
    return fishnet::BraidWord(strands, std::move(syllables));
}

inline fishnet::Permutation random_involution(std::mt19937& rng, int degree) {
    std::vector<int> points(static_cast<size_t>(degree));
    for (int i = 0; i < degree; ++i) points[static_cast<size_t>(i)] = i + 1;
    std::shuffle(points.begin(), points.end(), rng);
    std::uniform_int_distribution<int> pairs_dist(1, degree / 2);
    const int pairs = pairs_dist(rng);
    std::vector<int> images(static_cast<size_t>(degree));
    for (int i = 0; i < degree; ++i) images[static_cast<size_t>(i)] = i + 1;
    for (int p = 0; p < pairs; ++p) {
        const int a = points[static_cast<size_t>(2 * p)];
        const int b = points[static_cast<size_t>(2 * p + 1)];
        images[static_cast<size_t>(a - 1)] = b;
        images[static_cast<size_t>(b - 1)] = a;
    }
    return fishnet::Permutation::from_images(images);
}

inline bool conjugate_in(const fishnet::Permutation& x, const fishnet::Permutation& y,
                         const std::vector<fishnet::Permutation>& elements) {
    for (const auto& g : elements)
        if (g.inverse() * x * g == y) return true;
    return false;
}

}  // namespace testutil
