#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace fishnet {

// Permutation of {1..N}. Points are 1-based throughout; slot 0 of the image
// table is unused. The product convention is left-to-right: (a * b) applies
// a first, then b, so (a * b)(x) == b(a(x)).
class Permutation {
public:
    Permutation() = default;
    static Permutation identity(int degree);
    static Permutation transposition(int degree, int i, int j);
    // images[k] is the image of point k+1 (1-based values).
    static Permutation from_images(std::vector<int> images_one_based);

    int degree() const { return degree_; }
    int apply(int point) const { return img_[static_cast<size_t>(point)]; }

    Permutation operator*(const Permutation& rhs) const;
    Permutation inverse() const;

    bool is_identity() const;
    // Order exactly 2.
    bool is_involution() const;
    // True iff the permutation is a single 2-cycle; fills the moved points.
    bool is_transposition(int* a = nullptr, int* b = nullptr) const;

    std::int64_t order() const;
    int cycle_count() const;  // fixed points count as 1-cycles
    std::vector<std::vector<int>> cycles(bool include_fixed = false) const;
    std::string cycle_string() const;  // "(2 3)(4 5)", "()" for identity

    bool operator==(const Permutation& rhs) const { return img_ == rhs.img_; }
    bool operator!=(const Permutation& rhs) const { return !(*this == rhs); }
    bool operator<(const Permutation& rhs) const { return img_ < rhs.img_; }

    std::size_t hash() const;

private:
    int degree_ = 0;
    std::vector<int> img_;  // size degree_+1, img_[0] == 0
};

struct PermutationHash {
    std::size_t operator()(const Permutation& p) const { return p.hash(); }
};

}  // namespace fishnet
