#include "fishnet/perm.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace fishnet {

Permutation Permutation::identity(int degree) {
    if (degree < 1) throw std::invalid_argument("permutation degree must be >= 1");
    Permutation p;
    p.degree_ = degree;
    p.img_.resize(static_cast<size_t>(degree) + 1);
    std::iota(p.img_.begin(), p.img_.end(), 0);
    return p;
}

Permutation Permutation::transposition(int degree, int i, int j) {
    if (i < 1 || j < 1 || i > degree || j > degree || i == j)
        throw std::invalid_argument("bad transposition points");
    Permutation p = identity(degree);
    std::swap(p.img_[static_cast<size_t>(i)], p.img_[static_cast<size_t>(j)]);
    return p;
}

Permutation Permutation::from_images(std::vector<int> images) {
    const int n = static_cast<int>(images.size());
    if (n < 1) throw std::invalid_argument("empty image table");
    std::vector<char> seen(static_cast<size_t>(n) + 1, 0);
    for (int v : images) {
        if (v < 1 || v > n || seen[static_cast<size_t>(v)])
            throw std::invalid_argument("image table is not a bijection on {1..N}");
        seen[static_cast<size_t>(v)] = 1;
    }
    Permutation p;
    p.degree_ = n;
    p.img_.resize(static_cast<size_t>(n) + 1);
    p.img_[0] = 0;
    for (int k = 1; k <= n; ++k) p.img_[static_cast<size_t>(k)] = images[static_cast<size_t>(k - 1)];
    return p;
}

Permutation Permutation::operator*(const Permutation& rhs) const {
    if (degree_ != rhs.degree_) throw std::invalid_argument("degree mismatch in product");
    Permutation p;
    p.degree_ = degree_;
    p.img_.resize(img_.size());
    p.img_[0] = 0;
    for (int k = 1; k <= degree_; ++k)
        p.img_[static_cast<size_t>(k)] = rhs.img_[static_cast<size_t>(img_[static_cast<size_t>(k)])];
    return p;
}

Permutation Permutation::inverse() const {
    Permutation p;
    p.degree_ = degree_;
    p.img_.resize(img_.size());
    p.img_[0] = 0;
    for (int k = 1; k <= degree_; ++k) p.img_[static_cast<size_t>(img_[static_cast<size_t>(k)])] = k;
    return p;
}

bool Permutation::is_identity() const {
    for (int k = 1; k <= degree_; ++k)
        if (img_[static_cast<size_t>(k)] != k) return false;
    return true;
}

bool Permutation::is_involution() const {
    if (is_identity()) return false;
    for (int k = 1; k <= degree_; ++k)
        if (img_[static_cast<size_t>(img_[static_cast<size_t>(k)])] != k) return false;
    return true;
}

bool Permutation::is_transposition(int* a, int* b) const {
    int moved[2] = {0, 0};
    int count = 0;
    for (int k = 1; k <= degree_; ++k) {
        if (img_[static_cast<size_t>(k)] != k) {
            if (count < 2) moved[count] = k;
            ++count;
        }
    }
    if (count != 2) return false;
    if (img_[static_cast<size_t>(moved[0])] != moved[1]) return false;
    if (a) *a = moved[0];
    if (b) *b = moved[1];
    return true;
}

std::int64_t Permutation::order() const {
    std::int64_t result = 1;
    for (const auto& c : cycles(true)) result = std::lcm<std::int64_t>(result, static_cast<std::int64_t>(c.size()));
    return result;
}

int Permutation::cycle_count() const {
    return static_cast<int>(cycles(true).size());
}

std::vector<std::vector<int>> Permutation::cycles(bool include_fixed) const {
    std::vector<std::vector<int>> result;
    std::vector<char> seen(img_.size(), 0);
    for (int k = 1; k <= degree_; ++k) {
        if (seen[static_cast<size_t>(k)]) continue;
        std::vector<int> cyc;
        int x = k;
        do {
            seen[static_cast<size_t>(x)] = 1;
            cyc.push_back(x);
            x = img_[static_cast<size_t>(x)];
        } while (x != k);
        if (cyc.size() > 1 || include_fixed) result.push_back(std::move(cyc));
    }
    return result;
}

std::string Permutation::cycle_string() const {
    auto cs = cycles(false);
    if (cs.empty()) return "()";
    std::string out;
    for (const auto& c : cs) {
        out += '(';
        for (size_t i = 0; i < c.size(); ++i) {
            if (i) out += ' ';
            out += std::to_string(c[i]);
        }
        out += ')';
    }
    return out;
}

std::size_t Permutation::hash() const {
    std::size_t h = 1469598103934665603ull;
    for (int k = 1; k <= degree_; ++k) {
        h ^= static_cast<std::size_t>(img_[static_cast<size_t>(k)]);
        h *= 1099511628211ull;
    }
    return h;
}

}  // namespace fishnet
