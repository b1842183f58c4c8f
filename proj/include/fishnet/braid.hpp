#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "fishnet/perm.hpp"

namespace fishnet {

struct Syllable {
    int index;             // braid generator index, 1..strands-1
    std::int64_t exponent; // nonzero

    bool operator==(const Syllable& rhs) const {
        return index == rhs.index && exponent == rhs.exponent;
    }
};

// A braid word on a fixed strand count, as an ordered sequence of syllables
// sigma_index^exponent read top to bottom.
struct BraidWord {
    int strands = 0;
    std::vector<Syllable> syllables;

    BraidWord() = default;
    BraidWord(int strands_, std::vector<Syllable> syllables_);

    bool is_reduced() const;  // no two consecutive syllables share an index
    bool operator==(const BraidWord& rhs) const {
        return strands == rhs.strands && syllables == rhs.syllables;
    }
};

// Image under the braid-to-symmetric-group map sending sigma_i to (i i+1).
// Syllables compose in word order (top factor applies first); only exponent
// parity matters per syllable.
Permutation permutation_image(const BraidWord& w);

// Merges adjacent syllables with equal index, deleting syllables whose
// exponent sums to zero, iterated to a fixed point.
BraidWord reduce_word(const BraidWord& w);

// Plat closure trace graph: 2*strands endpoint nodes (top 1..m, bottom 1..m),
// strand edges top-i -- bottom-image(i), cap edges (2i-1, 2i) on both rows.
// Every node has degree exactly 2.
struct PlatTraceGraph {
    int strands = 0;
    std::vector<std::pair<int, int>> strand_edges;      // (top point, bottom point)
    std::vector<std::pair<int, int>> top_cap_edges;     // (2i-1, 2i)
    std::vector<std::pair<int, int>> bottom_cap_edges;  // (2i-1, 2i)
};

PlatTraceGraph plat_trace_graph(const BraidWord& w);

// Connected components of the plat closure. Component ids are 1-based and
// canonical: ordered by smallest top endpoint.
struct PlatComponents {
    int count = 0;
    std::vector<int> top;     // top[i-1]    = component id of top endpoint i
    std::vector<int> bottom;  // bottom[i-1] = component id of bottom endpoint i
};

PlatComponents trace_components(const BraidWord& w);  // requires even strands

// Plat word text format: "plat <strands> i^e i^e ...". Whitespace separates
// tokens; parse errors carry the 1-based token position.
BraidWord parse_plat(const std::string& text);
std::string emit_plat(const BraidWord& w);  // canonical form, trailing newline

class ParseError : public std::runtime_error {
public:
    ParseError(std::string message, int position)
        : std::runtime_error(std::move(message)), position_(position) {}
    int position() const { return position_; }

private:
    int position_;
};

}  // namespace fishnet
