#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "fishnet/braid.hpp"
#include "fishnet/coloring.hpp"
#include "fishnet/spec.hpp"

namespace fishnet {

// Reduces, then strips leading and trailing odd-index syllables (both are
// absorbed by the caps). Result is empty or starts and ends on even indices.
BraidWord normalize_plat_word(const BraidWord& w);

// Transcribes a word into a loose fishnet of the same width: syllable j
// occupies its own row (two rows when followed by another syllable), all
// other entries zero. With require_normalized the word must be reduced,
// nonempty, and start and end on even indices; otherwise only a nonempty
// word with even final index is needed for the layout to close.
FishnetSpec word_to_loose_fishnet(const BraidWord& w, bool require_normalized = true);

// Width-2B single-row spec [[1,1,...,1]]: the plat closure of
// sigma_2 sigma_4 ... sigma_{2B-2}, a B-bridge unknot.
FishnetSpec build_staircase_unknot(int bridges);

// Classification of the nonzero boxes of the combined diagram.
struct AugmentBox {
    enum class Kind { LBox, UBox, Gray };
    int row = 0;
    int column = 0;       // combined column
    Kind kind = Kind::Gray;
    int sub_column = 0;   // column in L's (or U's) own coordinates, mono boxes only
};

struct AugmentOptions {
    std::int64_t delta = 3;             // odd, >= 3; 3 gives the symmetric-group route
    std::int64_t max_nodes = 100'000'000;
    int max_sign_patterns = 256;        // fallback sweep over +-delta gray signs
};

struct AugmentationResult {
    BraidWord input;
    BraidWord normalized;
    FishnetSpec loose_fishnet;  // width 2b
    FishnetSpec combined;       // width 4b-2
    std::vector<AugmentBox> boxes;
    int components = 0;
    int unknot_component_id = 0;
    Coloring coloring;
    QuotientCertificate certificate;
    CertBound rank_claim;       // trusted lemma, never machine-checked
    std::int64_t search_nodes = 0;
    int sign_patterns_tried = 1;
};

class AugmentSearchError : public std::runtime_error {
public:
    AugmentSearchError(std::string message, bool budget_exceeded)
        : std::runtime_error(std::move(message)), budget_exceeded_(budget_exceeded) {}
    bool budget_exceeded() const { return budget_exceeded_; }

private:
    bool budget_exceeded_;
};

// Full pipeline: normalize, transcribe to a loose fishnet, interleave the
// staircase unknot on the even bridges of a width 4b-2 diagram with +-delta
// crossings in every L/U twist region, then verify components, gcds, the
// coloring, and both bounds before concluding beta = mu = 2b-1.
AugmentationResult augment(const BraidWord& w, const AugmentOptions& options = {});

}  // namespace fishnet
