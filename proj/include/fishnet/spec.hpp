#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "fishnet/braid.hpp"

namespace fishnet {

enum class FishnetClass { Loose, Regular, Strong };

std::string to_string(FishnetClass c);

// Parameter vector of a fishnet diagram: width m (even, >= 4), height n (odd),
// and n rows of twist parameters. Row i holds the even columns 2,4,..,m-2 when
// i is odd and the odd columns 1,3,..,m-1 when i is even.
struct FishnetSpec {
    int width = 0;
    int height = 0;
    std::vector<std::vector<std::int64_t>> rows;

    FishnetSpec() = default;
    FishnetSpec(int width_, std::vector<std::vector<std::int64_t>> rows_);

    static int row_length(int width, int row);        // expected entries in row (1-based)
    std::vector<int> row_columns(int row) const;      // columns of row, ascending
    std::int64_t entry(int row, int column) const;    // value at (row, column)
    void set_entry(int row, int column, std::int64_t value);

    FishnetClass classification() const;
    bool is_regular() const { return classification() != FishnetClass::Loose; }
    bool is_strong() const { return classification() == FishnetClass::Strong; }

    bool operator==(const FishnetSpec& rhs) const {
        return width == rhs.width && rows == rhs.rows;
    }
};

// Column gcds d_1..d_{m-1}; an all-zero column has the distinguished value
// infinity, encoded internally as 0.
struct ColumnGcds {
    std::vector<std::int64_t> values;  // index j-1 holds d_j; 0 encodes infinity

    bool is_infinite(int column) const { return values[static_cast<size_t>(column - 1)] == 0; }
    std::int64_t value(int column) const { return values[static_cast<size_t>(column - 1)]; }
    // Infinity counts as exceeding any bound.
    bool exceeds_one(int column) const { return is_infinite(column) || value(column) > 1; }
    bool divides(int column, std::int64_t t) const;  // infinity divides only 0
    std::string display(int column) const;           // "inf" or the number
};

// Odd moduli delta_2, delta_4, ..., delta_{m-2} (each odd, >= 3) constraining
// the even columns of the family L_Delta.
struct DeltaSet {
    std::vector<std::int64_t> deltas;

    DeltaSet() = default;
    explicit DeltaSet(std::vector<std::int64_t> deltas_);
    int expected_width() const { return 2 * static_cast<int>(deltas.size()) + 2; }
    std::int64_t delta(int even_column) const {  // even_column in 2,4,..,m-2
        return deltas[static_cast<size_t>(even_column / 2 - 1)];
    }
};

BraidWord to_braid(const FishnetSpec& spec);
ColumnGcds column_gcds(const FishnetSpec& spec);
int bridge_upper_bound(const FishnetSpec& spec);  // m/2
int component_count(const FishnetSpec& spec);

// Verdict of the even-column gcd condition d_{2j} > 1.
struct MrcHypothesis {
    enum class Status { Pass, Fail, NotApplicableLoose };
    Status status = Status::Fail;
    std::vector<int> failing_columns;  // even columns with d == 1

    bool passed() const { return status == Status::Pass; }
};

// The hypothesis is stated for regular fishnets; loose input yields the
// distinct NotApplicableLoose status unless allow_loose is set, in which case
// the gcd convention (all-zero column -> infinity > 1) is applied as-is.
MrcHypothesis check_mrc_hypothesis(const FishnetSpec& spec, bool allow_loose = false);

// Generator fishnets: t1 realizes the m-cycle (m m-1 .. 1) via odd entries on
// a diagonal and even entries elsewhere; reversed realizes the inverse cycle
// on the opposite diagonal. t2 = (delta_2, 2*delta_4, ..., 2*delta_{m-2})
// realizes the transposition (2 3). Both are strong and Delta-divisible.
FishnetSpec build_t1(int width, const DeltaSet& delta, bool reversed = false);
FishnetSpec build_t2(int width, const DeltaSet& delta);

// Stacks s above r with one separating row of 4s: rows = s.rows, [4..4],
// r.rows. The permutation image composes: phi(result) = phi(s) * phi(r).
FishnetSpec compose(const FishnetSpec& r, const FishnetSpec& s);

// Breadth-first search over compositions of the generator fishnets for a
// strong Delta-divisible spec with exactly k plat components.
struct ComponentSearchResult {
    bool found = false;
    FishnetSpec spec;
    int frontier_size = 0;  // states expanded when exhausted
};

ComponentSearchResult build_with_component_count(int width, const DeltaSet& delta, int k,
                                                 int max_depth = -1 /* default 2m */);

// True iff every entry has |e| >= 3 and every even-column entry is divisible
// by its delta.
bool in_l_delta(const FishnetSpec& spec, const DeltaSet& delta);

// Appends zero rows up to new_height (odd, >= current height).
FishnetSpec pad_height(const FishnetSpec& spec, int new_height);

// ---------------------------------------------------------------------------
// Interweaving: two fishnets of widths 2b and 2b-2 are superimposed on the
// odd / even bridges of a combined diagram of width 4b-2. Sublink boxes land
// in odd combined columns (sublink column j of l at combined column 2j-1, of
// u at 2j+1); the crossings between the two sublinks live in "gray" boxes:
// every even combined column of every odd combined row (parity odd: the
// strands must cross) and the outermost odd columns 1 and 4b-3 of every
// second even combined row (parity even: the strands must not cross).

struct GrayBox {
    int row = 0;
    int column = 0;
    int required_parity = 0;  // 0 = even, 1 = odd

    bool operator<(const GrayBox& rhs) const {
        return row != rhs.row ? row < rhs.row : column < rhs.column;
    }
};

struct InterweaveLayout {
    int bridges_l = 0;        // b
    int sublink_height = 0;   // common height n after zero-padding
    int combined_width = 0;   // 4b-2
    int combined_height = 0;  // 2n+1
    std::vector<GrayBox> gray_boxes;
};

InterweaveLayout interweave_layout(int bridges_l, int sublink_height);

using GrayAssignment = std::map<std::pair<int, int>, std::int64_t>;

FishnetSpec interweave(const FishnetSpec& l, const FishnetSpec& u, const GrayAssignment& gray);

// Reads the monochromatic boxes of an interweaved spec back in the sublink's
// own coordinates; which = 0 for l, 1 for u.
FishnetSpec extract_sublink(const FishnetSpec& combined, int bridges_l, int which);

// ---------------------------------------------------------------------------
// Text format: line 1 "fishnet <m> <n>", then n lines of row entries.
FishnetSpec parse_fishnet(const std::string& text);
std::string emit_fishnet(const FishnetSpec& spec);  // canonical, trailing newline

// 64-bit FNV-1a of the canonical serialization, as 16 hex digits.
std::string spec_digest(const FishnetSpec& spec);

}  // namespace fishnet
