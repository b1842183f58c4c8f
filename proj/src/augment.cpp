#include "fishnet/augment.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>
#include <tuple>

namespace fishnet {

BraidWord normalize_plat_word(const BraidWord& w) {
    if (w.strands % 2 != 0 || w.strands < 4)
        throw std::invalid_argument("plat normalization needs an even strand count >= 4");
    BraidWord r = reduce_word(w);
    size_t lo = 0, hi = r.syllables.size();
    while (lo < hi && r.syllables[lo].index % 2 == 1) ++lo;       // absorbed by top caps
    while (hi > lo && r.syllables[hi - 1].index % 2 == 1) --hi;   // absorbed by bottom caps
    BraidWord out;
    out.strands = r.strands;
    out.syllables.assign(r.syllables.begin() + static_cast<std::ptrdiff_t>(lo),
                         r.syllables.begin() + static_cast<std::ptrdiff_t>(hi));
    return out;
}

FishnetSpec word_to_loose_fishnet(const BraidWord& w, bool require_normalized) {
    if (w.syllables.empty()) throw std::invalid_argument("word must be nonempty");
    if (w.syllables.back().index % 2 != 0)
        throw std::invalid_argument("final syllable index must be even");
    if (require_normalized) {
        if (!w.is_reduced()) throw std::invalid_argument("word must be reduced");
        if (w.syllables.front().index % 2 != 0)
            throw std::invalid_argument("odd leading index must be normalized first");
    }
    const int k = static_cast<int>(w.syllables.size());
    std::vector<std::vector<std::int64_t>> rows;
    for (int i = 1; i <= 2 * k - 1; ++i)
        rows.emplace_back(static_cast<size_t>(FishnetSpec::row_length(w.strands, i)), 0);
    FishnetSpec spec(w.strands, std::move(rows));
    for (int j = 1; j <= k; ++j) {
        const Syllable& s = w.syllables[static_cast<size_t>(j - 1)];
        const int row = s.index % 2 == 0 ? 2 * j - 1 : 2 * j;
        spec.set_entry(row, s.index, s.exponent);
    }
    return spec;
}

FishnetSpec build_staircase_unknot(int bridges) {
    if (bridges < 2) throw std::invalid_argument("staircase needs at least 2 bridges");
    std::vector<std::int64_t> row(static_cast<size_t>(bridges - 1), 1);
    return FishnetSpec(2 * bridges, {std::move(row)});
}

namespace {

struct CombinedBuilder {
    int width;
    std::vector<std::vector<std::int64_t>> rows;
    std::vector<AugmentBox> boxes;

    explicit CombinedBuilder(int w) : width(w) {}

    int next_index() const { return static_cast<int>(rows.size()) + 1; }

    void append_zero_row() {
        rows.emplace_back(static_cast<size_t>(FishnetSpec::row_length(width, next_index())), 0);
    }

    // parity 1 = odd row (even columns), 0 = even row (odd columns)
    void append_row(int parity,
                    const std::vector<std::tuple<int, std::int64_t, AugmentBox::Kind, int>>& entries) {
        if (next_index() % 2 != parity) append_zero_row();
        append_zero_row();
        const int r = static_cast<int>(rows.size());
        for (const auto& [col, val, kind, sub] : entries) {
            const size_t slot =
                r % 2 == 1 ? static_cast<size_t>(col / 2 - 1) : static_cast<size_t>((col - 1) / 2);
            rows[static_cast<size_t>(r - 1)][slot] = val;
            if (val != 0) boxes.push_back(AugmentBox{r, col, kind, sub});
        }
    }
};

FishnetSpec build_combined(int b, const BraidWord& normalized, std::int64_t delta,
                           const std::vector<int>& link_signs, const std::vector<int>& close_signs,
                           std::vector<AugmentBox>* boxes_out) {
    const int combined_width = 4 * b - 2;
    CombinedBuilder builder(combined_width);
    using Entry = std::tuple<int, std::int64_t, AugmentBox::Kind, int>;

    // One cell per syllable of L's word, in cap-pattern coordinates: L column
    // c sits at combined column 2c-1; even L columns first braid the two
    // intervening U strands aside and back.
    for (const Syllable& s : normalized.syllables) {
        const int c = s.index;
        if (c % 2 == 1) {
            builder.append_row(0, {Entry{2 * c - 1, s.exponent, AugmentBox::Kind::LBox, c}});
        } else {
            const std::vector<Entry> aside{Entry{2 * c - 2, delta, AugmentBox::Kind::Gray, 0},
                                           Entry{2 * c, delta, AugmentBox::Kind::Gray, 0}};
            builder.append_row(1, aside);
            builder.append_row(0, {Entry{2 * c - 1, s.exponent, AugmentBox::Kind::LBox, c}});
            builder.append_row(1, aside);
        }
    }

    // Staircase blocks give U its own +1 boxes between adjacent U bridges.
    for (int q = 1; q <= b - 2; ++q) {
        const std::vector<Entry> aside{Entry{4 * q, delta, AugmentBox::Kind::Gray, 0},
                                       Entry{4 * q + 2, delta, AugmentBox::Kind::Gray, 0}};
        builder.append_row(1, aside);
        builder.append_row(0, {Entry{4 * q + 1, 1, AugmentBox::Kind::UBox, 2 * q}});
        builder.append_row(1, aside);
    }

    // Linking row and closing row: +-delta in every even column. The pair
    // swaps every L/U strand pair and back, so the bottom caps again meet
    // monochromatic pairs, and every even column's gcd becomes exactly delta.
    auto full_row = [&](const std::vector<int>& signs) {
        std::vector<Entry> entries;
        for (int p = 1; p <= (combined_width - 2) / 2; ++p)
            entries.push_back(
                Entry{2 * p, signs[static_cast<size_t>(p - 1)] * delta, AugmentBox::Kind::Gray, 0});
        return entries;
    };
    builder.append_row(1, full_row(link_signs));
    builder.append_row(1, full_row(close_signs));

    if (boxes_out) *boxes_out = builder.boxes;
    return FishnetSpec(combined_width, std::move(builder.rows));
}

}  // namespace

AugmentationResult augment(const BraidWord& w, const AugmentOptions& options) {
    if (w.strands % 2 != 0 || w.strands < 4)
        throw std::invalid_argument("augmentation needs an even strand count >= 4 (b >= 2)");
    if (options.delta < 3 || options.delta % 2 == 0)
        throw std::invalid_argument("delta must be an odd integer >= 3");
    const int b = w.strands / 2;
    const int combined_width = 4 * b - 2;

    AugmentationResult result;
    result.input = w;
    result.normalized = normalize_plat_word(w);
    if (result.normalized.syllables.empty()) {
        // The input link is a b-component unlink; its loose fishnet is the
        // all-zero one-row spec.
        std::vector<std::vector<std::int64_t>> rows{
            std::vector<std::int64_t>(static_cast<size_t>((w.strands - 2) / 2), 0)};
        result.loose_fishnet = FishnetSpec(w.strands, std::move(rows));
    } else {
        result.loose_fishnet = word_to_loose_fishnet(result.normalized);
    }

    const int input_components = trace_components(w).count;
    const int sign_count = (combined_width - 2) / 2;

    auto signs_of_pattern = [&](int pattern) {
        std::vector<int> signs(static_cast<size_t>(sign_count), 1);
        for (int j = 0; j < sign_count; ++j)
            if (pattern & (1 << j)) signs[static_cast<size_t>(j)] = -1;
        return signs;
    };

    const int pattern_space = sign_count >= 30 ? options.max_sign_patterns : (1 << sign_count);
    int tried = 0;
    FindResult find;
    Prop14Result symbolic;
    bool done = false;

    // Fallback sweep over the linking row's signs first, then the closing
    // row's; the all-positive filling is expected to work.
    for (int phase = 0; phase < 2 && !done; ++phase) {
        for (int pattern = 0; pattern < pattern_space && !done; ++pattern) {
            if (tried >= options.max_sign_patterns) break;
            if (phase == 1 && pattern == 0) continue;  // same as phase 0, pattern 0
            ++tried;
            const auto link_signs = phase == 0 ? signs_of_pattern(pattern) : signs_of_pattern(0);
            const auto close_signs = phase == 0 ? signs_of_pattern(0) : signs_of_pattern(pattern);
            std::vector<AugmentBox> boxes;
            FishnetSpec combined = build_combined(b, result.normalized, options.delta, link_signs,
                                                  close_signs, &boxes);

            const PlatComponents comps = trace_components(to_braid(combined));
            if (comps.count != input_components + 1)
                throw std::logic_error("combined diagram has " + std::to_string(comps.count) +
                                       " components, expected input + 1");
            const ColumnGcds gcds = column_gcds(combined);
            for (int j = 2; j <= combined_width - 2; j += 2)
                if (gcds.is_infinite(j) || gcds.value(j) != options.delta)
                    throw std::logic_error("even column " + std::to_string(j) +
                                           " has gcd " + gcds.display(j) + ", expected " +
                                           std::to_string(options.delta));

            if (options.delta == 3) {
                FindOptions fopt;
                fopt.max_nodes = options.max_nodes - result.search_nodes;
                fopt.require_spanning = true;
                find = find_coloring(combined, transposition_class(2 * b), fopt);
                result.search_nodes += find.nodes;
                if (find.status == SearchStatus::BudgetExceeded)
                    throw AugmentSearchError(
                        "coloring search budget exceeded after " +
                            std::to_string(result.search_nodes) + " nodes and " +
                            std::to_string(tried) + " sign patterns",
                        true);
                if (find.status != SearchStatus::Found) continue;
            } else {
                symbolic = prop14_certificate(combined, /*allow_loose=*/true);
                if (symbolic.status != Prop14Result::Status::Ok) continue;
            }
            result.combined = std::move(combined);
            result.boxes = std::move(boxes);
            result.components = comps.count;
            result.unknot_component_id = comps.top[2];  // U's first strand is position 3
            done = true;
        }
    }
    result.sign_patterns_tried = tried;
    if (!done)
        throw AugmentSearchError("coloring search exhausted: no valid coloring over " +
                                     std::to_string(tried) + " sign patterns (" +
                                     std::to_string(result.search_nodes) + " nodes)",
                                 false);

    // Walk the strand colors down the diagram: every tagged box must act on
    // the advertised pair (L/L, U/U, or mixed for gray), and the bottom caps
    // must again meet monochromatic pairs.
    {
        std::map<std::pair<int, int>, AugmentBox::Kind> kind_at;
        for (const auto& box : result.boxes) kind_at[{box.row, box.column}] = box.kind;
        std::vector<char> is_u(static_cast<size_t>(combined_width) + 1, 0);
        for (int q = 1; q <= b - 1; ++q) {
            is_u[static_cast<size_t>(4 * q - 1)] = 1;
            is_u[static_cast<size_t>(4 * q)] = 1;
        }
        for (int i = 1; i <= result.combined.height; ++i)
            for (int j : result.combined.row_columns(i)) {
                const std::int64_t t = result.combined.entry(i, j);
                if (t == 0) continue;
                const char left = is_u[static_cast<size_t>(j)];
                const char right = is_u[static_cast<size_t>(j + 1)];
                const AugmentBox::Kind kind = kind_at.at({i, j});
                const bool ok = kind == AugmentBox::Kind::Gray ? left != right
                                : kind == AugmentBox::Kind::LBox ? (!left && !right)
                                                                 : (left && right);
                if (!ok)
                    throw std::logic_error("box (" + std::to_string(i) + "," + std::to_string(j) +
                                           ") acts on the wrong strand colors");
                if (t % 2 != 0)
                    std::swap(is_u[static_cast<size_t>(j)], is_u[static_cast<size_t>(j + 1)]);
            }
        for (int c = 1; c <= combined_width / 2; ++c)
            if (is_u[static_cast<size_t>(2 * c - 1)] != is_u[static_cast<size_t>(2 * c)])
                throw std::logic_error("bottom cap " + std::to_string(c) +
                                       " joins strands of both sublinks");
    }

    // The monochromatic boxes must reproduce the two sublinks exactly.
    std::vector<Syllable> l_sylls, u_sylls;
    for (const auto& box : result.boxes) {
        const std::int64_t value = result.combined.entry(box.row, box.column);
        if (box.kind == AugmentBox::Kind::LBox) l_sylls.push_back(Syllable{box.sub_column, value});
        if (box.kind == AugmentBox::Kind::UBox) u_sylls.push_back(Syllable{box.sub_column, value});
    }
    if (!(BraidWord(2 * b, l_sylls) == result.normalized))
        throw std::logic_error("L's monochromatic boxes do not spell the normalized word");
    std::vector<Syllable> staircase;
    for (int j = 2; j <= 2 * b - 4; j += 2) staircase.push_back(Syllable{j, 1});
    if (!(u_sylls == staircase))
        throw std::logic_error("U's monochromatic boxes do not spell the staircase unknot");

    const std::string gcd_check = "every even-column gcd equals " + std::to_string(options.delta);
    const std::string comp_check = "combined component count " + std::to_string(result.components) +
                                   " = input " + std::to_string(input_components) + " + 1";
    if (options.delta == 3) {
        result.coloring = find.coloring;
        result.certificate =
            concrete_certificate(result.combined, result.coloring, transposition_class(2 * b));
        int l_labels = 0;
        for (int bridge = 1; bridge <= 2 * b - 1; bridge += 2) ++l_labels;
        result.certificate.checks.push_back(gcd_check);
        result.certificate.checks.push_back(comp_check);
        result.certificate.checks.push_back("generating set contains exactly " +
                                            std::to_string(l_labels) + " meridians of L (odd bridges)");
    } else {
        result.coloring = symbolic.outcome.coloring;
        result.certificate = symbolic.certificate;
        result.certificate.checks.push_back(gcd_check);
        result.certificate.checks.push_back(comp_check);
    }
    if (!result.certificate.concluded || result.certificate.beta != 2 * b - 1)
        throw std::logic_error("certificate did not conclude beta = mu = 2b-1");

    result.rank_claim = {2 * b - 1,
                         "the Coxeter group on 2b-1 generators with all pairwise products of "
                         "equal finite order has rank 2b-1 (Kaufmann, Lemma 3.2(c)); hence "
                         "rank(pi_1) = mu here",
                         true};
    result.certificate.rank_claim = result.rank_claim;
    return result;
}

}  // namespace fishnet
