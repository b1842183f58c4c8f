#include "fishnet/spec.hpp"

#include <algorithm>
#include <numeric>
#include <queue>
#include <sstream>
#include <stdexcept>
#include <unordered_map>

namespace fishnet {

std::string to_string(FishnetClass c) {
    switch (c) {
        case FishnetClass::Loose: return "loose";
        case FishnetClass::Regular: return "regular";
        case FishnetClass::Strong: return "strong";
    }
    return "?";
}

FishnetSpec::FishnetSpec(int width_, std::vector<std::vector<std::int64_t>> rows_)
    : width(width_), height(static_cast<int>(rows_.size())), rows(std::move(rows_)) {
    if (width < 4 || width % 2 != 0)
        throw std::invalid_argument("fishnet width must be an even integer >= 4");
    if (height < 1 || height % 2 != 1)
        throw std::invalid_argument("fishnet height must be an odd integer >= 1");
    for (int i = 1; i <= height; ++i) {
        const auto expected = static_cast<size_t>(row_length(width, i));
        if (rows[static_cast<size_t>(i - 1)].size() != expected)
            throw std::invalid_argument("row " + std::to_string(i) + " must have " +
                                        std::to_string(expected) + " entries, got " +
                                        std::to_string(rows[static_cast<size_t>(i - 1)].size()));
    }
}

int FishnetSpec::row_length(int width, int row) {
    return row % 2 == 1 ? (width - 2) / 2 : width / 2;
}

std::vector<int> FishnetSpec::row_columns(int row) const {
    std::vector<int> cols;
    if (row % 2 == 1)
        for (int j = 2; j <= width - 2; j += 2) cols.push_back(j);
    else
        for (int j = 1; j <= width - 1; j += 2) cols.push_back(j);
    return cols;
}

namespace {

size_t column_slot(int row, int column) {
    if (row % 2 == 1) {
        if (column % 2 != 0) throw std::invalid_argument("odd rows hold even columns");
        return static_cast<size_t>(column / 2 - 1);
    }
    if (column % 2 != 1) throw std::invalid_argument("even rows hold odd columns");
    return static_cast<size_t>((column - 1) / 2);
}

}  // namespace

std::int64_t FishnetSpec::entry(int row, int column) const {
    return rows[static_cast<size_t>(row - 1)][column_slot(row, column)];
}

void FishnetSpec::set_entry(int row, int column, std::int64_t value) {
    rows[static_cast<size_t>(row - 1)][column_slot(row, column)] = value;
}

FishnetClass FishnetSpec::classification() const {
    bool strong = true;
    for (const auto& row : rows)
        for (std::int64_t e : row) {
            if (e == 0) return FishnetClass::Loose;
            if (e > -3 && e < 3) strong = false;
        }
    return strong ? FishnetClass::Strong : FishnetClass::Regular;
}

bool ColumnGcds::divides(int column, std::int64_t t) const {
    if (is_infinite(column)) return t == 0;
    return t % value(column) == 0;
}

std::string ColumnGcds::display(int column) const {
    return is_infinite(column) ? "inf" : std::to_string(value(column));
}

DeltaSet::DeltaSet(std::vector<std::int64_t> deltas_) : deltas(std::move(deltas_)) {
    for (std::int64_t d : deltas)
        if (d < 3 || d % 2 == 0)
            throw std::invalid_argument("delta values must be odd integers >= 3");
}

BraidWord to_braid(const FishnetSpec& spec) {
    std::vector<Syllable> syllables;
    for (int i = 1; i <= spec.height; ++i)
        for (int j : spec.row_columns(i)) {
            const std::int64_t t = spec.entry(i, j);
            if (t != 0) syllables.push_back(Syllable{j, t});
        }
    return BraidWord(spec.width, std::move(syllables));
}

ColumnGcds column_gcds(const FishnetSpec& spec) {
    ColumnGcds g;
    g.values.assign(static_cast<size_t>(spec.width - 1), 0);
    for (int i = 1; i <= spec.height; ++i)
        for (int j : spec.row_columns(i)) {
            const std::int64_t t = spec.entry(i, j);
            auto& v = g.values[static_cast<size_t>(j - 1)];
            v = std::gcd(v, t < 0 ? -t : t);
        }
    return g;
}

int bridge_upper_bound(const FishnetSpec& spec) { return spec.width / 2; }

int component_count(const FishnetSpec& spec) { return trace_components(to_braid(spec)).count; }

MrcHypothesis check_mrc_hypothesis(const FishnetSpec& spec, bool allow_loose) {
    MrcHypothesis out;
    if (!allow_loose && !spec.is_regular()) {
        out.status = MrcHypothesis::Status::NotApplicableLoose;
        return out;
    }
    const ColumnGcds g = column_gcds(spec);
    for (int j = 2; j <= spec.width - 2; j += 2)
        if (!g.exceeds_one(j)) out.failing_columns.push_back(j);
    out.status = out.failing_columns.empty() ? MrcHypothesis::Status::Pass : MrcHypothesis::Status::Fail;
    return out;
}

namespace {

void require_delta_width(const DeltaSet& delta, int width) {
    if (delta.expected_width() != width)
        throw std::invalid_argument("delta set has " + std::to_string(delta.deltas.size()) +
                                    " entries, width " + std::to_string(width) + " needs " +
                                    std::to_string((width - 2) / 2));
}

}  // namespace

FishnetSpec build_t1(int width, const DeltaSet& delta, bool reversed) {
    require_delta_width(delta, width);
    std::vector<std::vector<std::int64_t>> rows;
    for (int i = 1; i <= width + 1; ++i) {
        std::vector<std::int64_t> row;
        const bool odd = i % 2 == 1;
        for (int j = odd ? 2 : 1; j <= (odd ? width - 2 : width - 1); j += 2) {
            const bool diag = reversed ? (j == width + 1 - i) : (j == i - 1);
            if (odd)
                row.push_back(diag ? delta.delta(j) : 2 * delta.delta(j));
            else
                row.push_back(diag ? 3 : 4);
        }
        rows.push_back(std::move(row));
    }
    return FishnetSpec(width, std::move(rows));
}

FishnetSpec build_t2(int width, const DeltaSet& delta) {
    require_delta_width(delta, width);
    std::vector<std::int64_t> row;
    for (int j = 2; j <= width - 2; j += 2)
        row.push_back(j == 2 ? delta.delta(j) : 2 * delta.delta(j));
    return FishnetSpec(width, {std::move(row)});
}

FishnetSpec compose(const FishnetSpec& r, const FishnetSpec& s) {
    if (r.width != s.width) throw std::invalid_argument("compose needs equal widths");
    std::vector<std::vector<std::int64_t>> rows = s.rows;
    rows.emplace_back(static_cast<size_t>(s.width / 2), 4);
    rows.insert(rows.end(), r.rows.begin(), r.rows.end());
    return FishnetSpec(r.width, std::move(rows));
}

bool in_l_delta(const FishnetSpec& spec, const DeltaSet& delta) {
    require_delta_width(delta, spec.width);
    if (!spec.is_strong()) return false;
    for (int i = 1; i <= spec.height; i += 2)
        for (int j : spec.row_columns(i))
            if (spec.entry(i, j) % delta.delta(j) != 0) return false;
    return true;
}

namespace {

// Component count of the plat closure of any braid whose strand permutation
// is p, used to prune the search before materializing a spec.
int plat_component_count(const Permutation& p) {
    const int m = p.degree();
    std::vector<int> parent(static_cast<size_t>(2 * m) + 1);
    for (int i = 0; i <= 2 * m; ++i) parent[static_cast<size_t>(i)] = i;
    auto root = [&](int x) {
        while (parent[static_cast<size_t>(x)] != x) x = parent[static_cast<size_t>(x)] = parent[static_cast<size_t>(parent[static_cast<size_t>(x)])];
        return x;
    };
    auto unite = [&](int a, int b) { parent[static_cast<size_t>(root(a))] = root(b); };
    for (int i = 1; i <= m; ++i) unite(i, m + p.apply(i));
    for (int i = 1; i <= m / 2; ++i) {
        unite(2 * i - 1, 2 * i);
        unite(m + 2 * i - 1, m + 2 * i);
    }
    int count = 0;
    for (int i = 1; i <= 2 * m; ++i)
        if (root(i) == i) ++count;
    return count;
}

}  // namespace

ComponentSearchResult build_with_component_count(int width, const DeltaSet& delta, int k,
                                                 int max_depth) {
    require_delta_width(delta, width);
    if (k < 1 || k > width / 2)
        throw std::invalid_argument("component count must lie in 1..m/2");
    if (max_depth < 0) max_depth = 2 * width;

    // Generator order is fixed for deterministic output. The all-even row
    // maps to the identity; the reversed diagonal realizes the inverse cycle
    // (negating entries would not: the permutation image is sign-blind).
    std::vector<FishnetSpec> gens;
    gens.push_back(build_t2(width, delta));
    gens.push_back(build_t1(width, delta, false));
    gens.push_back(build_t1(width, delta, true));
    {
        std::vector<std::int64_t> row;
        for (int j = 2; j <= width - 2; j += 2) row.push_back(2 * delta.delta(j));
        gens.emplace_back(width, std::vector<std::vector<std::int64_t>>{std::move(row)});
    }
    std::vector<Permutation> gen_phi;
    gen_phi.reserve(gens.size());
    for (const auto& g : gens) gen_phi.push_back(permutation_image(to_braid(g)));

    std::vector<Permutation> states;
    std::vector<int> parent, gen_of, depth;
    std::unordered_map<Permutation, int, PermutationHash> seen;
    std::queue<int> queue;

    auto discover = [&](const Permutation& p, int par, int gen, int d) -> int {
        auto [it, fresh] = seen.emplace(p, static_cast<int>(states.size()));
        if (!fresh) return -1;
        states.push_back(p);
        parent.push_back(par);
        gen_of.push_back(gen);
        depth.push_back(d);
        queue.push(static_cast<int>(states.size()) - 1);
        return static_cast<int>(states.size()) - 1;
    };

    auto materialize = [&](int idx) {
        std::vector<int> chain;
        for (int i = idx; i >= 0; i = parent[static_cast<size_t>(i)])
            chain.push_back(gen_of[static_cast<size_t>(i)]);
        std::reverse(chain.begin(), chain.end());
        FishnetSpec acc = gens[static_cast<size_t>(chain[0])];
        for (size_t i = 1; i < chain.size(); ++i) acc = compose(gens[static_cast<size_t>(chain[i])], acc);
        return acc;
    };

    for (size_t g = 0; g < gens.size(); ++g)
        discover(gen_phi[g], -1, static_cast<int>(g), 1);

    while (!queue.empty()) {
        const int idx = queue.front();
        queue.pop();
        if (plat_component_count(states[static_cast<size_t>(idx)]) == k) {
            ComponentSearchResult out;
            out.spec = materialize(idx);
            // Accept only on the real trace, not the permutation shortcut.
            out.found = component_count(out.spec) == k && in_l_delta(out.spec, delta);
            if (out.found) return out;
        }
        if (depth[static_cast<size_t>(idx)] >= max_depth) continue;
        for (size_t g = 0; g < gens.size(); ++g)
            discover(states[static_cast<size_t>(idx)] * gen_phi[g], idx, static_cast<int>(g),
                     depth[static_cast<size_t>(idx)] + 1);
    }
    ComponentSearchResult out;
    out.found = false;
    out.frontier_size = static_cast<int>(states.size());
    return out;
}

// ---------------------------------------------------------------------------
// Interweaving

InterweaveLayout interweave_layout(int bridges_l, int sublink_height) {
    if (bridges_l < 3) throw std::invalid_argument("interweaving needs b >= 3 (u width >= 4)");
    if (sublink_height < 1 || sublink_height % 2 != 1)
        throw std::invalid_argument("sublink height must be odd");
    InterweaveLayout lay;
    lay.bridges_l = bridges_l;
    lay.sublink_height = sublink_height;
    lay.combined_width = 4 * bridges_l - 2;
    lay.combined_height = 2 * sublink_height + 1;
    for (int r = 1; r <= lay.combined_height; r += 2)
        for (int c = 2; c <= lay.combined_width - 2; c += 2)
            lay.gray_boxes.push_back(GrayBox{r, c, 1});
    for (int i = 1; i <= sublink_height; i += 2) {  // pattern-A rows
        lay.gray_boxes.push_back(GrayBox{2 * i, 1, 0});
        lay.gray_boxes.push_back(GrayBox{2 * i, lay.combined_width - 1, 0});
    }
    std::sort(lay.gray_boxes.begin(), lay.gray_boxes.end());
    return lay;
}

FishnetSpec pad_height(const FishnetSpec& spec, int new_height) {
    if (new_height < spec.height || new_height % 2 != 1)
        throw std::invalid_argument("padded height must be an odd integer >= current height");
    auto rows = spec.rows;
    for (int i = spec.height + 1; i <= new_height; ++i)
        rows.emplace_back(static_cast<size_t>(FishnetSpec::row_length(spec.width, i)), 0);
    return FishnetSpec(spec.width, std::move(rows));
}

FishnetSpec interweave(const FishnetSpec& l, const FishnetSpec& u, const GrayAssignment& gray) {
    if (u.width != l.width - 2)
        throw std::invalid_argument("interweave width mismatch: u must be 2 narrower than l");
    const int b = l.width / 2;
    const int n = std::max(l.height, u.height);
    const FishnetSpec lp = pad_height(l, n);
    const FishnetSpec up = pad_height(u, n);
    const InterweaveLayout lay = interweave_layout(b, n);

    std::vector<std::vector<std::int64_t>> rows;
    for (int i = 1; i <= lay.combined_height; ++i)
        rows.emplace_back(static_cast<size_t>(FishnetSpec::row_length(lay.combined_width, i)), 0);
    FishnetSpec combined(lay.combined_width, std::move(rows));

    for (int i = 1; i <= n; ++i) {
        for (int j : lp.row_columns(i)) combined.set_entry(2 * i, 2 * j - 1, lp.entry(i, j));
        for (int j : up.row_columns(i)) combined.set_entry(2 * i, 2 * j + 1, up.entry(i, j));
    }

    for (const auto& [addr, value] : gray) {
        const bool known = std::any_of(lay.gray_boxes.begin(), lay.gray_boxes.end(),
                                       [&](const GrayBox& g) {
                                           return g.row == addr.first && g.column == addr.second;
                                       });
        if (!known)
            throw std::invalid_argument("gray assignment at (" + std::to_string(addr.first) + "," +
                                        std::to_string(addr.second) + ") is not a gray box");
    }
    for (const auto& g : lay.gray_boxes) {
        const auto it = gray.find({g.row, g.column});
        const std::int64_t value = it == gray.end() ? 0 : it->second;
        const int parity = static_cast<int>(((value % 2) + 2) % 2);
        if (parity != g.required_parity)
            throw std::invalid_argument(
                "parity violation at gray box (" + std::to_string(g.row) + "," +
                std::to_string(g.column) + "): expected " +
                (g.required_parity ? std::string("odd") : std::string("even")) + ", got " +
                std::to_string(value));
        combined.set_entry(g.row, g.column, value);
    }
    return combined;
}

FishnetSpec extract_sublink(const FishnetSpec& combined, int bridges_l, int which) {
    const int b = bridges_l;
    if (combined.width != 4 * b - 2) throw std::invalid_argument("combined width does not match b");
    if (which != 0 && which != 1) throw std::invalid_argument("which must be 0 (l) or 1 (u)");
    const int n = (combined.height - 1) / 2;
    const int sub_width = which == 0 ? 2 * b : 2 * b - 2;
    std::vector<std::vector<std::int64_t>> rows;
    for (int i = 1; i <= n; ++i) {
        std::vector<std::int64_t> row;
        const bool odd = i % 2 == 1;
        for (int j = odd ? 2 : 1; j <= (odd ? sub_width - 2 : sub_width - 1); j += 2)
            row.push_back(combined.entry(2 * i, which == 0 ? 2 * j - 1 : 2 * j + 1));
        rows.push_back(std::move(row));
    }
    return FishnetSpec(sub_width, std::move(rows));
}

// ---------------------------------------------------------------------------
// Serialization

FishnetSpec parse_fishnet(const std::string& text) {
    std::istringstream in(text);
    std::string line;
    int lineno = 0;
    if (!std::getline(in, line)) throw ParseError("empty input, expected 'fishnet <m> <n>'", 1);
    ++lineno;
    std::istringstream head(line);
    std::string word;
    int m = 0, n = 0;
    if (!(head >> word) || word != "fishnet")
        throw ParseError("line 1 must start with 'fishnet'", lineno);
    if (!(head >> m >> n)) throw ParseError("line 1 must read 'fishnet <m> <n>'", lineno);
    if (head >> word) throw ParseError("trailing token '" + word + "' on line 1", lineno);
    if (m < 4 || m % 2 != 0) throw ParseError("width must be an even integer >= 4", lineno);
    if (n < 1 || n % 2 != 1) throw ParseError("height must be an odd integer >= 1", lineno);

    std::vector<std::vector<std::int64_t>> rows;
    for (int i = 1; i <= n; ++i) {
        if (!std::getline(in, line))
            throw ParseError("missing row " + std::to_string(i) + " of " + std::to_string(n),
                             lineno + 1);
        ++lineno;
        std::istringstream row_in(line);
        std::vector<std::int64_t> row;
        std::int64_t v = 0;
        while (row_in >> v) row.push_back(v);
        if (!row_in.eof()) {
            row_in.clear();
            row_in >> word;
            throw ParseError("bad token '" + word + "' in row " + std::to_string(i), lineno);
        }
        const auto expected = static_cast<size_t>(FishnetSpec::row_length(m, i));
        if (row.size() != expected)
            throw ParseError("row " + std::to_string(i) + " must have " + std::to_string(expected) +
                                 " entries, got " + std::to_string(row.size()),
                             lineno);
        rows.push_back(std::move(row));
    }
    while (std::getline(in, line)) {
        ++lineno;
        if (!line.empty() && line.find_first_not_of(" \t\r") != std::string::npos)
            throw ParseError("unexpected content after row " + std::to_string(n), lineno);
    }
    return FishnetSpec(m, std::move(rows));
}

std::string emit_fishnet(const FishnetSpec& spec) {
    std::string out = "fishnet " + std::to_string(spec.width) + " " + std::to_string(spec.height) + "\n";
    for (const auto& row : spec.rows) {
        for (size_t i = 0; i < row.size(); ++i) {
            if (i) out += ' ';
            out += std::to_string(row[i]);
        }
        out += '\n';
    }
    return out;
}

std::string spec_digest(const FishnetSpec& spec) {
    const std::string text = emit_fishnet(spec);
    std::uint64_t h = 1469598103934665603ull;
    for (unsigned char c : text) {
        h ^= c;
        h *= 1099511628211ull;
    }
    static const char* hex = "0123456789abcdef";
    std::string out(16, '0');
    for (int i = 15; i >= 0; --i) {
        out[static_cast<size_t>(i)] = hex[h & 0xf];
        h >>= 4;
    }
    return out;
}

}  // namespace fishnet
