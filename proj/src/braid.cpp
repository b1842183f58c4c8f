#include "fishnet/braid.hpp"

#include <sstream>
#include <stdexcept>

namespace fishnet {

BraidWord::BraidWord(int strands_, std::vector<Syllable> syllables_)
    : strands(strands_), syllables(std::move(syllables_)) {
    if (strands < 2) throw std::invalid_argument("braid word needs at least 2 strands");
    for (const auto& s : syllables) {
        if (s.index < 1 || s.index >= strands)
            throw std::invalid_argument("syllable index " + std::to_string(s.index) +
                                        " out of range 1.." + std::to_string(strands - 1));
        if (s.exponent == 0) throw std::invalid_argument("syllable exponent must be nonzero");
    }
}

bool BraidWord::is_reduced() const {
    for (size_t i = 1; i < syllables.size(); ++i)
        if (syllables[i].index == syllables[i - 1].index) return false;
    return true;
}

Permutation permutation_image(const BraidWord& w) {
    Permutation p = Permutation::identity(w.strands);
    for (const auto& s : w.syllables) {
        if (s.exponent % 2 == 0) continue;
        p = p * Permutation::transposition(w.strands, s.index, s.index + 1);
    }
    return p;
}

BraidWord reduce_word(const BraidWord& w) {
    std::vector<Syllable> stack;
    for (const auto& s : w.syllables) {
        if (!stack.empty() && stack.back().index == s.index) {
            stack.back().exponent += s.exponent;
            if (stack.back().exponent == 0) stack.pop_back();
        } else {
            stack.push_back(s);
        }
    }
    BraidWord out;
    out.strands = w.strands;
    out.syllables = std::move(stack);
    return out;
}

PlatTraceGraph plat_trace_graph(const BraidWord& w) {
    if (w.strands % 2 != 0) throw std::invalid_argument("plat closure needs an even strand count");
    PlatTraceGraph g;
    g.strands = w.strands;
    const Permutation phi = permutation_image(w);
    for (int i = 1; i <= w.strands; ++i) g.strand_edges.emplace_back(i, phi.apply(i));
    for (int i = 1; i <= w.strands / 2; ++i) {
        g.top_cap_edges.emplace_back(2 * i - 1, 2 * i);
        g.bottom_cap_edges.emplace_back(2 * i - 1, 2 * i);
    }
    return g;
}

namespace {

int find_root(std::vector<int>& parent, int x) {
    while (parent[static_cast<size_t>(x)] != x) {
        parent[static_cast<size_t>(x)] = parent[static_cast<size_t>(parent[static_cast<size_t>(x)])];
        x = parent[static_cast<size_t>(x)];
    }
    return x;
}

void unite(std::vector<int>& parent, int a, int b) {
    parent[static_cast<size_t>(find_root(parent, a))] = find_root(parent, b);
}

}  // namespace

PlatComponents trace_components(const BraidWord& w) {
    const PlatTraceGraph g = plat_trace_graph(w);
    const int m = g.strands;
    // Nodes: 1..m top, m+1..2m bottom.
    std::vector<int> parent(static_cast<size_t>(2 * m) + 1);
    for (int i = 0; i <= 2 * m; ++i) parent[static_cast<size_t>(i)] = i;
    for (const auto& [t, b] : g.strand_edges) unite(parent, t, m + b);
    for (const auto& [a, b] : g.top_cap_edges) unite(parent, a, b);
    for (const auto& [a, b] : g.bottom_cap_edges) unite(parent, m + a, m + b);

    PlatComponents out;
    out.top.resize(static_cast<size_t>(m), 0);
    out.bottom.resize(static_cast<size_t>(m), 0);
    std::vector<int> id_of_root(static_cast<size_t>(2 * m) + 1, 0);
    int next_id = 0;
    for (int i = 1; i <= m; ++i) {  // scan top endpoints left to right for canonical ids
        int r = find_root(parent, i);
        if (id_of_root[static_cast<size_t>(r)] == 0) id_of_root[static_cast<size_t>(r)] = ++next_id;
        out.top[static_cast<size_t>(i - 1)] = id_of_root[static_cast<size_t>(r)];
    }
    for (int i = 1; i <= m; ++i) {
        int r = find_root(parent, m + i);
        if (id_of_root[static_cast<size_t>(r)] == 0) id_of_root[static_cast<size_t>(r)] = ++next_id;
        out.bottom[static_cast<size_t>(i - 1)] = id_of_root[static_cast<size_t>(r)];
    }
    out.count = next_id;
    return out;
}

BraidWord parse_plat(const std::string& text) {
    std::istringstream in(text);
    std::string tok;
    int pos = 0;
    if (!(in >> tok)) throw ParseError("empty input, expected 'plat <strands> ...'", 1);
    ++pos;
    if (tok != "plat") throw ParseError("expected leading token 'plat', got '" + tok + "'", pos);
    if (!(in >> tok)) throw ParseError("missing strand count after 'plat'", pos + 1);
    ++pos;
    int strands = 0;
    try {
        size_t used = 0;
        strands = std::stoi(tok, &used);
        if (used != tok.size()) throw std::invalid_argument("");
    } catch (const std::exception&) {
        throw ParseError("bad strand count '" + tok + "'", pos);
    }
    if (strands < 2) throw ParseError("strand count must be >= 2", pos);

    std::vector<Syllable> syllables;
    while (in >> tok) {
        ++pos;
        const size_t caret = tok.find('^');
        if (caret == std::string::npos)
            throw ParseError("syllable '" + tok + "' is missing '^'", pos);
        int index = 0;
        std::int64_t exp = 0;
        try {
            size_t used = 0;
            index = std::stoi(tok.substr(0, caret), &used);
            if (used != caret) throw std::invalid_argument("");
            const std::string etxt = tok.substr(caret + 1);
            exp = std::stoll(etxt, &used);
            if (used != etxt.size()) throw std::invalid_argument("");
        } catch (const std::exception&) {
            throw ParseError("malformed syllable '" + tok + "'", pos);
        }
        if (index < 1 || index >= strands)
            throw ParseError("index " + std::to_string(index) + " out of range 1.." +
                                 std::to_string(strands - 1) + " in '" + tok + "'",
                             pos);
        if (exp == 0) throw ParseError("zero exponent in '" + tok + "'", pos);
        syllables.push_back(Syllable{index, exp});
    }
    return BraidWord(strands, std::move(syllables));
}

std::string emit_plat(const BraidWord& w) {
    std::string out = "plat " + std::to_string(w.strands);
    for (const auto& s : w.syllables)
        out += " " + std::to_string(s.index) + "^" + std::to_string(s.exponent);
    out += "\n";
    return out;
}

}  // namespace fishnet
