#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "fishnet/permgroup.hpp"
#include "fishnet/spec.hpp"

namespace fishnet {

// A strand label: either a concrete involution in a permutation group or a
// symbolic generator a_j of the path Coxeter group of the diagram.
struct Label {
    std::variant<Permutation, int> value;

    static Label concrete(Permutation p) { return Label{std::move(p)}; }
    static Label symbolic(int index) { return Label{index}; }

    bool is_concrete() const { return std::holds_alternative<Permutation>(value); }
    const Permutation& perm() const { return std::get<Permutation>(value); }
    int index() const { return std::get<int>(value); }

    std::string display() const;
    bool operator==(const Label& rhs) const { return value == rhs.value; }
    bool operator!=(const Label& rhs) const { return !(*this == rhs); }
};

enum class Backend { Concrete, Symbolic };

// One application of the twist-region rules to the pair of labels entering a
// twist region from the top. Positive crossings iterate (a,b) -> (aba^-1, a),
// negative ones (a,b) -> (b, b^-1 a b); the iteration has period ord(ab), so
// the exponent is reduced modulo that order.
std::pair<Permutation, Permutation> propagate_twist(const Permutation& a, const Permutation& b,
                                                    std::int64_t t);

struct SymbolicStep {
    bool ok = false;
    bool relation_violation = false;  // d does not divide t (vs. out-of-fragment labels)
    std::string failure;              // set when !ok
};

// Symbolic fragment: equal labels pass for any t; an adjacent pair {a_l,
// a_l+1} passes unchanged iff the governing even-column gcd d_2l divides t;
// anything else leaves the fragment and fails.
SymbolicStep propagate_twist_symbolic(int a_index, int b_index, std::int64_t t,
                                      const ColumnGcds& gcds);

struct Coloring {
    FishnetSpec spec;
    Backend backend = Backend::Concrete;
    std::vector<Label> maxima;                    // m/2 labels, bridge order
    std::vector<std::vector<Label>> boundaries;   // (height+1) x width segment labels
};

struct ColoringFailure {
    enum class Kind { None, CapMismatch, SymbolicUnrepresentable, RelationViolated, BadInput };
    Kind kind = Kind::None;
    int row = 0;     // box address when applicable
    int column = 0;
    int cap = 0;     // 1-based cap index for CapMismatch
    std::string message;
};

struct ColoringOutcome {
    bool ok = false;
    Coloring coloring;  // valid when ok
    ColoringFailure failure;
};

ColoringOutcome verify_coloring(const FishnetSpec& spec, const std::vector<Label>& maxima,
                                Backend backend);

// Independent re-check of a finished coloring: every box satisfies the
// propagation relation and every bottom cap closes.
std::optional<std::string> recheck(const Coloring& coloring);

// ---------------------------------------------------------------------------
// Certificates

struct CertBound {
    std::int64_t value = 0;
    std::string justification;
    bool trusted = false;  // trusted lemma citation rather than machine-checked
};

struct QuotientCertificate {
    std::string input_digest;
    std::string backend;
    std::string target;
    std::string meridian_class;
    std::vector<std::string> maxima_labels;
    bool homomorphism_verified = false;
    std::string image;
    std::vector<std::string> checks;
    CertBound lower_bound;
    CertBound upper_bound;
    bool concluded = false;  // set only when verified and lower == upper
    std::int64_t beta = 0;
    std::int64_t mu = 0;
    std::optional<CertBound> rank_claim;
};

struct Prop14Result {
    enum class Status { Ok, NotRegular, HypothesisFailed, ColoringFailed };
    Status status = Status::ColoringFailed;
    MrcHypothesis hypothesis;
    QuotientCertificate certificate;  // populated when Ok
    ColoringOutcome outcome;
};

// Symbolic path-Coxeter certificate: checks the even-column gcd hypothesis,
// propagates the symbolic labels a_1..a_{m/2}, and emits beta = mu = m/2 with
// the reflection-rank lower bound carried as a trusted lemma.
Prop14Result prop14_certificate(const FishnetSpec& spec, bool allow_loose = false);

// ---------------------------------------------------------------------------
// Concrete coloring search

struct InvolutionClass {
    std::string name;        // class description, e.g. "transpositions of S_4"
    std::string group_name;  // target group, e.g. "S_4"
    int degree = 0;
    std::vector<Permutation> members;  // canonical enumeration order
};

InvolutionClass transposition_class(int degree);
InvolutionClass dihedral_reflection_class(int q);
// Direct product acting on disjoint point blocks; members are the factors'
// members embedded block-wise, factor order first.
InvolutionClass product_class(const std::vector<InvolutionClass>& factors);

enum class SearchStatus { Found, Exhausted, BudgetExceeded };

struct FindOptions {
    std::int64_t max_nodes = 100'000'000;
    // Accept only colorings whose maxima labels are transpositions forming a
    // connected graph (image = full symmetric group).
    bool require_spanning = false;
};

struct FindResult {
    SearchStatus status = SearchStatus::Exhausted;
    Coloring coloring;  // valid when Found
    std::int64_t nodes = 0;
};

// Backtracking over maxima label assignments in lexicographic class order
// with incremental propagation; deterministic first hit.
FindResult find_coloring(const FishnetSpec& spec, const InvolutionClass& cls,
                         FindOptions options = {});

// Certificate for a found concrete coloring. The lower bound is
// machine-checked where the image allows it: N-1 for a full symmetric image
// on transposition meridians, 2 for a non-cyclic image, else 1.
QuotientCertificate concrete_certificate(const FishnetSpec& spec, const Coloring& coloring,
                                         const InvolutionClass& cls,
                                         std::int64_t group_order_cap = permgroup::kDefaultOrderCap);

// ---------------------------------------------------------------------------
// Direct sums: disjoint sublinks colored independently, labels embedded into
// a product acting on disjoint point blocks, then re-verified on the full
// diagram (crossings between parts must commute factor-wise).

struct DirectSumPart {
    std::string group_name;
    int degree = 0;
    std::vector<int> components;                // trace component ids in this part
    std::map<int, Permutation> bridge_labels;   // global bridge index -> label
};

ColoringOutcome direct_sum_coloring(const FishnetSpec& spec,
                                    const std::vector<DirectSumPart>& parts);

}  // namespace fishnet
