#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "ramsey/colouring.hpp"

namespace ramsey {

// The (A0, A1, b) rectangle produced by the derandomized grouping step.
struct GroupingOutcome {
    IndexSet a0;
    IndexSet a1;
    Bit b = 0;
    std::size_t window_start = 0;     // position of the chosen window within A1'
    std::uint32_t stable_count = 0;   // rows of A0' constant on that window
};

struct InsufficientStability {
    std::string sigma;  // failing address in the recursive builder, "" at top level
    std::uint32_t best_stable_count = 0;
    std::size_t window_start = 0;
};

using GroupingResult = std::variant<GroupingOutcome, InsufficientStability>;

// Derandomized grouping: split A into A0' (first 4k^{c-2} elements) and A1',
// scan every contiguous window of length k^{c-2} in A1', keep the one with
// the most rows of A0' constant on it (ties to the smallest start), take the
// majority colour b among those rows (ties to 0), and return the first
// k^{c-2} stable rows of colour b against the window.
// Fails with InsufficientStability when fewer than 2k^{c-2} rows are stable
// on the best window.
GroupingResult grouping(const Colouring& f, const IndexSet& a, std::uint32_t k,
                        std::uint32_t c);

// Binary decomposition tree witnessing that a restriction is very simple:
// leaves are single vertices, each internal node records the constant
// cross-colour between the leaf sets of its children.
class VsTree {
public:
    struct Node {
        bool is_leaf = false;
        Vertex vertex = 0;                // leaf payload
        Bit b = 0;                        // internal payload
        std::unique_ptr<Node> left, right;
    };

    static VsTree leaf(Vertex v);
    static VsTree join(Bit b, VsTree left, VsTree right);

    const Node* root() const { return root_.get(); }
    std::size_t leaf_count() const;
    IndexSet leaves() const;

private:
    std::unique_ptr<Node> root_;
};

struct TreeViolation {
    std::string path;  // binary address of the offending node
    std::string reason;
    std::optional<VertexPair> pair;
};

// Checks leaf disjointness, left-before-right ordering, and cross-pair
// constancy at every node.
std::optional<TreeViolation> verify_tree(const Colouring& f, const VsTree& tree);

struct EhResult {
    std::uint32_t h0 = 0;
    std::uint32_t h1 = 0;
    IndexSet witness;  // achieves max(h0, h1), homogeneous under f
};

struct InvalidTree : std::runtime_error {
    explicit InvalidTree(const TreeViolation& v);
    TreeViolation violation;
};

// Bottom-up DP over the tree: at a node with cross-colour b, homogeneous
// sets of colour b combine across the children while the other colour stays
// within one child. h0*h1 >= leaf count, so the witness has size at least
// ceil(sqrt(leaf count)).
EhResult eh_extract(const VsTree& tree, const Colouring& f);

struct VerySimpleResult {
    IndexSet vertices;  // the 2^d selected vertices
    VsTree tree;
};

struct GroupingTraceRow {
    std::string sigma;
    std::size_t window_start = 0;
    std::uint32_t stable_count = 0;
    Bit b = 0;
};

using BuildResult = std::variant<VerySimpleResult, InsufficientStability>;

// Iterated grouping: starting from the first k^{2d} vertices, split each
// A_sigma (|A_sigma| = k^{2(d-|sigma|)}) via grouping with c = 2(d-|sigma|)
// until singletons remain.
BuildResult build_very_simple(const Colouring& f, std::uint32_t k, std::uint32_t d,
                              std::vector<GroupingTraceRow>* trace = nullptr);

struct SizeBudget {
    std::uint64_t required = 0;
    std::uint64_t cap = 0;
};

using ExtractResult = std::variant<IndexSet, InsufficientStability, SizeBudget>;

// End-to-end pipeline: d = 2*floor(log2 k), build the very simple
// restriction, then extract a homogeneous set of size >= 2^(d/2) >= k.
ExtractResult extract_homogeneous(const Colouring& f, std::uint32_t k,
                                  std::uint64_t size_cap = std::uint64_t{1} << 20);

}  // namespace ramsey
