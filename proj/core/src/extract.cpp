#include "ramsey/extract.hpp"

#include <algorithm>

#include "ramsey/construct.hpp"

namespace ramsey {

GroupingResult grouping(const Colouring& f, const IndexSet& a, std::uint32_t k,
                        std::uint32_t c) {
    if (c < 2) throw std::invalid_argument("grouping: c must be >= 2");
    if (k < 1) throw std::invalid_argument("grouping: k must be >= 1");
    std::uint64_t kc = ipow(k, c);
    std::uint64_t w64 = ipow(k, c - 2);
    if (a.size() != kc) {
        throw std::invalid_argument("grouping: |A| must equal k^c = " + std::to_string(kc));
    }
    if (kc <= 5 * w64) {
        throw std::invalid_argument("grouping: need k^c > 5*k^(c-2)");
    }
    if (!a.valid_for(f.size())) {
        throw std::invalid_argument("grouping: index set not valid for colouring");
    }
    auto w = static_cast<std::size_t>(w64);
    auto rows = static_cast<std::size_t>(4 * w64);  // |A0'|

    std::vector<Vertex> a1p(a.begin() + rows, a.end());
    std::size_t windows = a1p.size() - w + 1;

    // For each row x in A0', mark the change points of f(x,-) along A1';
    // a window is stable for x iff it straddles no change point.
    // change[p] = 1 iff f(x, a1p[p]) != f(x, a1p[p+1]).
    std::vector<std::vector<std::uint32_t>> change_prefix(rows);
    for (std::size_t r = 0; r < rows; ++r) {
        auto& pre = change_prefix[r];
        pre.resize(a1p.size());
        pre[0] = 0;
        Bit prev = f.colour(a[r], a1p[0]);
        for (std::size_t p = 1; p < a1p.size(); ++p) {
            Bit cur = f.colour(a[r], a1p[p]);
            pre[p] = pre[p - 1] + (cur != prev ? 1 : 0);
            prev = cur;
        }
    }

    std::size_t best_start = 0;
    std::uint32_t best_count = 0;
    for (std::size_t p = 0; p < windows; ++p) {
        std::uint32_t count = 0;
        for (std::size_t r = 0; r < rows; ++r) {
            const auto& pre = change_prefix[r];
            if (pre[p + w - 1] == pre[p]) ++count;
        }
        if (count > best_count) {  // ties keep the smallest start
            best_count = count;
            best_start = p;
        }
    }

    if (best_count < 2 * w64) {
        return InsufficientStability{"", best_count, best_start};
    }

    // stable rows and their constant colours on the chosen window
    std::vector<Vertex> stable[2];
    for (std::size_t r = 0; r < rows; ++r) {
        const auto& pre = change_prefix[r];
        if (pre[best_start + w - 1] == pre[best_start]) {
            Bit col = f.colour(a[r], a1p[best_start]);
            stable[col].push_back(a[r]);
        }
    }
    Bit b = stable[1].size() > stable[0].size() ? 1 : 0;  // ties toward 0

    GroupingOutcome out;
    out.b = b;
    out.window_start = best_start;
    out.stable_count = best_count;
    out.a0 = IndexSet(std::vector<Vertex>(stable[b].begin(), stable[b].begin() + w));
    out.a1 = IndexSet(std::vector<Vertex>(a1p.begin() + best_start,
                                          a1p.begin() + best_start + w));
    return out;
}

VsTree VsTree::leaf(Vertex v) {
    VsTree t;
    t.root_ = std::make_unique<Node>();
    t.root_->is_leaf = true;
    t.root_->vertex = v;
    return t;
}

VsTree VsTree::join(Bit b, VsTree left, VsTree right) {
    VsTree t;
    t.root_ = std::make_unique<Node>();
    t.root_->b = b;
    t.root_->left = std::move(left.root_);
    t.root_->right = std::move(right.root_);
    return t;
}

namespace {

void collect_leaves(const VsTree::Node* n, std::vector<Vertex>& out) {
    if (!n) return;
    if (n->is_leaf) {
        out.push_back(n->vertex);
        return;
    }
    collect_leaves(n->left.get(), out);
    collect_leaves(n->right.get(), out);
}

}  // namespace

std::size_t VsTree::leaf_count() const {
    std::vector<Vertex> v;
    collect_leaves(root_.get(), v);
    return v.size();
}

IndexSet VsTree::leaves() const {
    std::vector<Vertex> v;
    collect_leaves(root_.get(), v);
    std::vector<Vertex> sorted = v;
    std::sort(sorted.begin(), sorted.end());
    sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
    if (sorted.size() != v.size()) {
        throw std::invalid_argument("VsTree: duplicate leaves");
    }
    return IndexSet(std::move(sorted));
}

namespace {

// Returns the leaves of the subtree in left-to-right order, or records the
// first violation found.
bool check_node(const Colouring& f, const VsTree::Node* n, const std::string& path,
                std::vector<Vertex>& out, std::optional<TreeViolation>& viol) {
    if (n->is_leaf) {
        if (n->vertex >= f.size()) {
            viol = TreeViolation{path, "leaf vertex out of range", std::nullopt};
            return false;
        }
        out.push_back(n->vertex);
        return true;
    }
    if (!n->left || !n->right) {
        viol = TreeViolation{path, "internal node missing a child", std::nullopt};
        return false;
    }
    std::vector<Vertex> lv, rv;
    if (!check_node(f, n->left.get(), path + "0", lv, viol)) return false;
    if (!check_node(f, n->right.get(), path + "1", rv, viol)) return false;
    // every left leaf strictly precedes every right leaf
    Vertex lmax = *std::max_element(lv.begin(), lv.end());
    Vertex rmin = *std::min_element(rv.begin(), rv.end());
    if (lmax >= rmin) {
        viol = TreeViolation{path, "left leaves do not precede right leaves",
                             VertexPair{lmax, rmin}};
        return false;
    }
    for (Vertex x : lv) {
        for (Vertex y : rv) {
            if (f.colour(x, y) != n->b) {
                viol = TreeViolation{path, "cross pair has the wrong colour",
                                     VertexPair{x, y}};
                return false;
            }
        }
    }
    out.reserve(lv.size() + rv.size());
    out.insert(out.end(), lv.begin(), lv.end());
    out.insert(out.end(), rv.begin(), rv.end());
    return true;
}

}  // namespace

std::optional<TreeViolation> verify_tree(const Colouring& f, const VsTree& tree) {
    if (!tree.root()) return TreeViolation{"", "empty tree", std::nullopt};
    std::optional<TreeViolation> viol;
    std::vector<Vertex> leaves;
    check_node(f, tree.root(), "", leaves, viol);
    return viol;
}

InvalidTree::InvalidTree(const TreeViolation& v)
    : std::runtime_error("invalid decomposition tree at node '" + v.path + "': " + v.reason),
      violation(v) {}

namespace {

struct DpEntry {
    std::uint32_t h[2] = {0, 0};
    std::vector<Vertex> wit[2];
};

DpEntry eh_dp(const VsTree::Node* n) {
    DpEntry e;
    if (n->is_leaf) {
        e.h[0] = e.h[1] = 1;
        e.wit[0] = e.wit[1] = {n->vertex};
        return e;
    }
    DpEntry l = eh_dp(n->left.get());
    DpEntry r = eh_dp(n->right.get());
    Bit b = n->b;
    e.h[b] = l.h[b] + r.h[b];
    e.wit[b] = l.wit[b];
    e.wit[b].insert(e.wit[b].end(), r.wit[b].begin(), r.wit[b].end());
    Bit o = static_cast<Bit>(1 - b);
    if (l.h[o] >= r.h[o]) {
        e.h[o] = l.h[o];
        e.wit[o] = l.wit[o];
    } else {
        e.h[o] = r.h[o];
        e.wit[o] = r.wit[o];
    }
    return e;
}

}  // namespace

EhResult eh_extract(const VsTree& tree, const Colouring& f) {
    if (auto v = verify_tree(f, tree)) throw InvalidTree(*v);
    DpEntry e = eh_dp(tree.root());
    EhResult r;
    r.h0 = e.h[0];
    r.h1 = e.h[1];
    auto& w = e.h[0] >= e.h[1] ? e.wit[0] : e.wit[1];
    std::sort(w.begin(), w.end());
    r.witness = IndexSet(std::move(w));
    return r;
}

namespace {

struct Builder {
    const Colouring& f;
    std::uint32_t k;
    std::uint32_t d;
    std::vector<GroupingTraceRow>* trace;
    std::optional<InsufficientStability> failure;

    // returns the tree for address sigma over the vertex set a, or nullopt
    // after recording failure
    std::optional<VsTree> build(const IndexSet& a, const std::string& sigma) {
        auto depth_left = static_cast<std::uint32_t>(d - sigma.size());
        if (depth_left == 0) {
            return VsTree::leaf(a[0]);
        }
        std::uint32_t c = 2 * depth_left;
        auto res = grouping(f, a, k, c);
        if (auto* fail = std::get_if<InsufficientStability>(&res)) {
            failure = *fail;
            failure->sigma = sigma;
            return std::nullopt;
        }
        auto& out = std::get<GroupingOutcome>(res);
        if (trace) {
            trace->push_back({sigma, out.window_start, out.stable_count, out.b});
        }
        auto left = build(out.a0, sigma + "0");
        if (!left) return std::nullopt;
        auto right = build(out.a1, sigma + "1");
        if (!right) return std::nullopt;
        return VsTree::join(out.b, std::move(*left), std::move(*right));
    }
};

}  // namespace

BuildResult build_very_simple(const Colouring& f, std::uint32_t k, std::uint32_t d,
                              std::vector<GroupingTraceRow>* trace) {
    if (d < 1) throw std::invalid_argument("build_very_simple: d must be >= 1");
    if (k < 2) throw std::invalid_argument("build_very_simple: k must be >= 2");
    std::uint64_t need = ipow(k, 2 * d);
    if (f.size() < need) {
        throw std::invalid_argument("build_very_simple: colouring needs >= k^(2d) = " +
                                    std::to_string(need) + " vertices");
    }
    IndexSet a0 = IndexSet::full(static_cast<Vertex>(need));
    Builder b{f, k, d, trace, std::nullopt};
    auto tree = b.build(a0, "");
    if (!tree) return *b.failure;
    VerySimpleResult r{tree->leaves(), std::move(*tree)};
    return BuildResult{std::move(r)};
}

ExtractResult extract_homogeneous(const Colouring& f, std::uint32_t k,
                                  std::uint64_t size_cap) {
    // grouping needs k^c > 5 k^(c-2), i.e. k^2 > 5, at every level
    if (k < 3) throw std::invalid_argument("extract_homogeneous: k must be >= 3");
    std::uint32_t d = 2 * ilog2(k);
    std::uint64_t need;
    try {
        need = ipow(k, 2 * d);
    } catch (const std::overflow_error&) {
        return SizeBudget{0, size_cap};
    }
    if (need > size_cap) return SizeBudget{need, size_cap};
    if (f.size() < need) {
        throw std::invalid_argument("extract_homogeneous: colouring needs >= k^(4 log k) = " +
                                    std::to_string(need) + " vertices");
    }
    auto built = build_very_simple(f, k, d);
    if (auto* fail = std::get_if<InsufficientStability>(&built)) return *fail;
    auto& vs = std::get<VerySimpleResult>(built);
    EhResult eh = eh_extract(vs.tree, f);
    return ExtractResult{std::move(eh.witness)};
}

}  // namespace ramsey
