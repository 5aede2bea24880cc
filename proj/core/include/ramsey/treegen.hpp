#pragma once

#include <cstdint>
#include <utility>

#include "ramsey/colouring.hpp"
#include "ramsey/extract.hpp"
#include "ramsey/rng.hpp"

namespace ramsey {

// A random valid decomposition tree on the vertices 0..n-1 together with a
// colouring realizing it: every cross pair at a node gets that node's
// colour, which fixes every pair exactly once. Used by selftest and the
// test suites as a generator of (tree, colouring) instances.
struct RealizedTree {
    VsTree tree;
    Colouring f;
};

namespace detail {

inline VsTree random_subtree(const CounterRng& rng, std::uint64_t& ctr, Colouring& f,
                             Vertex lo, Vertex hi) {
    if (hi - lo == 1) return VsTree::leaf(lo);
    Vertex split = lo + 1 + static_cast<Vertex>(rng.below(ctr++, hi - lo - 1));
    Bit b = static_cast<Bit>(rng.word(ctr++) & 1);
    for (Vertex x = lo; x < split; ++x) {
        for (Vertex y = split; y < hi; ++y) f.set_colour(x, y, b);
    }
    VsTree left = random_subtree(rng, ctr, f, lo, split);
    VsTree right = random_subtree(rng, ctr, f, split, hi);
    return VsTree::join(b, std::move(left), std::move(right));
}

}  // namespace detail

inline RealizedTree random_realized_tree(Vertex n, std::uint64_t seed) {
    if (n < 1) throw std::invalid_argument("random_realized_tree: n must be >= 1");
    CounterRng rng(seed);
    std::uint64_t ctr = 0;
    Colouring f(n);
    VsTree t = detail::random_subtree(rng, ctr, f, 0, n);
    return RealizedTree{std::move(t), std::move(f)};
}

// A uniformly random colouring on [m], reproducible from the seed.
inline Colouring random_colouring(Vertex m, std::uint64_t seed) {
    CounterRng rng(seed);
    Colouring f(m);
    std::uint64_t p = 0;
    for (Vertex i = 0; i + 1 < m; ++i) {
        for (Vertex j = i + 1; j < m; ++j, ++p) {
            f.set_colour(i, j, static_cast<Bit>(rng.word(p) & 1));
        }
    }
    return f;
}

}  // namespace ramsey
