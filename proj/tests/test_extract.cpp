#include <doctest.h>

#include "ramsey/construct.hpp"
#include "ramsey/extract.hpp"
#include "ramsey/oracle.hpp"
#include "ramsey/treegen.hpp"

using namespace ramsey;

namespace {

Colouring constant_colouring(Vertex m, Bit b) {
    Colouring f(m);
    if (b) {
        for (Vertex i = 0; i + 1 < m; ++i) {
            for (Vertex j = i + 1; j < m; ++j) f.set_colour(i, j, 1);
        }
    }
    return f;
}

void check_outcome(const Colouring& f, const GroupingOutcome& out, std::uint32_t k,
                   std::uint32_t c) {
    std::uint64_t w = ipow(k, c - 2);
    REQUIRE(out.a0.size() == w);
    REQUIRE(out.a1.size() == w);
    REQUIRE(out.a0.back() < out.a1.front());
    for (Vertex x : out.a0) {
        for (Vertex y : out.a1) REQUIRE(f.colour(x, y) == out.b);
    }
}

// independent stability check: the row restricted to the window has at most
// one block
bool stable_by_block_count(const Colouring& f, Vertex x, const std::vector<Vertex>& a1p,
                           std::size_t start, std::size_t w) {
    std::vector<Bit> row;
    for (std::size_t p = start; p < start + w; ++p) row.push_back(f.colour(x, a1p[p]));
    return block_count(row) <= 1;
}

}  // namespace

TEST_CASE("grouping on a constant colouring") {
    auto f = constant_colouring(64, 1);
    auto res = grouping(f, IndexSet::full(64), 4, 3);
    auto& out = std::get<GroupingOutcome>(res);
    CHECK(out.b == 1);
    CHECK(out.stable_count == 16);  // all of A0'
    CHECK(out.window_start == 0);   // ties break to the smallest start
    check_outcome(f, out, 4, 3);
}

TEST_CASE("grouping with singleton windows (c = 2)") {
    auto f = random_colouring(9, 17);
    auto res = grouping(f, IndexSet::full(9), 3, 2);
    auto& out = std::get<GroupingOutcome>(res);
    CHECK(out.a0.size() == 1);
    CHECK(out.a1.size() == 1);
    check_outcome(f, out, 3, 2);
}

TEST_CASE("grouping fails on a fully alternating colouring") {
    // f(x,y) = y mod 2: every row changes value at every step, so no row is
    // stable on any window of length >= 2
    Colouring f(64);
    for (Vertex i = 0; i + 1 < 64; ++i) {
        for (Vertex j = i + 1; j < 64; ++j) f.set_colour(i, j, j % 2);
    }
    auto res = grouping(f, IndexSet::full(64), 4, 3);
    auto& fail = std::get<InsufficientStability>(res);
    CHECK(fail.best_stable_count == 0);
}

TEST_CASE("grouping preconditions") {
    auto f = random_colouring(10, 3);
    CHECK_THROWS_AS(grouping(f, IndexSet::full(9), 3, 1), std::invalid_argument);
    CHECK_THROWS_AS(grouping(f, IndexSet::full(10), 3, 2), std::invalid_argument);
    // k = 2, c = 2: k^c = 4 <= 5*k^0
    CHECK_THROWS_AS(grouping(f, IndexSet::full(4), 2, 2), std::invalid_argument);
}

TEST_CASE("grouping outcomes on product colourings are sound") {
    auto base = find_base_colouring(4, 4, 1000, 5);
    auto f = build_product_colouring(base, 3);  // 64 vertices
    auto res = grouping(f, IndexSet::full(64), 4, 3);
    if (auto* out = std::get_if<GroupingOutcome>(&res)) {
        check_outcome(f, *out, 4, 3);
    } else {
        CHECK(std::get<InsufficientStability>(res).best_stable_count < 32);
    }
}

TEST_CASE("grouping is deterministic") {
    auto f = random_colouring(81, 77);
    auto r1 = grouping(f, IndexSet::full(81), 3, 4);
    auto r2 = grouping(f, IndexSet::full(81), 3, 4);
    REQUIRE(r1.index() == r2.index());
    if (auto* o1 = std::get_if<GroupingOutcome>(&r1)) {
        auto& o2 = std::get<GroupingOutcome>(r2);
        CHECK(o1->a0 == o2.a0);
        CHECK(o1->a1 == o2.a1);
        CHECK(o1->b == o2.b);
        CHECK(o1->window_start == o2.window_start);
    }
}

TEST_CASE("window stability equals the block-count formulation") {
    auto f = random_colouring(32, 41);
    auto a = IndexSet::full(32);
    std::size_t rows = 8, w = 3;
    std::vector<Vertex> a1p(a.begin() + rows, a.end());
    for (std::size_t start = 0; start + w <= a1p.size(); ++start) {
        for (std::size_t r = 0; r < rows; ++r) {
            bool by_scan = true;
            Bit first = f.colour(a[r], a1p[start]);
            for (std::size_t p = start + 1; p < start + w; ++p) {
                if (f.colour(a[r], a1p[p]) != first) by_scan = false;
            }
            REQUIRE(by_scan == stable_by_block_count(f, a[r], a1p, start, w));
        }
    }
}

TEST_CASE("verify_tree") {
    Colouring f(4);
    f.set_colour(0, 1, 1);

    CHECK_FALSE(verify_tree(f, VsTree::leaf(2)).has_value());

    auto bad = VsTree::join(0, VsTree::leaf(0), VsTree::leaf(1));
    auto v = verify_tree(f, bad);
    REQUIRE(v.has_value());
    CHECK(v->path == "");
    REQUIRE(v->pair.has_value());

    auto good = VsTree::join(1, VsTree::leaf(0), VsTree::leaf(1));
    CHECK_FALSE(verify_tree(f, good).has_value());

    // ordering violation: right leaves must come after left leaves
    auto misordered = VsTree::join(0, VsTree::leaf(3), VsTree::leaf(2));
    CHECK(verify_tree(f, misordered).has_value());
}

TEST_CASE("eh_extract basics") {
    Colouring f(1);
    auto r = eh_extract(VsTree::leaf(0), f);
    CHECK(r.h0 == 1);
    CHECK(r.h1 == 1);
    CHECK(r.witness.size() == 1);

    // complete 0-join of 4 leaves: the whole leaf set is homogeneous
    auto z = constant_colouring(4, 0);
    auto t = VsTree::join(0, VsTree::join(0, VsTree::leaf(0), VsTree::leaf(1)),
                          VsTree::join(0, VsTree::leaf(2), VsTree::leaf(3)));
    auto rr = eh_extract(t, z);
    CHECK(rr.h0 == 4);
    CHECK(rr.witness.size() == 4);

    // invalid tree is rejected
    Colouring g(2);
    g.set_colour(0, 1, 1);
    CHECK_THROWS_AS(eh_extract(VsTree::join(0, VsTree::leaf(0), VsTree::leaf(1)), g),
                    InvalidTree);
}

TEST_CASE("eh_extract on random realized trees: product bound and exact maxima") {
    for (std::uint64_t seed = 0; seed < 1000; ++seed) {
        Vertex n = 16;
        auto rt = random_realized_tree(n, 52000 + seed);
        REQUIRE_FALSE(verify_tree(rt.f, rt.tree).has_value());
        auto r = eh_extract(rt.tree, rt.f);
        REQUIRE(std::uint64_t{r.h0} * r.h1 >= n);
        REQUIRE(is_homogeneous(rt.f, r.witness).ok());
        REQUIRE(r.witness.size() == std::max(r.h0, r.h1));
        auto [e0, e1] = exhaustive_max_homogeneous(rt.f);
        REQUIRE(r.h0 == e0);
        REQUIRE(r.h1 == e1);
    }
}

TEST_CASE("build_very_simple on constant colourings") {
    for (std::uint32_t d : {1u, 2u}) {
        auto f = constant_colouring(static_cast<Vertex>(ipow(3, 2 * d)), 0);
        auto res = build_very_simple(f, 3, d);
        auto& vs = std::get<VerySimpleResult>(res);
        CHECK(vs.vertices.size() == (std::size_t{1} << d));
        CHECK_FALSE(verify_tree(f, vs.tree).has_value());
        auto eh = eh_extract(vs.tree, f);
        CHECK(eh.h0 == (1u << d));  // the whole selection is 0-homogeneous
    }
}

TEST_CASE("build_very_simple failure names the failing address") {
    Colouring f(81);
    for (Vertex i = 0; i + 1 < 81; ++i) {
        for (Vertex j = i + 1; j < 81; ++j) f.set_colour(i, j, j % 2);
    }
    auto res = build_very_simple(f, 3, 2);
    auto& fail = std::get<InsufficientStability>(res);
    CHECK(fail.sigma == "");  // alternation kills the very first grouping
}

TEST_CASE("extract_homogeneous") {
    // k = 3: d = 2, needs 3^4 = 81 vertices
    auto f = constant_colouring(81, 0);
    auto res = extract_homogeneous(f, 3);
    auto& h = std::get<IndexSet>(res);
    CHECK(h.size() >= 2);  // 2^(d/2)
    CHECK(is_homogeneous(f, h).ok());

    // k = 8: d = 6, needs 8^12 vertices -- far beyond the cap
    auto res8 = extract_homogeneous(constant_colouring(4, 0), 8);
    auto& budget = std::get<SizeBudget>(res8);
    CHECK(budget.required == ipow(8, 12));

    // k = 2 can never satisfy the grouping width requirement k^2 > 5
    CHECK_THROWS_AS(extract_homogeneous(constant_colouring(16, 0), 2),
                    std::invalid_argument);
    // colouring too small for k^(4 log k)
    CHECK_THROWS_AS(extract_homogeneous(constant_colouring(4, 0), 3),
                    std::invalid_argument);
}

TEST_CASE("grouping trace rows are recorded per address") {
    auto f = constant_colouring(81, 1);
    std::vector<GroupingTraceRow> trace;
    auto res = build_very_simple(f, 3, 2, &trace);
    REQUIRE(std::holds_alternative<VerySimpleResult>(res));
    REQUIRE(trace.size() == 3);  // sigma = "", "0", "1"
    CHECK(trace[0].sigma == "");
    for (const auto& row : trace) CHECK(row.b == 1);
}
