// Acceptance suite: exercises the desk-scale guarantees end to end and
// prints one pass/fail line per criterion.

#include <cmath>
#include <cstdio>
#include <string>
#include <vector>

#include "ramsey/colouring.hpp"
#include "ramsey/construct.hpp"
#include "ramsey/extract.hpp"
#include "ramsey/montecarlo.hpp"
#include "ramsey/oracle.hpp"
#include "ramsey/treegen.hpp"

using namespace ramsey;

namespace {

int g_failures = 0;

void report(const std::string& name, bool ok, const std::string& detail = "") {
    std::printf("%s: %s%s%s\n", ok ? "PASS" : "FAIL", name.c_str(),
                detail.empty() ? "" : " -- ", detail.c_str());
    if (!ok) ++g_failures;
}

Colouring constant_colouring(Vertex m, Bit b) {
    Colouring f(m);
    if (b) {
        for (Vertex i = 0; i + 1 < m; ++i) {
            for (Vertex j = i + 1; j < m; ++j) f.set_colour(i, j, 1);
        }
    }
    return f;
}

// 64-vertex desk instance: base on [8] without a homogeneous 6-set, squared.
void criterion_product_desk_instance() {
    bool ok = true;
    std::string detail;
    try {
        auto base = find_base_colouring(8, 6, 20000, 42);
        auto [e0, e1] = exhaustive_max_homogeneous(base.g);
        if (e0 >= 6 || e1 >= 6) {
            ok = false;
            detail = "base certification failed";
        }
        auto f = build_product_colouring(base, 2);
        if (f.size() != 64) ok = false;
        auto prof = unstability(f, IndexSet::full(64));
        if (prof.max_blocks > 16) {
            ok = false;
            detail = "max_blocks = " + std::to_string(prof.max_blocks);
        }
        auto q = has_homogeneous_of_size(f, 36);
        if (q.kind != SizeQueryResult::Kind::Refuted) {
            ok = false;
            detail = "oracle found (or could not refute) a 36-set";
        }
    } catch (const std::exception& e) {
        ok = false;
        detail = e.what();
    }
    report("product colouring s=8 h=6 t=2: 16-unstable, no homogeneous 36-set", ok,
           detail);
}

// address arithmetic and per-level block refinement over the full grid
void criterion_product_structure() {
    bool ok = true;
    std::string detail;
    try {
        for (std::uint32_t s : {4u, 8u}) {
            auto base = find_base_colouring(s, s == 4 ? 4 : 6, 20000, 7 + s);
            for (std::uint32_t t = 1; t <= 3; ++t) {
                if (ipow(s, t) > 4096) continue;
                auto f = build_product_colouring(base, t, 4096);
                for (Vertex x = 0; ok && x + 1 < f.size(); ++x) {
                    std::vector<std::vector<Bit>> per_level(t + 1);
                    for (Vertex y = x + 1; y < f.size(); ++y) {
                        if (f.colour(x, y) != product_colour(base, t, x, y)) {
                            ok = false;
                            detail = "address mismatch at s=" + std::to_string(s);
                            break;
                        }
                        per_level[separation_level(s, t, x, y)].push_back(f.colour(x, y));
                    }
                    for (std::uint32_t lvl = 1; ok && lvl <= t; ++lvl) {
                        if (block_count(per_level[lvl]) > s) {
                            ok = false;
                            detail = "per-level blocks exceed s";
                        }
                    }
                }
            }
        }
    } catch (const std::exception& e) {
        ok = false;
        detail = e.what();
    }
    report("product structure: address re-derivation exact, <= s blocks per level", ok,
           detail);
}

// 1000 random realized trees, three sizes
void criterion_eh_extraction() {
    bool ok = true;
    std::string detail;
    std::uint64_t seed = 0;
    try {
        for (Vertex n : {4u, 9u, 16u}) {
            for (int rep = 0; rep < 334 && ok; ++rep) {
                auto rt = random_realized_tree(n, 90000 + seed++);
                auto eh = eh_extract(rt.tree, rt.f);
                if (std::uint64_t{eh.h0} * eh.h1 < n) {
                    ok = false;
                    detail = "product bound violated";
                }
                if (!is_homogeneous(rt.f, eh.witness).ok()) {
                    ok = false;
                    detail = "witness not homogeneous";
                }
                auto [e0, e1] = exhaustive_max_homogeneous(rt.f);
                if (std::max(eh.h0, eh.h1) != std::max(e0, e1)) {
                    ok = false;
                    detail = "DP max differs from exhaustive max";
                }
            }
        }
    } catch (const std::exception& e) {
        ok = false;
        detail = e.what();
    }
    report("decomposition-tree extraction: h0*h1 >= n, witnesses exact (1000 trees)", ok,
           detail);
}

// every successful grouping outcome over 500 colourings is a sound rectangle
void criterion_grouping_soundness() {
    bool ok = true;
    std::string detail;
    std::size_t successes = 0;
    try {
        BaseColouring b4 = find_base_colouring(4, 4, 20000, 99);
        BaseColouring b8 = find_base_colouring(8, 6, 20000, 100);
        for (std::uint64_t i = 0; i < 500 && ok; ++i) {
            std::uint32_t k = 3 + i % 2;            // 3 or 4
            std::uint32_t c = 2 + (i / 2) % 2;      // 2 or 3
            auto m = static_cast<Vertex>(ipow(k, c));
            Colouring f(1);
            switch (i % 5) {
                case 0: f = constant_colouring(m, 0); break;
                case 1: f = constant_colouring(m, 1); break;
                case 2: f = restrict_colouring(build_product_colouring(b4, 3),
                                               IndexSet::full(m)).g; break;
                case 3: f = restrict_colouring(build_product_colouring(b8, 2),
                                               IndexSet::full(m)).g; break;
                default: f = random_colouring(m, 40000 + i); break;
            }
            auto res = grouping(f, IndexSet::full(m), k, c);
            auto* out = std::get_if<GroupingOutcome>(&res);
            if (!out) continue;  // failures are reported, not counted
            ++successes;
            std::uint64_t w = ipow(k, c - 2);
            if (out->a0.size() != w || out->a1.size() != w ||
                out->a0.back() >= out->a1.front()) {
                ok = false;
                detail = "size or ordering check failed";
                break;
            }
            for (Vertex x : out->a0) {
                for (Vertex y : out->a1) {
                    if (f.colour(x, y) != out->b) {
                        ok = false;
                        detail = "rectangle not constant";
                    }
                }
            }
        }
        if (ok && successes == 0) {
            ok = false;
            detail = "no grouping ever succeeded";
        }
    } catch (const std::exception& e) {
        ok = false;
        detail = e.what();
    }
    report("grouping soundness over 500 colourings (" + std::to_string(successes) +
               " successes verified)",
           ok, detail);
}

// reduced-depth pipeline on constant and adversarial inputs
void criterion_pipeline_reduced_depth() {
    bool ok = true;
    std::string detail;
    try {
        for (std::uint32_t d : {1u, 2u, 3u}) {
            auto m = static_cast<Vertex>(ipow(3, 2 * d));
            auto f = constant_colouring(m, 1);
            auto res = build_very_simple(f, 3, d);
            auto* vs = std::get_if<VerySimpleResult>(&res);
            if (!vs) {
                ok = false;
                detail = "pipeline failed on constant colouring, d=" + std::to_string(d);
                break;
            }
            if (vs->vertices.size() != (std::size_t{1} << d)) {
                ok = false;
                detail = "wrong selection size";
            }
            if (verify_tree(f, vs->tree).has_value()) {
                ok = false;
                detail = "tree verification failed";
            }
            auto eh = eh_extract(vs->tree, f);
            std::size_t want = std::size_t{1} << ((d + 1) / 2);
            if (eh.witness.size() < want) {
                ok = false;
                detail = "witness below 2^ceil(d/2)";
            }
        }
        // adversarial product colourings of matching sizes 9, 81, 729:
        // success must verify, failure must name the address
        auto base9 = find_base_colouring(9, 6, 20000, 4242);
        for (std::uint32_t d : {1u, 2u, 3u}) {
            auto f = build_product_colouring(base9, d);
            auto res = build_very_simple(f, 3, d);
            if (auto* vs = std::get_if<VerySimpleResult>(&res)) {
                if (verify_tree(f, vs->tree).has_value()) {
                    ok = false;
                    detail = "adversarial success did not verify";
                }
                auto eh = eh_extract(vs->tree, f);
                if (!is_homogeneous(f, eh.witness).ok()) {
                    ok = false;
                    detail = "adversarial witness not homogeneous";
                }
            } else {
                auto& fail = std::get<InsufficientStability>(res);
                for (char ch : fail.sigma) {
                    if (ch != '0' && ch != '1') {
                        ok = false;
                        detail = "failure address malformed";
                    }
                }
            }
        }
    } catch (const std::exception& e) {
        ok = false;
        detail = e.what();
    }
    report("reduced-depth pipeline k=3, d in {1,2,3}: verified success or named failure",
           ok, detail);
}

void criterion_probabilistic_kernel() {
    bool ok = true;
    std::string detail;
    try {
        // exact union bound, rational arithmetic
        for (std::uint32_t j = 2; j <= 20 && ok; ++j) {
            for (std::uint32_t k = 1; k < j; ++k) {
                auto p = exact_run_prob(j, k);
                auto lhs = static_cast<unsigned __int128>(p.favourable) << k;
                auto rhs = static_cast<unsigned __int128>(j) << j;
                if (lhs >= rhs) {
                    ok = false;
                    detail = "exact_run_prob >= j/2^k";
                }
            }
        }
        // Monte Carlo within 5 standard errors of exact
        for (std::uint32_t j : {4u, 8u, 16u}) {
            for (std::uint32_t k : {1u, 2u, 4u}) {
                RunQuery q{j, k, 100000, 1000u + j * 10 + k};
                auto e = estimate_event_prob(q);
                double se = std::sqrt(*e.exact * (1 - *e.exact) / q.trials);
                if (std::abs(e.p_hat - *e.exact) > 5 * se) {
                    ok = false;
                    detail = "estimate off at j=" + std::to_string(j) +
                             " k=" + std::to_string(k);
                }
            }
        }
        // fixed-position frequency vs 2^-k
        for (std::uint32_t k : {1u, 2u, 4u}) {
            RunQuery q{16, k, 100000, 555u + k};
            auto e = estimate_fixed_position_prob(q);
            double p = std::ldexp(1.0, -static_cast<int>(k));
            double se = std::sqrt(p * (1 - p) / q.trials);
            if (std::abs(e.p_hat - p) > 5 * se) {
                ok = false;
                detail = "fixed-position frequency off at k=" + std::to_string(k);
            }
        }
        // the union-bound chain, numerically, for k in {8,16,32}
        for (std::uint32_t k : {8u, 16u, 32u}) {
            auto rep = ej_union_report(k, 64, 0, 0);
            double want_final = -(static_cast<double>(k) * k - k) / 4.0;
            if (std::abs(rep.log2_final_bound - want_final) > 1e-9) {
                ok = false;
                detail = "final bound mismatch";
            }
            for (const auto& row : rep.rows) {
                double want_binom = static_cast<double>(k) * row.j / 2.0;
                if (std::abs(row.log2_binom_bound - want_binom) > 1e-9 ||
                    row.log2_binom_exact > row.log2_binom_bound + 1e-9 ||
                    row.log2_product > row.log2_quarter_bound + 1e-9) {
                    ok = false;
                    detail = "chain inequality failed at k=" + std::to_string(k) +
                             " j=" + std::to_string(row.j);
                }
            }
        }
        // tiny empirical mode stays below the per-j bound
        auto tiny = ej_union_report(4, 4, 60, 77, 16);
        if (tiny.empirical.empty()) {
            ok = false;
            detail = "tiny empirical mode produced no rows";
        } else {
            const auto& emp = tiny.empirical.front();
            double bound = std::min(1.0, std::pow(2.0, tiny.rows.front().log2_product));
            if (emp.frequency > bound + 5 * emp.stderr_ + 1e-12) {
                ok = false;
                detail = "empirical frequency above analytic bound";
            }
        }
    } catch (const std::exception& e) {
        ok = false;
        detail = e.what();
    }
    report("run-statistics kernel: exact bounds, MC within 5 sigma, union-bound chain",
           ok, detail);
}

void criterion_oracle_cross_validation() {
    bool ok = true;
    std::string detail;
    try {
        for (std::uint64_t seed = 0; seed < 1000 && ok; ++seed) {
            Vertex m = 1 + seed % 12;
            auto f = random_colouring(m, 70000 + seed);
            auto [e0, e1] = exhaustive_max_homogeneous(f);
            if (max_homogeneous(f, 0).size != e0 || max_homogeneous(f, 1).size != e1) {
                ok = false;
                detail = "branch-and-bound disagrees with exhaustive scan";
            }
            auto [c0, c1] = exhaustive_max_homogeneous(f.complement());
            if (c0 != e1 || c1 != e0) {
                ok = false;
                detail = "complement symmetry violated";
            }
        }
    } catch (const std::exception& e) {
        ok = false;
        detail = e.what();
    }
    report("oracle cross-validation on 1000 random colourings, m <= 12", ok, detail);
}

void criterion_size_budget() {
    bool ok = true;
    std::string detail;
    try {
        auto res = extract_homogeneous(constant_colouring(8, 0), 8);
        auto* budget = std::get_if<SizeBudget>(&res);
        if (!budget) {
            ok = false;
            detail = "expected SizeBudget for k=8";
        } else if (budget->required != ipow(8, 12)) {
            ok = false;
            detail = "wrong required size";
        }
    } catch (const std::exception& e) {
        ok = false;
        detail = e.what();
    }
    report("full-scale sizes out of reach: SizeBudget path for k=8", ok, detail);
}

}  // namespace

int main() {
    criterion_product_desk_instance();
    criterion_product_structure();
    criterion_eh_extraction();
    criterion_grouping_soundness();
    criterion_pipeline_reduced_depth();
    criterion_probabilistic_kernel();
    criterion_oracle_cross_validation();
    criterion_size_budget();
    std::printf("%s (%d failure%s)\n", g_failures ? "ACCEPTANCE FAILED" : "ACCEPTANCE OK",
                g_failures, g_failures == 1 ? "" : "s");
    return g_failures ? 1 : 0;
}
