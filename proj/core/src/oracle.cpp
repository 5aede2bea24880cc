#include "ramsey/oracle.hpp"

#include <algorithm>
#include <chrono>
#include <numeric>

namespace ramsey {

namespace {

// Fixed-width bitset over the vertex range, one per graph instance.
class Bits {
public:
    explicit Bits(std::uint32_t n) : n_(n), w_((n + 63) / 64, 0) {}

    void set(std::uint32_t i) { w_[i >> 6] |= std::uint64_t{1} << (i & 63); }
    void reset(std::uint32_t i) { w_[i >> 6] &= ~(std::uint64_t{1} << (i & 63)); }
    bool test(std::uint32_t i) const { return (w_[i >> 6] >> (i & 63)) & 1u; }

    bool empty() const {
        for (auto w : w_)
            if (w) return false;
        return true;
    }

    std::uint32_t count() const {
        std::uint32_t c = 0;
        for (auto w : w_) c += static_cast<std::uint32_t>(__builtin_popcountll(w));
        return c;
    }

    int first() const {
        for (std::size_t i = 0; i < w_.size(); ++i) {
            if (w_[i]) return static_cast<int>(i * 64 + __builtin_ctzll(w_[i]));
        }
        return -1;
    }

    void and_with(const Bits& o) {
        for (std::size_t i = 0; i < w_.size(); ++i) w_[i] &= o.w_[i];
    }
    void and_not(const Bits& o) {
        for (std::size_t i = 0; i < w_.size(); ++i) w_[i] &= ~o.w_[i];
    }

    template <typename F>
    void for_each(F&& fn) const {
        for (std::size_t i = 0; i < w_.size(); ++i) {
            std::uint64_t w = w_[i];
            while (w) {
                fn(static_cast<std::uint32_t>(i * 64 + __builtin_ctzll(w)));
                w &= w - 1;
            }
        }
    }

private:
    std::uint32_t n_;
    std::vector<std::uint64_t> w_;
};

struct Searcher {
    std::uint32_t n;
    std::vector<Bits> adj;  // in search order
    std::vector<Vertex> label;  // search index -> original vertex

    std::uint32_t best_size = 0;
    std::vector<std::uint32_t> best;  // search indices
    std::vector<std::uint32_t> cur;

    std::uint64_t nodes = 0;
    std::uint64_t node_budget = UINT64_MAX;
    std::uint32_t target = UINT32_MAX;
    bool budget_hit = false;
    bool target_hit = false;

    bool stopping() const { return budget_hit || target_hit; }

    void record_if_better() {
        if (cur.size() > best_size) {
            best_size = static_cast<std::uint32_t>(cur.size());
            best = cur;
            if (best_size >= target) target_hit = true;
        }
    }

    // Greedy colouring of P; emits vertices grouped by colour class
    // (ascending), so scanning from the back gives the strongest bound first.
    void colour_sort(const Bits& p, std::vector<std::uint32_t>& order,
                     std::vector<std::uint32_t>& bound) {
        Bits rest = p;
        std::uint32_t colour = 0;
        while (!rest.empty()) {
            ++colour;
            Bits q = rest;
            while (!q.empty()) {
                auto v = static_cast<std::uint32_t>(q.first());
                order.push_back(v);
                bound.push_back(colour);
                rest.reset(v);
                q.reset(v);
                q.and_not(adj[v]);
            }
        }
    }

    void expand(const Bits& p) {
        if (++nodes > node_budget) {
            budget_hit = true;
            return;
        }
        std::vector<std::uint32_t> order, bound;
        colour_sort(p, order, bound);
        Bits rem = p;
        for (std::size_t i = order.size(); i-- > 0;) {
            if (stopping()) return;
            std::uint32_t v = order[i];
            if (cur.size() + bound[i] <= best_size) return;
            cur.push_back(v);
            Bits p2 = rem;
            p2.and_with(adj[v]);
            p2.reset(v);
            if (p2.empty()) {
                record_if_better();
            } else {
                expand(p2);
            }
            cur.pop_back();
            rem.reset(v);
        }
    }
};

std::vector<Vertex> degeneracy_order(std::uint32_t n, const std::vector<Bits>& adj) {
    std::vector<std::uint32_t> deg(n);
    std::vector<char> removed(n, 0);
    for (std::uint32_t v = 0; v < n; ++v) deg[v] = adj[v].count();
    std::vector<Vertex> order;
    order.reserve(n);
    for (std::uint32_t step = 0; step < n; ++step) {
        std::uint32_t best = UINT32_MAX, bv = 0;
        for (std::uint32_t v = 0; v < n; ++v) {
            if (!removed[v] && deg[v] < best) {
                best = deg[v];
                bv = v;
            }
        }
        removed[bv] = 1;
        order.push_back(bv);
        adj[bv].for_each([&](std::uint32_t u) {
            if (!removed[u]) --deg[u];
        });
    }
    // highest-core vertices first
    std::reverse(order.begin(), order.end());
    return order;
}

}  // namespace

MaxHomogeneousResult max_homogeneous(const Colouring& f, Bit b,
                                     const CliqueSearchConfig& cfg) {
    auto t0 = std::chrono::steady_clock::now();
    std::uint32_t n = f.size();

    std::vector<Bits> adj(n, Bits(n));
    for (Vertex i = 0; i + 1 < n; ++i) {
        for (Vertex j = i + 1; j < n; ++j) {
            if (f.colour(i, j) == b) {
                adj[i].set(j);
                adj[j].set(i);
            }
        }
    }

    auto order = degeneracy_order(n, adj);
    std::vector<std::uint32_t> pos(n);
    for (std::uint32_t i = 0; i < n; ++i) pos[order[i]] = i;

    Searcher s;
    s.n = n;
    s.label = order;
    s.adj.assign(n, Bits(n));
    for (std::uint32_t v = 0; v < n; ++v) {
        adj[v].for_each([&](std::uint32_t u) { s.adj[pos[v]].set(pos[u]); });
    }
    if (cfg.node_budget) s.node_budget = *cfg.node_budget;
    if (cfg.target) s.target = *cfg.target;

    Bits all(n);
    for (std::uint32_t v = 0; v < n; ++v) all.set(v);
    s.cur.clear();
    // a single vertex is always a (vacuously) homogeneous set
    s.best_size = n >= 1 ? 1 : 0;
    s.best = {0};
    if (s.best_size >= s.target) s.target_hit = true;
    if (n >= 2 && !s.stopping()) s.expand(all);

    MaxHomogeneousResult r;
    r.size = s.best_size;
    std::vector<Vertex> w;
    for (auto idx : s.best) w.push_back(s.label[idx]);
    std::sort(w.begin(), w.end());
    r.witness = IndexSet(std::move(w));
    r.exact = !s.budget_hit && !s.target_hit;
    r.target_reached = s.target_hit;
    r.nodes = s.nodes;
    r.elapsed_seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    return r;
}

SizeQueryResult has_homogeneous_of_size(const Colouring& f, std::uint32_t ell,
                                        const CliqueSearchConfig& cfg) {
    if (ell < 1 || ell > f.size()) {
        throw std::invalid_argument("has_homogeneous_of_size: need 1 <= ell <= m");
    }
    SizeQueryResult out;
    if (ell == 1) {
        out.kind = SizeQueryResult::Kind::Found;
        out.witness = IndexSet({0});
        return out;
    }
    auto t0 = std::chrono::steady_clock::now();
    bool inconclusive = false;
    for (Bit b : {Bit{0}, Bit{1}}) {
        CliqueSearchConfig c = cfg;
        c.target = ell;
        auto r = max_homogeneous(f, b, c);
        out.nodes += r.nodes;
        if (r.size >= ell) {
            out.kind = SizeQueryResult::Kind::Found;
            // trim to exactly ell elements
            std::vector<Vertex> w(r.witness.begin(), r.witness.begin() + ell);
            out.witness = IndexSet(std::move(w));
            return out;
        }
        if (!r.exact && !r.target_reached) inconclusive = true;
    }
    if (inconclusive) {
        out.kind = SizeQueryResult::Kind::Inconclusive;
        return out;
    }
    out.kind = SizeQueryResult::Kind::Refuted;
    OracleCertificate cert;
    cert.colouring_hash = f.hash();
    cert.claim = "no homogeneous set of size " + std::to_string(ell);
    cert.nodes = out.nodes;
    cert.elapsed_seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    out.certificate = cert;
    return out;
}

std::pair<std::uint32_t, std::uint32_t> exhaustive_max_homogeneous(const Colouring& f) {
    std::uint32_t m = f.size();
    if (m > 20) throw std::invalid_argument("exhaustive_max_homogeneous: m must be <= 20");

    std::vector<std::uint32_t> adj0(m, 0), adj1(m, 0);
    for (Vertex i = 0; i + 1 < m; ++i) {
        for (Vertex j = i + 1; j < m; ++j) {
            auto& a = f.colour(i, j) ? adj1 : adj0;
            a[i] |= 1u << j;
            a[j] |= 1u << i;
        }
    }

    std::uint32_t total = 1u << m;
    std::vector<char> cl0(total), cl1(total);
    cl0[0] = cl1[0] = 1;
    std::uint32_t best0 = 1, best1 = 1;  // singletons are vacuously homogeneous
    for (std::uint32_t s = 1; s < total; ++s) {
        std::uint32_t v = static_cast<std::uint32_t>(__builtin_ctz(s));
        std::uint32_t rest = s & (s - 1);
        cl0[s] = cl0[rest] && (adj0[v] & rest) == rest;
        cl1[s] = cl1[rest] && (adj1[v] & rest) == rest;
        auto pc = static_cast<std::uint32_t>(__builtin_popcount(s));
        if (cl0[s] && pc > best0) best0 = pc;
        if (cl1[s] && pc > best1) best1 = pc;
    }
    return {best0, best1};
}

}  // namespace ramsey
