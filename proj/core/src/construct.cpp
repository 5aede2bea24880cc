#include "ramsey/construct.hpp"

#include <cmath>
#include <limits>
#include <sstream>

#include "ramsey/oracle.hpp"
#include "ramsey/rng.hpp"

namespace ramsey {

std::uint64_t ipow(std::uint64_t base, std::uint32_t exp) {
    std::uint64_t r = 1;
    for (std::uint32_t i = 0; i < exp; ++i) {
        if (base != 0 && r > std::numeric_limits<std::uint64_t>::max() / base) {
            throw std::overflow_error("ipow overflow");
        }
        r *= base;
    }
    return r;
}

std::uint32_t ilog2(std::uint64_t n) {
    if (n == 0) throw std::invalid_argument("ilog2(0)");
    return 63 - static_cast<std::uint32_t>(__builtin_clzll(n));
}

BaseColouring find_base_colouring(std::uint32_t s, std::uint32_t h,
                                  std::uint64_t max_tries, std::uint64_t seed) {
    if (s < 4) throw std::invalid_argument("find_base_colouring: s must be >= 4");
    if (h < 3) throw std::invalid_argument("find_base_colouring: h must be >= 3");
    if (h > s) throw std::invalid_argument("find_base_colouring: h must be <= s");

    CounterRng rng(seed);
    std::uint64_t pairs = std::uint64_t{s} * (s - 1) / 2;
    std::uint64_t ctr = 0;
    for (std::uint64_t attempt = 0; attempt < max_tries; ++attempt) {
        Colouring g(s);
        std::uint64_t p = 0;
        for (Vertex i = 0; i + 1 < s; ++i) {
            for (Vertex j = i + 1; j < s; ++j, ++p) {
                g.set_colour(i, j, static_cast<Bit>(rng.word(ctr + p) & 1));
            }
        }
        ctr += pairs;
        auto q = has_homogeneous_of_size(g, h);
        if (q.kind == SizeQueryResult::Kind::Refuted) {
            BaseColouring b{std::move(g), s, h, seed, attempt + 1, q.nodes};
            return b;
        }
    }
    throw BaseNotFound("no colouring of [" + std::to_string(s) +
                       "] without a homogeneous " + std::to_string(h) + "-set in " +
                       std::to_string(max_tries) + " tries");
}

std::uint32_t separation_level(std::uint32_t s, std::uint32_t t, Vertex x, Vertex y) {
    if (x == y) throw std::invalid_argument("separation_level: x != y required");
    // digits of x and y in base s, most significant first
    for (std::uint32_t lvl = 1; lvl <= t; ++lvl) {
        std::uint64_t div = ipow(s, t - lvl);
        if (x / div != y / div) return lvl;
    }
    throw std::logic_error("separation_level: identical digit strings");
}

Bit product_colour(const BaseColouring& base, std::uint32_t t, Vertex x, Vertex y) {
    std::uint32_t s = base.s;
    std::uint32_t lvl = separation_level(s, t, x, y);
    std::uint64_t div = ipow(s, t - lvl);
    auto a = static_cast<std::uint32_t>((x / div) % s);
    auto b = static_cast<std::uint32_t>((y / div) % s);
    return base.g.colour(a, b);
}

Colouring build_product_colouring(const BaseColouring& base, std::uint32_t t,
                                  std::uint64_t size_cap) {
    if (t < 1) throw std::invalid_argument("build_product_colouring: t must be >= 1");
    std::uint64_t m = ipow(base.s, t);
    if (m > size_cap) {
        throw SizeCapExceeded("s^t = " + std::to_string(m) + " exceeds cap " +
                              std::to_string(size_cap));
    }
    Colouring f(static_cast<Vertex>(m));
    // Walk levels coarse to fine; every pair is coloured exactly once, at
    // the level where its endpoints first separate.
    std::vector<std::uint64_t> scaled(t + 1);
    for (std::uint32_t lvl = 0; lvl <= t; ++lvl) scaled[lvl] = ipow(base.s, t - lvl);
    for (Vertex x = 0; x + 1 < m; ++x) {
        for (Vertex y = x + 1; y < m; ++y) {
            std::uint32_t lvl = 1;
            while (x / scaled[lvl] == y / scaled[lvl]) ++lvl;
            auto a = static_cast<std::uint32_t>((x / scaled[lvl]) % base.s);
            auto b = static_cast<std::uint32_t>((y / scaled[lvl]) % base.s);
            f.set_colour(x, y, base.g.colour(a, b));
        }
    }
    return f;
}

CertifiedBound certified_bound(const BaseColouring& base, std::uint32_t t) {
    auto q = has_homogeneous_of_size(base.g, base.h);
    if (q.kind != SizeQueryResult::Kind::Refuted) {
        throw std::invalid_argument(
            "certified_bound: base has a homogeneous set of size " +
            std::to_string(base.h) + "; certification refused");
    }
    CertifiedBound out;
    out.ell = ipow(base.h, t);
    std::ostringstream tr;
    tr << "{\n";
    tr << "  \"base\": {\"s\": " << base.s << ", \"h\": " << base.h
       << ", \"colouring_hash\": " << q.certificate->colouring_hash
       << ", \"oracle_nodes\": " << q.certificate->nodes
       << ", \"claim\": \"" << q.certificate->claim << "\"},\n";
    tr << "  \"levels\": [\n";
    for (std::uint32_t i = 1; i <= t; ++i) {
        std::uint64_t bound = ipow(base.h, i);
        tr << "    {\"i\": " << i << ", \"interval_length\": " << ipow(base.s, i)
           << ", \"bound\": " << bound;
        if (i == 1) {
            tr << ", \"reason\": \"oracle certificate on the base colouring\"}";
        } else {
            tr << ", \"reason\": \"a homogeneous set meets fewer than " << base.h
               << " of the " << base.s
               << " subintervals, each contributing fewer than " << ipow(base.h, i - 1)
               << " elements\"}";
        }
        tr << (i == t ? "\n" : ",\n");
    }
    tr << "  ],\n";
    tr << "  \"ell\": " << out.ell << "\n";
    tr << "}\n";
    out.transcript = tr.str();
    return out;
}

std::string CorollaryCheck::failing() const {
    std::string out;
    if (!st_le_k) out += "s*t <= k; ";
    if (!ell_le_k) out += "(2 log s)^t <= k; ";
    if (!m_ge_target) out += "s^t >= k^((log k)^0.9); ";
    if (!out.empty()) out.resize(out.size() - 2);
    return out;
}

InequalityFails::InequalityFails(const CorollaryCheck& c)
    : std::runtime_error("corollary parameter check failed for k=" + std::to_string(c.k) +
                         ": " + c.failing()),
      check(c) {}

CorollaryCheck corollary_check(std::uint64_t k) {
    if (k < 2) throw std::invalid_argument("corollary_check: k must be >= 2");
    CorollaryCheck c;
    c.k = k;
    double lg_k = std::log2(static_cast<double>(k));
    c.t = static_cast<std::uint64_t>(std::llround(std::pow(lg_k, 0.95)));
    c.s = static_cast<std::uint64_t>(std::llround(std::pow(static_cast<double>(k), 0.9)));
    if (c.t < 1 || c.s < 2) return c;  // all three checks stay false

    c.st_le_k = c.s <= k / c.t && c.s * c.t <= k;

    std::uint64_t lg_s = ilog2(c.s);
    // compare in log2 space; sizes are far beyond 64 bits for interesting k
    double log2_ell = static_cast<double>(c.t) * std::log2(2.0 * static_cast<double>(lg_s));
    c.ell_le_k = log2_ell <= lg_k;

    double log2_m = static_cast<double>(c.t) * std::log2(static_cast<double>(c.s));
    double log2_target = std::pow(lg_k, 0.9) * lg_k;
    c.m_ge_target = log2_m >= log2_target;
    return c;
}

ProductParams corollary_params(std::uint64_t k, std::uint64_t min_k) {
    if (k < min_k) {
        throw std::invalid_argument("corollary_params: k below configured minimum " +
                                    std::to_string(min_k));
    }
    CorollaryCheck c = corollary_check(k);
    if (!c.all_ok()) throw InequalityFails(c);
    ProductParams p;
    p.s = c.s;
    p.t = c.t;
    p.k = c.s * c.t;
    p.log2_ell = static_cast<double>(c.t) * std::log2(2.0 * static_cast<double>(ilog2(c.s)));
    p.log2_m = static_cast<double>(c.t) * std::log2(static_cast<double>(c.s));
    return p;
}

}  // namespace ramsey
