#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

#include "ramsey/colouring.hpp"

namespace ramsey {

// Integer power with overflow check.
std::uint64_t ipow(std::uint64_t base, std::uint32_t exp);

// floor(log2 n), n >= 1
std::uint32_t ilog2(std::uint64_t n);

// Base colouring on [s] certified by the exact oracle to have no
// homogeneous set of size h.
struct BaseColouring {
    Colouring g;
    std::uint32_t s = 0;
    std::uint32_t h = 0;
    std::uint64_t seed = 0;
    std::uint64_t tries = 0;         // colourings sampled until success
    std::uint64_t oracle_nodes = 0;  // nodes spent certifying the winner
};

struct BaseNotFound : std::runtime_error {
    explicit BaseNotFound(const std::string& what) : std::runtime_error(what) {}
};

BaseColouring find_base_colouring(std::uint32_t s, std::uint32_t h,
                                  std::uint64_t max_tries, std::uint64_t seed);

struct SizeCapExceeded : std::runtime_error {
    explicit SizeCapExceeded(const std::string& what) : std::runtime_error(what) {}
};

// The s^t-vertex recursive product of the base colouring: a pair {x,y}
// gets the colour g(a,b) where a < b are the first differing base-s digits
// of x and y. At most (s*t)-unstable with no homogeneous set of size h^t.
Colouring build_product_colouring(const BaseColouring& base, std::uint32_t t,
                                  std::uint64_t size_cap = std::uint64_t{1} << 20);

// Re-derive one pair's colour straight from the digit arithmetic.
Bit product_colour(const BaseColouring& base, std::uint32_t t, Vertex x, Vertex y);

// Level (1-based) at which x and y first land in distinct subintervals.
std::uint32_t separation_level(std::uint32_t s, std::uint32_t t, Vertex x, Vertex y);

struct CertifiedBound {
    std::uint64_t ell = 0;   // h^t
    std::string transcript;  // machine-checkable induction, JSON-like text
};

// Replays the oracle check on the base and spells out the induction that
// lifts the bound h on [s] to h^t on [s^t]. Refuses bases the oracle cannot
// certify (e.g. monochromatic ones).
CertifiedBound certified_bound(const BaseColouring& base, std::uint32_t t);

struct ProductParams {
    std::uint64_t s = 0;
    std::uint64_t t = 0;
    std::uint64_t k = 0;         // s*t
    double log2_ell = 0;         // log2 (2 floor(log2 s))^t
    double log2_m = 0;           // log2 s^t
};

struct CorollaryCheck {
    std::uint64_t k = 0;
    std::uint64_t t = 0;  // round((log2 k)^0.95)
    std::uint64_t s = 0;  // round(k^0.9)
    bool st_le_k = false;
    bool ell_le_k = false;       // (2 log2 s)^t <= k
    bool m_ge_target = false;    // s^t >= k^{(log2 k)^0.9}
    bool all_ok() const { return st_le_k && ell_le_k && m_ge_target; }
    std::string failing() const;
};

struct InequalityFails : std::runtime_error {
    explicit InequalityFails(const CorollaryCheck& c);
    CorollaryCheck check;
};

// Non-throwing: evaluates the parameters and the three inequalities.
CorollaryCheck corollary_check(std::uint64_t k);

// Throws InequalityFails when any of the three checks fails (expected for
// small k).
ProductParams corollary_params(std::uint64_t k, std::uint64_t min_k = 4);

}  // namespace ramsey
