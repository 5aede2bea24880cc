#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "ramsey/colouring.hpp"

namespace ramsey {

// Length of the longest maximal constant block; 0 for the empty sequence.
std::uint32_t longest_run(std::span<const Bit> s);

bool has_run(std::span<const Bit> s, std::uint32_t r);

// Exact probability that a uniform binary string of length j contains a
// run of length >= k+1, as favourable/2^j. Capped at j <= 30 so counts
// stay exact in 64 bits.
struct RunProbability {
    std::uint64_t favourable = 0;
    std::uint32_t length = 0;  // denominator is 2^length
    double value() const {
        return static_cast<double>(favourable) /
               static_cast<double>(std::uint64_t{1} << length);
    }
};

RunProbability exact_run_prob(std::uint32_t j, std::uint32_t k);

struct RunQuery {
    std::uint32_t j = 1;       // string length
    std::uint32_t k = 0;       // run threshold is k+1
    std::uint64_t trials = 1;
    std::uint64_t seed = 0;
};

struct Estimate {
    double p_hat = 0;
    double stderr_ = 0;        // sqrt(p_hat (1-p_hat) / trials)
    double analytic_bound = 0;
    std::optional<double> exact;
    std::uint64_t trials = 0;
};

// Pr(one string of length j has a run >= k+1); bound j/2^k.
Estimate estimate_event_prob(const RunQuery& q);

// Pr(all of j independent strings of length j have a run >= k+1);
// bound (j/2^k)^j.
Estimate estimate_joint_prob(const RunQuery& q);

// Pr(a run of length k+1 starts at position 0), exactly 2^-k; used to
// sanity-check the per-position ingredient of the union bound.
Estimate estimate_fixed_position_prob(const RunQuery& q);

// One row of the union-bound chain for the event E_j ("some 2j-subset C has
// all of its j row strings containing a (k+1)-run"), everything in log2.
struct EjRow {
    std::uint32_t j = 0;
    double log2_binom_exact = 0;   // log2 C(2^(k/4), 2j)
    double log2_binom_bound = 0;   // k*j/2
    double log2_per_c_bound = 0;   // j * log2(j/2^k)
    double log2_product = 0;       // binom bound + per-C bound
    double log2_quarter_bound = 0; // j * (-k/4), the chain's middle bound
};

struct EjEmpirical {
    std::uint32_t a_size = 0;  // ground-set size of the sampled colourings
    std::uint32_t j = 0;
    std::uint64_t trials = 0;
    double frequency = 0;      // fraction of colourings where some C realizes E_j
    double stderr_ = 0;
};

struct EjReport {
    std::uint32_t k = 0;
    double log2_final_bound = 0;  // -(k^2-k)/4
    std::vector<EjRow> rows;
    bool analytic_only = true;
    std::vector<EjEmpirical> empirical;
};

// Numeric evaluation of the three-union-bound chain for j in
// [k, min(j_max, 2^(k/4))]. When a_size in [2j, 20] is given, additionally
// samples random colourings on [a_size] and exhaustively tests every
// 2j-subset for the conjunction of run events.
EjReport ej_union_report(std::uint32_t k, std::uint32_t j_max, std::uint64_t trials,
                         std::uint64_t seed, std::uint32_t a_size = 0);

}  // namespace ramsey
