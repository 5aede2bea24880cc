#include "ramsey/montecarlo.hpp"

#include <cmath>
#include <limits>
#include <numeric>
#include <stdexcept>

#include "ramsey/rng.hpp"

namespace ramsey {

std::uint32_t longest_run(std::span<const Bit> s) {
    if (s.empty()) return 0;
    std::uint32_t best = 1, cur = 1;
    for (std::size_t i = 1; i < s.size(); ++i) {
        cur = (s[i] == s[i - 1]) ? cur + 1 : 1;
        best = std::max(best, cur);
    }
    return best;
}

bool has_run(std::span<const Bit> s, std::uint32_t r) {
    if (r < 1) throw std::invalid_argument("has_run: r must be >= 1");
    return longest_run(s) >= r;
}

RunProbability exact_run_prob(std::uint32_t j, std::uint32_t k) {
    if (j < 1 || j > 30) throw std::invalid_argument("exact_run_prob: need 1 <= j <= 30");
    RunProbability out;
    out.length = j;
    if (k >= j) {
        out.favourable = 0;  // a run of length k+1 > j cannot fit
        return out;
    }
    if (k == 0) {
        out.favourable = std::uint64_t{1} << j;  // any symbol is a run of 1
        return out;
    }
    // count strings whose runs all have length <= k, by length of the
    // current final run (symbol-symmetric)
    std::vector<std::uint64_t> cnt(k + 1, 0);
    cnt[1] = 2;
    for (std::uint32_t pos = 2; pos <= j; ++pos) {
        std::vector<std::uint64_t> nxt(k + 1, 0);
        std::uint64_t total = std::accumulate(cnt.begin(), cnt.end(), std::uint64_t{0});
        nxt[1] = total;  // switch symbol
        for (std::uint32_t r = 1; r < k; ++r) nxt[r + 1] = cnt[r];
        cnt = std::move(nxt);
    }
    std::uint64_t no_long_run = std::accumulate(cnt.begin(), cnt.end(), std::uint64_t{0});
    out.favourable = (std::uint64_t{1} << j) - no_long_run;
    return out;
}

namespace {

void validate(const RunQuery& q) {
    if (q.j < 1 || q.trials < 1) {
        throw std::invalid_argument("RunQuery: need j >= 1 and trials >= 1");
    }
}

double binom_stderr(double p, std::uint64_t n) {
    return std::sqrt(p * (1.0 - p) / static_cast<double>(n));
}

// bits of one sampled string; base_counter advances by words_per_string
std::vector<Bit> sample_string(const CounterRng& rng, std::uint64_t base_counter,
                               std::uint32_t j) {
    std::vector<Bit> s(j);
    for (std::uint32_t i = 0; i < j; ++i) {
        std::uint64_t w = rng.word(base_counter + i / 64);
        s[i] = static_cast<Bit>((w >> (i & 63)) & 1);
    }
    return s;
}

std::uint64_t words_per_string(std::uint32_t j) { return (j + 63) / 64; }

}  // namespace

Estimate estimate_event_prob(const RunQuery& q) {
    validate(q);
    CounterRng rng(q.seed);
    std::uint64_t wps = words_per_string(q.j);
    std::uint64_t hits = 0;
    for (std::uint64_t t = 0; t < q.trials; ++t) {
        auto s = sample_string(rng, t * wps, q.j);
        if (has_run(s, q.k + 1)) ++hits;
    }
    Estimate e;
    e.trials = q.trials;
    e.p_hat = static_cast<double>(hits) / static_cast<double>(q.trials);
    e.stderr_ = binom_stderr(e.p_hat, q.trials);
    e.analytic_bound = std::min(1.0, std::ldexp(static_cast<double>(q.j),
                                                -static_cast<int>(q.k)));
    if (q.j <= 30) e.exact = exact_run_prob(q.j, q.k).value();
    return e;
}

Estimate estimate_joint_prob(const RunQuery& q) {
    validate(q);
    CounterRng rng(q.seed);
    std::uint64_t wps = words_per_string(q.j);
    std::uint64_t per_trial = wps * q.j;  // j strings per trial
    std::uint64_t hits = 0;
    for (std::uint64_t t = 0; t < q.trials; ++t) {
        bool all = true;
        for (std::uint32_t i = 0; i < q.j && all; ++i) {
            auto s = sample_string(rng, t * per_trial + i * wps, q.j);
            all = has_run(s, q.k + 1);
        }
        if (all) ++hits;
    }
    Estimate e;
    e.trials = q.trials;
    e.p_hat = static_cast<double>(hits) / static_cast<double>(q.trials);
    e.stderr_ = binom_stderr(e.p_hat, q.trials);
    double single = std::ldexp(static_cast<double>(q.j), -static_cast<int>(q.k));
    e.analytic_bound = std::min(1.0, std::pow(single, q.j));
    if (q.j <= 30) {
        e.exact = std::pow(exact_run_prob(q.j, q.k).value(), q.j);
    }
    return e;
}

Estimate estimate_fixed_position_prob(const RunQuery& q) {
    validate(q);
    if (q.j < q.k + 1) {
        throw std::invalid_argument("estimate_fixed_position_prob: need j >= k+1");
    }
    CounterRng rng(q.seed);
    std::uint64_t wps = words_per_string(q.j);
    std::uint64_t hits = 0;
    for (std::uint64_t t = 0; t < q.trials; ++t) {
        auto s = sample_string(rng, t * wps, q.j);
        bool run = true;
        for (std::uint32_t i = 1; i <= q.k && run; ++i) run = s[i] == s[0];
        if (run) ++hits;
    }
    Estimate e;
    e.trials = q.trials;
    e.p_hat = static_cast<double>(hits) / static_cast<double>(q.trials);
    e.stderr_ = binom_stderr(e.p_hat, q.trials);
    e.analytic_bound = std::ldexp(1.0, -static_cast<int>(q.k));
    e.exact = e.analytic_bound;  // exactly 2^-k
    return e;
}

namespace {

double log2_binomial(double n, double r) {
    if (r > n) return -std::numeric_limits<double>::infinity();
    if (r <= 0) return 0.0;
    return (std::lgamma(n + 1.0) - std::lgamma(r + 1.0) - std::lgamma(n - r + 1.0)) /
           std::log(2.0);
}

// Does the 2j-subset c of f realize the conjunction of run events: every
// row string of the first j elements over the last j has a run >= k+1?
bool subset_realizes(const Colouring& f, const std::vector<Vertex>& c, std::uint32_t j,
                     std::uint32_t k) {
    std::vector<Bit> s(j);
    for (std::uint32_t i = 0; i < j; ++i) {
        for (std::uint32_t p = 0; p < j; ++p) s[p] = f.colour(c[i], c[j + p]);
        if (!has_run(s, k + 1)) return false;
    }
    return true;
}

}  // namespace

EjReport ej_union_report(std::uint32_t k, std::uint32_t j_max, std::uint64_t trials,
                         std::uint64_t seed, std::uint32_t a_size) {
    if (k < 1) throw std::invalid_argument("ej_union_report: k must be >= 1");
    if (k > 160) throw std::invalid_argument("ej_union_report: k too large for 2^(k/4)");

    EjReport rep;
    rep.k = k;
    rep.log2_final_bound =
        -(static_cast<double>(k) * k - static_cast<double>(k)) / 4.0;

    // ground set: 2^(k/4) per the analytic argument, or the explicit tiny
    // size when empirical sampling was requested
    double ground = a_size > 0 ? static_cast<double>(a_size)
                               : std::pow(2.0, static_cast<double>(k) / 4.0);
    std::uint32_t j_hi = j_max;
    std::uint32_t range_cap = a_size > 0 ? a_size / 2 : static_cast<std::uint32_t>(ground);
    if (range_cap < j_hi) j_hi = range_cap;

    for (std::uint32_t j = k; j <= j_hi; ++j) {
        EjRow row;
        row.j = j;
        row.log2_binom_exact = log2_binomial(ground, 2.0 * j);
        row.log2_binom_bound = static_cast<double>(k) * j / 2.0;
        row.log2_per_c_bound =
            static_cast<double>(j) * (std::log2(static_cast<double>(j)) - k);
        row.log2_product = row.log2_binom_bound + row.log2_per_c_bound;
        row.log2_quarter_bound = -static_cast<double>(j) * k / 4.0;
        rep.rows.push_back(row);
    }

    if (a_size == 0) return rep;
    if (a_size > 20) {
        // full event sampling only for tiny ground sets
        return rep;
    }

    rep.analytic_only = false;
    CounterRng rng(seed);
    std::uint64_t pairs = std::uint64_t{a_size} * (a_size - 1) / 2;
    std::uint64_t wpt = (pairs + 63) / 64;

    for (std::uint32_t j = k; j <= j_hi && 2 * j <= a_size; ++j) {
        std::uint64_t hits = 0;
        for (std::uint64_t t = 0; t < trials; ++t) {
            Colouring f(a_size);
            std::uint64_t p = 0;
            for (Vertex x = 0; x + 1 < a_size; ++x) {
                for (Vertex y = x + 1; y < a_size; ++y, ++p) {
                    std::uint64_t w = rng.word(t * wpt + p / 64);
                    f.set_colour(x, y, static_cast<Bit>((w >> (p & 63)) & 1));
                }
            }
            // enumerate every 2j-subset of [a_size]
            std::uint32_t r = 2 * j;
            std::vector<Vertex> c(r);
            for (std::uint32_t i = 0; i < r; ++i) c[i] = i;
            bool found = false;
            for (;;) {
                if (subset_realizes(f, c, j, k)) {
                    found = true;
                    break;
                }
                // next combination
                int i = static_cast<int>(r) - 1;
                while (i >= 0 && c[i] == a_size - r + i) --i;
                if (i < 0) break;
                ++c[i];
                for (std::uint32_t q = i + 1; q < r; ++q) c[q] = c[q - 1] + 1;
            }
            if (found) ++hits;
        }
        EjEmpirical emp;
        emp.a_size = a_size;
        emp.j = j;
        emp.trials = trials;
        emp.frequency = static_cast<double>(hits) / static_cast<double>(trials);
        emp.stderr_ = binom_stderr(emp.frequency, trials);
        rep.empirical.push_back(emp);
    }
    return rep;
}

}  // namespace ramsey
