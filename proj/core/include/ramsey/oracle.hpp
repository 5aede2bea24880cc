#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>

#include "ramsey/colouring.hpp"

namespace ramsey {

struct CliqueSearchConfig {
    std::optional<std::uint32_t> target;       // stop as soon as a set this big is found
    std::optional<std::uint64_t> node_budget;  // cap on search nodes
};

struct MaxHomogeneousResult {
    std::uint32_t size = 0;
    IndexSet witness;
    bool exact = true;  // false when the node budget was hit; size is then a lower bound
    bool target_reached = false;
    std::uint64_t nodes = 0;
    double elapsed_seconds = 0.0;
};

// Exact maximum set with all internal pairs coloured b (max clique in the
// colour-b graph), via bitset branch-and-bound with greedy-colouring bounds.
MaxHomogeneousResult max_homogeneous(const Colouring& f, Bit b,
                                     const CliqueSearchConfig& cfg = {});

struct OracleCertificate {
    std::uint64_t colouring_hash = 0;
    std::string claim;
    std::uint64_t nodes = 0;
    double elapsed_seconds = 0.0;
};

struct SizeQueryResult {
    enum class Kind { Found, Refuted, Inconclusive };
    Kind kind = Kind::Inconclusive;
    std::optional<IndexSet> witness;           // when Found
    std::optional<OracleCertificate> certificate;  // when Refuted
    std::uint64_t nodes = 0;
};

// Is there a homogeneous set (either colour) of size ell?
SizeQueryResult has_homogeneous_of_size(const Colouring& f, std::uint32_t ell,
                                        const CliqueSearchConfig& cfg = {});

// Independent cross-check: exact per-colour maxima by scanning all 2^m
// subsets. Hard cap m <= 20.
std::pair<std::uint32_t, std::uint32_t> exhaustive_max_homogeneous(const Colouring& f);

}  // namespace ramsey
