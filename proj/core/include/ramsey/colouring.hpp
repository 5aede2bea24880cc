#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <vector>

namespace ramsey {

using Bit = std::uint8_t;
using Vertex = std::uint32_t;

// Sorted, duplicate-free list of vertex indices.
class IndexSet {
public:
    IndexSet() = default;
    // Throws std::invalid_argument unless v is strictly increasing.
    explicit IndexSet(std::vector<Vertex> v);

    static IndexSet full(Vertex m);

    std::size_t size() const { return idx_.size(); }
    bool empty() const { return idx_.empty(); }
    Vertex operator[](std::size_t i) const { return idx_[i]; }
    Vertex front() const { return idx_.front(); }
    Vertex back() const { return idx_.back(); }

    auto begin() const { return idx_.begin(); }
    auto end() const { return idx_.end(); }
    const std::vector<Vertex>& values() const { return idx_; }

    bool valid_for(Vertex m) const { return idx_.empty() || idx_.back() < m; }
    bool contains(Vertex v) const;

    bool operator==(const IndexSet&) const = default;

private:
    std::vector<Vertex> idx_;
};

// 2-colouring of the complete graph on [m], bit-packed upper triangle.
// Row i holds f(i,i+1) .. f(i,m-1) contiguously, so row scans over
// consecutive vertices touch consecutive bits. Immutable by convention
// after construction; all algorithms treat it as read-only.
class Colouring {
public:
    explicit Colouring(Vertex m);

    Vertex size() const { return m_; }

    Bit colour(Vertex x, Vertex y) const;
    void set_colour(Vertex x, Vertex y, Bit b);

    std::uint64_t edge_count(Bit b) const;
    Colouring complement() const;
    std::uint64_t hash() const;

    bool operator==(const Colouring&) const = default;

private:
    std::size_t bit_index(Vertex x, Vertex y) const;

    Vertex m_ = 0;
    std::vector<std::size_t> row_offset_;  // bit offset of row i
    std::vector<std::uint64_t> words_;
};

using RowSequence = std::vector<Bit>;

// 0 for the empty sequence, otherwise 1 + number of adjacent unequal pairs.
std::uint32_t block_count(std::span<const Bit> s);

// The sequence <f(a_i,a_{i+1}), ..., f(a_i,a_last)> for A = {a_0 < ... }.
RowSequence row_sequence(const Colouring& f, const IndexSet& a, std::size_t i);

struct InstabilityProfile {
    std::vector<std::uint32_t> per_row_blocks;  // rows 0 .. |A|-2
    std::uint32_t max_blocks = 0;
};

// f restricted to A is at most k-unstable iff result.max_blocks <= k.
InstabilityProfile unstability(const Colouring& f, const IndexSet& a);

struct Restriction {
    Colouring g;
    IndexSet original;  // original[i] is the vertex of f behind vertex i of g
};

Restriction restrict_colouring(const Colouring& f, const IndexSet& a);

struct VertexPair {
    Vertex x, y;
};

struct Homogeneity {
    enum class Kind { Homogeneous, Vacuous, NotHomogeneous };
    Kind kind = Kind::Vacuous;
    Bit colour = 0;  // meaningful only when Homogeneous
    std::optional<std::array<VertexPair, 2>> violation;

    bool ok() const { return kind != Kind::NotHomogeneous; }
};

Homogeneity is_homogeneous(const Colouring& f, const IndexSet& h);

// Convenience: homogeneous (or vacuous) with the given colour.
bool is_homogeneous_with_colour(const Colouring& f, const IndexSet& h, Bit b);

}  // namespace ramsey
