#include "ramsey/colouring.hpp"

#include <algorithm>
#include <string>

namespace ramsey {

IndexSet::IndexSet(std::vector<Vertex> v) : idx_(std::move(v)) {
    for (std::size_t i = 1; i < idx_.size(); ++i) {
        if (idx_[i - 1] >= idx_[i]) {
            throw std::invalid_argument("IndexSet: indices must be strictly increasing");
        }
    }
}

IndexSet IndexSet::full(Vertex m) {
    std::vector<Vertex> v(m);
    for (Vertex i = 0; i < m; ++i) v[i] = i;
    return IndexSet(std::move(v));
}

bool IndexSet::contains(Vertex v) const {
    return std::binary_search(idx_.begin(), idx_.end(), v);
}

Colouring::Colouring(Vertex m) : m_(m) {
    if (m < 1) throw std::invalid_argument("Colouring: m must be >= 1");
    row_offset_.resize(m);
    std::size_t off = 0;
    for (Vertex i = 0; i < m; ++i) {
        row_offset_[i] = off;
        off += m - 1 - i;
    }
    words_.assign((off + 63) / 64, 0);
}

std::size_t Colouring::bit_index(Vertex x, Vertex y) const {
    if (x == y || x >= m_ || y >= m_) {
        throw std::invalid_argument("Colouring: pair {" + std::to_string(x) + "," +
                                    std::to_string(y) + "} out of domain for m=" +
                                    std::to_string(m_));
    }
    if (x > y) std::swap(x, y);
    return row_offset_[x] + (y - x - 1);
}

Bit Colouring::colour(Vertex x, Vertex y) const {
    std::size_t b = bit_index(x, y);
    return static_cast<Bit>((words_[b >> 6] >> (b & 63)) & 1u);
}

void Colouring::set_colour(Vertex x, Vertex y, Bit b) {
    std::size_t i = bit_index(x, y);
    if (b) {
        words_[i >> 6] |= std::uint64_t{1} << (i & 63);
    } else {
        words_[i >> 6] &= ~(std::uint64_t{1} << (i & 63));
    }
}

std::uint64_t Colouring::edge_count(Bit b) const {
    std::uint64_t ones = 0;
    for (auto w : words_) ones += static_cast<std::uint64_t>(__builtin_popcountll(w));
    std::uint64_t total = static_cast<std::uint64_t>(m_) * (m_ - 1) / 2;
    return b ? ones : total - ones;
}

Colouring Colouring::complement() const {
    Colouring g(m_);
    for (Vertex i = 0; i + 1 < m_; ++i) {
        for (Vertex j = i + 1; j < m_; ++j) {
            g.set_colour(i, j, static_cast<Bit>(1 - colour(i, j)));
        }
    }
    return g;
}

std::uint64_t Colouring::hash() const {
    // FNV-1a over m and the packed words
    std::uint64_t h = 14695981039346656037ull;
    auto mix = [&h](std::uint64_t v) {
        for (int i = 0; i < 8; ++i) {
            h ^= (v >> (8 * i)) & 0xff;
            h *= 1099511628211ull;
        }
    };
    mix(m_);
    for (auto w : words_) mix(w);
    return h;
}

std::uint32_t block_count(std::span<const Bit> s) {
    if (s.empty()) return 0;
    std::uint32_t blocks = 1;
    for (std::size_t i = 1; i < s.size(); ++i) {
        if (s[i] != s[i - 1]) ++blocks;
    }
    return blocks;
}

RowSequence row_sequence(const Colouring& f, const IndexSet& a, std::size_t i) {
    if (a.size() < 2 || i >= a.size() - 1) {
        throw std::invalid_argument("row_sequence: row index out of range");
    }
    if (!a.valid_for(f.size())) {
        throw std::invalid_argument("row_sequence: index set not valid for colouring");
    }
    RowSequence s;
    s.reserve(a.size() - 1 - i);
    for (std::size_t j = i + 1; j < a.size(); ++j) {
        s.push_back(f.colour(a[i], a[j]));
    }
    return s;
}

InstabilityProfile unstability(const Colouring& f, const IndexSet& a) {
    if (a.empty()) throw std::invalid_argument("unstability: |A| must be >= 1");
    if (!a.valid_for(f.size())) {
        throw std::invalid_argument("unstability: index set not valid for colouring");
    }
    InstabilityProfile p;
    if (a.size() < 2) return p;
    p.per_row_blocks.reserve(a.size() - 1);
    for (std::size_t i = 0; i + 1 < a.size(); ++i) {
        Bit prev = f.colour(a[i], a[i + 1]);
        std::uint32_t blocks = 1;
        for (std::size_t j = i + 2; j < a.size(); ++j) {
            Bit cur = f.colour(a[i], a[j]);
            if (cur != prev) ++blocks;
            prev = cur;
        }
        p.per_row_blocks.push_back(blocks);
        p.max_blocks = std::max(p.max_blocks, blocks);
    }
    return p;
}

Restriction restrict_colouring(const Colouring& f, const IndexSet& a) {
    if (a.empty()) throw std::invalid_argument("restrict: A must be non-empty");
    if (!a.valid_for(f.size())) {
        throw std::invalid_argument("restrict: index set not valid for colouring");
    }
    Colouring g(static_cast<Vertex>(a.size()));
    for (std::size_t i = 0; i + 1 < a.size(); ++i) {
        for (std::size_t j = i + 1; j < a.size(); ++j) {
            g.set_colour(static_cast<Vertex>(i), static_cast<Vertex>(j),
                         f.colour(a[i], a[j]));
        }
    }
    return Restriction{std::move(g), a};
}

Homogeneity is_homogeneous(const Colouring& f, const IndexSet& h) {
    if (!h.valid_for(f.size())) {
        throw std::invalid_argument("is_homogeneous: index set not valid for colouring");
    }
    Homogeneity r;
    if (h.size() <= 1) {
        r.kind = Homogeneity::Kind::Vacuous;
        return r;
    }
    Bit c = f.colour(h[0], h[1]);
    for (std::size_t i = 0; i + 1 < h.size(); ++i) {
        for (std::size_t j = i + 1; j < h.size(); ++j) {
            if (f.colour(h[i], h[j]) != c) {
                r.kind = Homogeneity::Kind::NotHomogeneous;
                r.violation = {VertexPair{h[0], h[1]}, VertexPair{h[i], h[j]}};
                return r;
            }
        }
    }
    r.kind = Homogeneity::Kind::Homogeneous;
    r.colour = c;
    return r;
}

bool is_homogeneous_with_colour(const Colouring& f, const IndexSet& h, Bit b) {
    auto r = is_homogeneous(f, h);
    return r.kind == Homogeneity::Kind::Vacuous ||
           (r.kind == Homogeneity::Kind::Homogeneous && r.colour == b);
}

}  // namespace ramsey
