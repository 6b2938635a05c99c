#pragma once

#include <bit>
#include <cstdint>
#include <vector>

namespace extremal {

using Vertex = std::int32_t;

// Dense bitset over vertex ids 0..n-1 with a cached cardinality.
class VertexSet {
public:
    VertexSet() = default;
    explicit VertexSet(Vertex universe) : n_(universe), words_((universe + 63) / 64, 0) {}

    Vertex universe() const { return n_; }
    int size() const { return count_; }
    bool empty() const { return count_ == 0; }

    bool contains(Vertex v) const {
        return (words_[static_cast<std::size_t>(v) >> 6] >> (v & 63)) & 1u;
    }

    void insert(Vertex v) {
        std::uint64_t& w = words_[static_cast<std::size_t>(v) >> 6];
        std::uint64_t bit = std::uint64_t{1} << (v & 63);
        if (!(w & bit)) {
            w |= bit;
            ++count_;
        }
    }

    void erase(Vertex v) {
        std::uint64_t& w = words_[static_cast<std::size_t>(v) >> 6];
        std::uint64_t bit = std::uint64_t{1} << (v & 63);
        if (w & bit) {
            w &= ~bit;
            --count_;
        }
    }

    void clear() {
        std::fill(words_.begin(), words_.end(), 0);
        count_ = 0;
    }

    void insert_all(const VertexSet& other) {
        for (std::size_t i = 0; i < words_.size(); ++i) words_[i] |= other.words_[i];
        recount();
    }

    int intersection_size(const VertexSet& other) const {
        int c = 0;
        for (std::size_t i = 0; i < words_.size(); ++i)
            c += std::popcount(words_[i] & other.words_[i]);
        return c;
    }

    std::vector<Vertex> to_vector() const {
        std::vector<Vertex> out;
        out.reserve(static_cast<std::size_t>(count_));
        for (std::size_t i = 0; i < words_.size(); ++i) {
            std::uint64_t w = words_[i];
            while (w) {
                int b = std::countr_zero(w);
                out.push_back(static_cast<Vertex>(i * 64 + b));
                w &= w - 1;
            }
        }
        return out;
    }

    template <typename F>
    void for_each(F&& f) const {
        for (std::size_t i = 0; i < words_.size(); ++i) {
            std::uint64_t w = words_[i];
            while (w) {
                int b = std::countr_zero(w);
                f(static_cast<Vertex>(i * 64 + b));
                w &= w - 1;
            }
        }
    }

    bool operator==(const VertexSet& other) const {
        return n_ == other.n_ && words_ == other.words_;
    }

private:
    void recount() {
        count_ = 0;
        for (std::uint64_t w : words_) count_ += std::popcount(w);
    }

    Vertex n_ = 0;
    int count_ = 0;
    std::vector<std::uint64_t> words_;
};

inline VertexSet make_vertex_set(Vertex universe, const std::vector<Vertex>& members) {
    VertexSet s(universe);
    for (Vertex v : members) s.insert(v);
    return s;
}

} // namespace extremal
