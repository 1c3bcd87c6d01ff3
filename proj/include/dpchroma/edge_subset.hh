#pragma once

#include <bit>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <vector>

namespace dpchroma {

/// Bitmask over the edge indices of one graph. The size is fixed at
/// construction and equals the edge count of that graph.
class EdgeSubset {
public:
    EdgeSubset() = default;

    explicit EdgeSubset(std::size_t edge_count)
        : size_(edge_count), words_((edge_count + 63) / 64, 0)
    {
    }

    EdgeSubset(std::size_t edge_count, std::initializer_list<std::size_t> members)
        : EdgeSubset(edge_count)
    {
        for (auto e : members)
            set(e);
    }

    static EdgeSubset all(std::size_t edge_count)
    {
        EdgeSubset s(edge_count);
        for (std::size_t e = 0; e < edge_count; ++e)
            s.set(e);
        return s;
    }

    /// Low bits of `mask` become members; used by the 2^|E| subset sweeps.
    static EdgeSubset from_mask(std::size_t edge_count, std::uint64_t mask)
    {
        EdgeSubset s(edge_count);
        if (!s.words_.empty())
            s.words_[0] = edge_count >= 64 ? mask : (mask & ((std::uint64_t{1} << edge_count) - 1));
        return s;
    }

    std::size_t size() const { return size_; }

    bool test(std::size_t e) const { return (words_[e / 64] >> (e % 64)) & 1U; }
    void set(std::size_t e) { words_[e / 64] |= std::uint64_t{1} << (e % 64); }
    void reset(std::size_t e) { words_[e / 64] &= ~(std::uint64_t{1} << (e % 64)); }

    std::size_t count() const
    {
        std::size_t c = 0;
        for (auto w : words_)
            c += static_cast<std::size_t>(std::popcount(w));
        return c;
    }

    bool empty() const
    {
        for (auto w : words_)
            if (w)
                return false;
        return true;
    }

    std::vector<std::size_t> members() const
    {
        std::vector<std::size_t> out;
        for (std::size_t e = 0; e < size_; ++e)
            if (test(e))
                out.push_back(e);
        return out;
    }

    bool is_subset_of(const EdgeSubset & other) const
    {
        for (std::size_t i = 0; i < words_.size(); ++i)
            if (words_[i] & ~other.words_[i])
                return false;
        return true;
    }

    EdgeSubset & operator|=(const EdgeSubset & o)
    {
        for (std::size_t i = 0; i < words_.size(); ++i)
            words_[i] |= o.words_[i];
        return *this;
    }

    EdgeSubset & operator&=(const EdgeSubset & o)
    {
        for (std::size_t i = 0; i < words_.size(); ++i)
            words_[i] &= o.words_[i];
        return *this;
    }

    /// Set difference.
    EdgeSubset & operator-=(const EdgeSubset & o)
    {
        for (std::size_t i = 0; i < words_.size(); ++i)
            words_[i] &= ~o.words_[i];
        return *this;
    }

    friend EdgeSubset operator|(EdgeSubset a, const EdgeSubset & b) { return a |= b; }
    friend EdgeSubset operator&(EdgeSubset a, const EdgeSubset & b) { return a &= b; }
    friend EdgeSubset operator-(EdgeSubset a, const EdgeSubset & b) { return a -= b; }

    friend bool operator==(const EdgeSubset &, const EdgeSubset &) = default;

private:
    std::size_t size_ = 0;
    std::vector<std::uint64_t> words_;
};

} // namespace dpchroma
