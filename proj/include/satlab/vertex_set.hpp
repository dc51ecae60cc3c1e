#pragma once

#include <bit>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <stdexcept>
#include <vector>

namespace satlab {

namespace detail {
    constexpr int kWordBits = 64;
    constexpr int word_count(int n) { return (n + kWordBits - 1) / kWordBits; }
    constexpr std::uint64_t bit(int i) { return std::uint64_t{1} << (i % kWordBits); }
} // namespace detail

/// Fixed-capacity bit mask over vertices 0..n-1. Only bits < n may be set.
class VertexSet {
public:
    VertexSet() = default;
    explicit VertexSet(int n) : n_(n), w_(detail::word_count(n), 0) {}

    VertexSet(int n, std::initializer_list<int> vs) : VertexSet(n)
    {
        for (int v : vs)
            set(v);
    }

    static VertexSet all(int n)
    {
        VertexSet s(n);
        for (int i = 0; i < detail::word_count(n); ++i)
            s.w_[i] = ~std::uint64_t{0};
        s.trim();
        return s;
    }

    int capacity() const { return n_; }

    void set(int v)
    {
        check(v);
        w_[v / detail::kWordBits] |= detail::bit(v);
    }

    void reset(int v)
    {
        check(v);
        w_[v / detail::kWordBits] &= ~detail::bit(v);
    }

    bool test(int v) const
    {
        if (v < 0 || v >= n_)
            return false;
        return w_[v / detail::kWordBits] & detail::bit(v);
    }

    int count() const
    {
        int c = 0;
        for (auto w : w_)
            c += std::popcount(w);
        return c;
    }

    bool empty() const
    {
        for (auto w : w_)
            if (w)
                return false;
        return true;
    }

    VertexSet& operator&=(const VertexSet& o)
    {
        require_same(o);
        for (std::size_t i = 0; i < w_.size(); ++i)
            w_[i] &= o.w_[i];
        return *this;
    }

    VertexSet& operator|=(const VertexSet& o)
    {
        require_same(o);
        for (std::size_t i = 0; i < w_.size(); ++i)
            w_[i] |= o.w_[i];
        return *this;
    }

    VertexSet& operator-=(const VertexSet& o)
    {
        require_same(o);
        for (std::size_t i = 0; i < w_.size(); ++i)
            w_[i] &= ~o.w_[i];
        return *this;
    }

    friend VertexSet operator&(VertexSet a, const VertexSet& b) { return a &= b; }
    friend VertexSet operator|(VertexSet a, const VertexSet& b) { return a |= b; }
    friend VertexSet operator-(VertexSet a, const VertexSet& b) { return a -= b; }

    friend bool operator==(const VertexSet& a, const VertexSet& b)
    {
        return a.n_ == b.n_ && a.w_ == b.w_;
    }

    bool subset_of(const VertexSet& o) const
    {
        require_same(o);
        for (std::size_t i = 0; i < w_.size(); ++i)
            if (w_[i] & ~o.w_[i])
                return false;
        return true;
    }

    /// Smallest member, or -1 when empty.
    int first() const
    {
        for (std::size_t i = 0; i < w_.size(); ++i)
            if (w_[i])
                return int(i) * detail::kWordBits + std::countr_zero(w_[i]);
        return -1;
    }

    template <typename F> void for_each(F&& f) const
    {
        for (std::size_t i = 0; i < w_.size(); ++i) {
            std::uint64_t w = w_[i];
            while (w) {
                int v = int(i) * detail::kWordBits + std::countr_zero(w);
                f(v);
                w &= w - 1;
            }
        }
    }

    std::vector<int> to_vector() const
    {
        std::vector<int> out;
        out.reserve(count());
        for_each([&](int v) { out.push_back(v); });
        return out;
    }

    std::span<const std::uint64_t> words() const { return w_; }
    std::span<std::uint64_t> words() { return w_; }

private:
    void check(int v) const
    {
        if (v < 0 || v >= n_)
            throw std::out_of_range("vertex " + std::to_string(v) + " out of range [0," + std::to_string(n_) + ")");
    }

    void require_same(const VertexSet& o) const
    {
        if (n_ != o.n_)
            throw std::invalid_argument("vertex sets have different capacities");
    }

    void trim()
    {
        if (n_ % detail::kWordBits != 0 && !w_.empty())
            w_.back() &= (std::uint64_t{1} << (n_ % detail::kWordBits)) - 1;
    }

    int n_ = 0;
    std::vector<std::uint64_t> w_;
};

} // namespace satlab
