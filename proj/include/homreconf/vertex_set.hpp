#pragma once

#include <bit>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <stdexcept>
#include <vector>

namespace homreconf {

using Vertex = std::uint32_t;

/// Fixed-capacity bitset over the vertex indices of one graph.
class VertexSet {
public:
    VertexSet() = default;
    explicit VertexSet(std::size_t capacity) : capacity_(capacity), words_((capacity + 63) / 64, 0) {}
    VertexSet(std::size_t capacity, std::initializer_list<Vertex> members) : VertexSet(capacity)
    {
        for (Vertex v : members)
            insert(v);
    }

    static VertexSet full(std::size_t capacity)
    {
        VertexSet s(capacity);
        for (std::size_t v = 0; v < capacity; ++v)
            s.insert(static_cast<Vertex>(v));
        return s;
    }

    std::size_t capacity() const { return capacity_; }

    bool contains(Vertex v) const
    {
        return v < capacity_ && ((words_[v >> 6] >> (v & 63)) & 1u) != 0;
    }

    void insert(Vertex v)
    {
        check(v);
        words_[v >> 6] |= std::uint64_t{1} << (v & 63);
    }

    void erase(Vertex v)
    {
        check(v);
        words_[v >> 6] &= ~(std::uint64_t{1} << (v & 63));
    }

    void clear()
    {
        for (auto & w : words_)
            w = 0;
    }

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
            if (w != 0)
                return false;
        return true;
    }

    /// Smallest member, or capacity() when empty.
    std::size_t first() const { return next(0); }

    /// Smallest member >= from, or capacity() when there is none.
    std::size_t next(std::size_t from) const
    {
        if (from >= capacity_)
            return capacity_;
        std::size_t wi = from >> 6;
        std::uint64_t w = words_[wi] & (~std::uint64_t{0} << (from & 63));
        while (true) {
            if (w != 0)
                return (wi << 6) + static_cast<std::size_t>(std::countr_zero(w));
            if (++wi >= words_.size())
                return capacity_;
            w = words_[wi];
        }
    }

    template <class F>
    void for_each(F && f) const
    {
        for (std::size_t wi = 0; wi < words_.size(); ++wi) {
            std::uint64_t w = words_[wi];
            while (w != 0) {
                f(static_cast<Vertex>((wi << 6) + static_cast<std::size_t>(std::countr_zero(w))));
                w &= w - 1;
            }
        }
    }

    std::vector<Vertex> members() const
    {
        std::vector<Vertex> out;
        out.reserve(count());
        for_each([&](Vertex v) { out.push_back(v); });
        return out;
    }

    bool is_subset_of(const VertexSet & other) const
    {
        same_capacity(other);
        for (std::size_t i = 0; i < words_.size(); ++i)
            if ((words_[i] & ~other.words_[i]) != 0)
                return false;
        return true;
    }

    bool intersects(const VertexSet & other) const
    {
        same_capacity(other);
        for (std::size_t i = 0; i < words_.size(); ++i)
            if ((words_[i] & other.words_[i]) != 0)
                return true;
        return false;
    }

    VertexSet & operator&=(const VertexSet & other)
    {
        same_capacity(other);
        for (std::size_t i = 0; i < words_.size(); ++i)
            words_[i] &= other.words_[i];
        return *this;
    }

    VertexSet & operator|=(const VertexSet & other)
    {
        same_capacity(other);
        for (std::size_t i = 0; i < words_.size(); ++i)
            words_[i] |= other.words_[i];
        return *this;
    }

    /// Set difference.
    VertexSet & operator-=(const VertexSet & other)
    {
        same_capacity(other);
        for (std::size_t i = 0; i < words_.size(); ++i)
            words_[i] &= ~other.words_[i];
        return *this;
    }

    friend VertexSet operator&(VertexSet a, const VertexSet & b) { return a &= b; }
    friend VertexSet operator|(VertexSet a, const VertexSet & b) { return a |= b; }
    friend VertexSet operator-(VertexSet a, const VertexSet & b) { return a -= b; }

    friend bool operator==(const VertexSet &, const VertexSet &) = default;

    /// Lexicographic order on the member lists; used to sort families of sets.
    friend bool operator<(const VertexSet & a, const VertexSet & b)
    {
        if (a.capacity_ != b.capacity_)
            return a.capacity_ < b.capacity_;
        std::size_t i = a.first(), j = b.first();
        while (i < a.capacity_ && j < b.capacity_) {
            if (i != j)
                return i < j;
            i = a.next(i + 1);
            j = b.next(j + 1);
        }
        return i == a.capacity_ && j < b.capacity_;
    }

    std::size_t hash() const
    {
        std::size_t h = capacity_;
        for (auto w : words_)
            h = h * 1099511628211ull ^ std::hash<std::uint64_t>{}(w);
        return h;
    }

private:
    void check(Vertex v) const
    {
        if (v >= capacity_)
            throw std::out_of_range("vertex index outside set capacity");
    }

    void same_capacity(const VertexSet & other) const
    {
        if (other.capacity_ != capacity_)
            throw std::invalid_argument("vertex sets over different graphs");
    }

    std::size_t capacity_ = 0;
    std::vector<std::uint64_t> words_;
};

} // namespace homreconf
