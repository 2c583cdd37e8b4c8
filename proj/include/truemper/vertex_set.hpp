#pragma once

#include <bit>
#include <cstdint>
#include <initializer_list>
#include <iterator>
#include <vector>

namespace truemper {

/// Fixed-universe bitset over vertices 0..universe-1.
class VertexSet {
public:
    class iterator {
    public:
        using iterator_category = std::forward_iterator_tag;
        using value_type = int;
        using difference_type = std::ptrdiff_t;
        using pointer = const int*;
        using reference = int;

        iterator() = default;
        iterator(const VertexSet* s, int v) : set_(s), v_(v) {}
        int operator*() const { return v_; }
        iterator& operator++() {
            v_ = set_->next(v_);
            return *this;
        }
        iterator operator++(int) {
            iterator t = *this;
            ++*this;
            return t;
        }
        bool operator==(const iterator& o) const { return v_ == o.v_; }

    private:
        const VertexSet* set_ = nullptr;
        int v_ = -1;
    };

    VertexSet() = default;
    explicit VertexSet(int universe)
        : universe_(universe), words_((universe + 63) / 64, 0) {}
    VertexSet(int universe, std::initializer_list<int> members) : VertexSet(universe) {
        for (int v : members) insert(v);
    }
    template <class Range>
    static VertexSet from(int universe, const Range& members) {
        VertexSet s(universe);
        for (int v : members) s.insert(v);
        return s;
    }
    static VertexSet full(int universe) {
        VertexSet s(universe);
        for (auto& w : s.words_) w = ~std::uint64_t{0};
        s.trim();
        return s;
    }

    int universe() const { return universe_; }

    bool contains(int v) const { return (words_[v >> 6] >> (v & 63)) & 1u; }
    void insert(int v) { words_[v >> 6] |= std::uint64_t{1} << (v & 63); }
    void erase(int v) { words_[v >> 6] &= ~(std::uint64_t{1} << (v & 63)); }
    void clear() {
        for (auto& w : words_) w = 0;
    }

    int size() const {
        int c = 0;
        for (auto w : words_) c += std::popcount(w);
        return c;
    }
    bool empty() const {
        for (auto w : words_)
            if (w) return false;
        return true;
    }

    /// Least member, or -1.
    int first() const { return scan(0); }
    /// Least member greater than v, or -1.
    int next(int v) const { return v + 1 >= universe_ ? -1 : scan(v + 1); }

    bool is_subset_of(const VertexSet& o) const {
        for (std::size_t i = 0; i < words_.size(); ++i)
            if (words_[i] & ~o.words_[i]) return false;
        return true;
    }
    bool intersects(const VertexSet& o) const {
        for (std::size_t i = 0; i < words_.size(); ++i)
            if (words_[i] & o.words_[i]) return true;
        return false;
    }
    int intersection_size(const VertexSet& o) const {
        int c = 0;
        for (std::size_t i = 0; i < words_.size(); ++i) c += std::popcount(words_[i] & o.words_[i]);
        return c;
    }

    VertexSet& operator&=(const VertexSet& o) {
        for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= o.words_[i];
        return *this;
    }
    VertexSet& operator|=(const VertexSet& o) {
        for (std::size_t i = 0; i < words_.size(); ++i) words_[i] |= o.words_[i];
        return *this;
    }
    VertexSet& operator-=(const VertexSet& o) {
        for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= ~o.words_[i];
        return *this;
    }
    friend VertexSet operator&(VertexSet a, const VertexSet& b) { return a &= b; }
    friend VertexSet operator|(VertexSet a, const VertexSet& b) { return a |= b; }
    friend VertexSet operator-(VertexSet a, const VertexSet& b) { return a -= b; }
    bool operator==(const VertexSet& o) const = default;

    VertexSet complement() const {
        VertexSet s = *this;
        for (auto& w : s.words_) w = ~w;
        s.trim();
        return s;
    }

    std::vector<int> to_vector() const {
        std::vector<int> out;
        for (int v : *this) out.push_back(v);
        return out;
    }

    iterator begin() const { return {this, first()}; }
    iterator end() const { return {this, -1}; }

private:
    int scan(int from) const {
        std::size_t w = static_cast<std::size_t>(from) >> 6;
        if (w >= words_.size()) return -1;
        std::uint64_t bits = words_[w] & (~std::uint64_t{0} << (from & 63));
        while (true) {
            if (bits) return static_cast<int>(w * 64 + std::countr_zero(bits));
            if (++w >= words_.size()) return -1;
            bits = words_[w];
        }
    }
    void trim() {
        if (universe_ & 63) words_.back() &= (std::uint64_t{1} << (universe_ & 63)) - 1;
    }

    int universe_ = 0;
    std::vector<std::uint64_t> words_;
};

}  // namespace truemper
