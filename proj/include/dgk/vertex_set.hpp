#ifndef DGK_VERTEX_SET_HPP
#define DGK_VERTEX_SET_HPP

#include <bit>
#include <cassert>
#include <cstdint>
#include <cstring>
#include <initializer_list>
#include <memory>
#include <vector>

namespace dgk {

// Set of vertex ids over a fixed universe 0..n-1, stored as a bitset.
// The first word lives inline, so sets over universes up to 64 vertices
// never allocate; enumeration workloads sit entirely in that regime.
class VertexSet {
  public:
    VertexSet() = default;

    explicit VertexSet(int universe) : n_(universe) {
        assert(universe >= 0);
        if (nwords() > 1) tail_ = std::make_unique<std::uint64_t[]>(nwords() - 1);
    }

    VertexSet(int universe, std::initializer_list<int> ids) : VertexSet(universe) {
        for (int v : ids) set(v);
    }

    VertexSet(const VertexSet& o) : n_(o.n_), head_(o.head_) {
        if (o.tail_) {
            tail_ = std::make_unique<std::uint64_t[]>(nwords() - 1);
            std::memcpy(tail_.get(), o.tail_.get(), sizeof(std::uint64_t) * (nwords() - 1));
        }
    }
    VertexSet(VertexSet&&) noexcept = default;
    VertexSet& operator=(const VertexSet& o) {
        if (this != &o) { VertexSet tmp(o); *this = std::move(tmp); }
        return *this;
    }
    VertexSet& operator=(VertexSet&&) noexcept = default;

    int universe() const { return n_; }

    bool test(int v) const {
        assert(v >= 0 && v < n_);
        return (word(v >> 6) >> (v & 63)) & 1u;
    }
    void set(int v) {
        assert(v >= 0 && v < n_);
        word_ref(v >> 6) |= std::uint64_t{1} << (v & 63);
    }
    void reset(int v) {
        assert(v >= 0 && v < n_);
        word_ref(v >> 6) &= ~(std::uint64_t{1} << (v & 63));
    }
    void assign(int v, bool on) { on ? set(v) : reset(v); }
    void clear() {
        head_ = 0;
        if (tail_) std::memset(tail_.get(), 0, sizeof(std::uint64_t) * (nwords() - 1));
    }

    int count() const {
        int c = std::popcount(head_);
        for (int i = 1; i < nwords(); ++i) c += std::popcount(tail_[i - 1]);
        return c;
    }
    bool empty() const {
        if (head_) return false;
        for (int i = 1; i < nwords(); ++i)
            if (tail_[i - 1]) return false;
        return true;
    }
    bool any() const { return !empty(); }

    // Smallest member, or -1 when empty.
    int first() const {
        for (int i = 0; i < nwords(); ++i)
            if (std::uint64_t w = word(i)) return i * 64 + std::countr_zero(w);
        return -1;
    }
    // Smallest member > v, or -1.
    int next(int v) const {
        int i = (v + 1) >> 6;
        if (i >= nwords()) return -1;
        std::uint64_t w = word(i) & (~std::uint64_t{0} << ((v + 1) & 63));
        while (true) {
            if (w) return i * 64 + std::countr_zero(w);
            if (++i >= nwords()) return -1;
            w = word(i);
        }
    }

    VertexSet& operator|=(const VertexSet& o) {
        assert(n_ == o.n_);
        for (int i = 0; i < nwords(); ++i) word_ref(i) |= o.word(i);
        return *this;
    }
    VertexSet& operator&=(const VertexSet& o) {
        assert(n_ == o.n_);
        for (int i = 0; i < nwords(); ++i) word_ref(i) &= o.word(i);
        return *this;
    }
    VertexSet& operator-=(const VertexSet& o) {
        assert(n_ == o.n_);
        for (int i = 0; i < nwords(); ++i) word_ref(i) &= ~o.word(i);
        return *this;
    }

    friend VertexSet operator|(VertexSet a, const VertexSet& b) { return a |= b; }
    friend VertexSet operator&(VertexSet a, const VertexSet& b) { return a &= b; }
    friend VertexSet operator-(VertexSet a, const VertexSet& b) { return a -= b; }

    // Complement within the universe.
    VertexSet complement() const {
        VertexSet r(n_);
        for (int i = 0; i < nwords(); ++i) r.word_ref(i) = ~word(i);
        r.trim();
        return r;
    }

    bool intersects(const VertexSet& o) const {
        assert(n_ == o.n_);
        for (int i = 0; i < nwords(); ++i)
            if (word(i) & o.word(i)) return true;
        return false;
    }
    bool is_subset_of(const VertexSet& o) const {
        assert(n_ == o.n_);
        for (int i = 0; i < nwords(); ++i)
            if (word(i) & ~o.word(i)) return false;
        return true;
    }
    bool contains_all(const VertexSet& o) const { return o.is_subset_of(*this); }

    friend bool operator==(const VertexSet& a, const VertexSet& b) {
        if (a.n_ != b.n_) return false;
        for (int i = 0; i < a.nwords(); ++i)
            if (a.word(i) != b.word(i)) return false;
        return true;
    }
    friend bool operator!=(const VertexSet& a, const VertexSet& b) { return !(a == b); }

    template <class F> void for_each(F&& f) const {
        for (int i = 0; i < nwords(); ++i) {
            std::uint64_t w = word(i);
            while (w) {
                f(i * 64 + std::countr_zero(w));
                w &= w - 1;
            }
        }
    }

    std::vector<int> to_vector() const {
        std::vector<int> out;
        out.reserve(static_cast<std::size_t>(count()));
        for_each([&](int v) { out.push_back(v); });
        return out;
    }

    static VertexSet full(int universe) {
        VertexSet r(universe);
        for (int i = 0; i < r.nwords(); ++i) r.word_ref(i) = ~std::uint64_t{0};
        r.trim();
        return r;
    }
    static VertexSet single(int universe, int v) {
        VertexSet r(universe);
        r.set(v);
        return r;
    }

    // Range-for over members in increasing order.
    struct iterator {
        const VertexSet* s;
        int v;
        int operator*() const { return v; }
        iterator& operator++() { v = s->next(v); return *this; }
        bool operator!=(const iterator& o) const { return v != o.v; }
    };
    iterator begin() const { return {this, first()}; }
    iterator end() const { return {this, -1}; }

    std::uint64_t word(int i) const { return i == 0 ? head_ : tail_[i - 1]; }
    std::uint64_t& word_ref(int i) { return i == 0 ? head_ : tail_[i - 1]; }
    int nwords() const { return (n_ + 63) >> 6; }

  private:
    void trim() {
        if (n_ == 0) { head_ = 0; return; }
        int bits = n_ & 63;
        if (bits) word_ref(nwords() - 1) &= (~std::uint64_t{0}) >> (64 - bits);
    }

    int n_ = 0;
    std::uint64_t head_ = 0;
    std::unique_ptr<std::uint64_t[]> tail_; // words 1.. when universe > 64
};

} // namespace dgk

#endif
