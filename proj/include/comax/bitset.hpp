#pragma once

#include <bit>
#include <cassert>
#include <cstdint>
#include <vector>

#include "comax/common.hpp"

namespace comax {

// Fixed-width bit set used for element subsets and adjacency rows.
// Trailing bits of the last word are kept zero so word-wise comparison works.
class DynBitset {
public:
    DynBitset() = default;
    explicit DynBitset(std::size_t bits) : n_(bits), w_((bits + 63) / 64, 0) {}

    std::size_t size() const { return n_; }

    bool test(std::size_t i) const { return (w_[i >> 6] >> (i & 63)) & 1u; }
    void set(std::size_t i) { w_[i >> 6] |= std::uint64_t(1) << (i & 63); }
    void reset(std::size_t i) { w_[i >> 6] &= ~(std::uint64_t(1) << (i & 63)); }

    std::size_t count() const {
        std::size_t c = 0;
        for (auto w : w_) c += static_cast<std::size_t>(std::popcount(w));
        return c;
    }

    bool any() const {
        for (auto w : w_)
            if (w) return true;
        return false;
    }
    bool none() const { return !any(); }

    DynBitset& operator&=(const DynBitset& o) {
        assert(n_ == o.n_);
        for (std::size_t i = 0; i < w_.size(); ++i) w_[i] &= o.w_[i];
        return *this;
    }
    DynBitset& operator|=(const DynBitset& o) {
        assert(n_ == o.n_);
        for (std::size_t i = 0; i < w_.size(); ++i) w_[i] |= o.w_[i];
        return *this;
    }
    friend DynBitset operator&(DynBitset a, const DynBitset& b) { return a &= b; }
    friend DynBitset operator|(DynBitset a, const DynBitset& b) { return a |= b; }

    // this & ~o; safe because trailing bits of *this are zero.
    DynBitset andnot(const DynBitset& o) const {
        assert(n_ == o.n_);
        DynBitset r(n_);
        for (std::size_t i = 0; i < w_.size(); ++i) r.w_[i] = w_[i] & ~o.w_[i];
        return r;
    }

    bool intersects(const DynBitset& o) const {
        assert(n_ == o.n_);
        for (std::size_t i = 0; i < w_.size(); ++i)
            if (w_[i] & o.w_[i]) return true;
        return false;
    }

    bool is_subset_of(const DynBitset& o) const {
        assert(n_ == o.n_);
        for (std::size_t i = 0; i < w_.size(); ++i)
            if (w_[i] & ~o.w_[i]) return false;
        return true;
    }

    bool operator==(const DynBitset& o) const { return n_ == o.n_ && w_ == o.w_; }

    // Strict order by smallest differing element: the set containing the
    // lowest element in the symmetric difference compares smaller. This is
    // lexicographic order on the sorted element lists.
    static bool lex_less(const DynBitset& a, const DynBitset& b) {
        assert(a.n_ == b.n_);
        for (std::size_t i = 0; i < a.w_.size(); ++i) {
            std::uint64_t diff = a.w_[i] ^ b.w_[i];
            if (diff) {
                std::uint64_t low = diff & (~diff + 1);
                return (a.w_[i] & low) != 0;
            }
        }
        return false;
    }

    int find_first() const {
        for (std::size_t i = 0; i < w_.size(); ++i)
            if (w_[i]) return static_cast<int>(i * 64 + std::countr_zero(w_[i]));
        return -1;
    }

    template <class F>
    void for_each(F&& f) const {
        for (std::size_t i = 0; i < w_.size(); ++i) {
            std::uint64_t w = w_[i];
            while (w) {
                f(static_cast<std::size_t>(i * 64 + std::countr_zero(w)));
                w &= w - 1;
            }
        }
    }

    std::vector<Elem> to_elems() const {
        std::vector<Elem> v;
        v.reserve(count());
        for_each([&](std::size_t i) { v.push_back(static_cast<Elem>(i)); });
        return v;
    }

    const std::vector<std::uint64_t>& words() const { return w_; }

private:
    std::size_t n_ = 0;
    std::vector<std::uint64_t> w_;
};

}  // namespace comax
