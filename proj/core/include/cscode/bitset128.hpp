#pragma once

#include <cstdint>
#include <vector>

namespace cscode {

// Element set over indices 0..127 stored as two 64-bit words. Group orders
// for all set-level machinery are capped at 128, so member sets, conjugacy
// classes, connection sets and adjacency rows each fit in one of these and
// the search kernels can AND/POPCOUNT rows directly.
class ElemSet {
public:
    constexpr ElemSet() : w_{0, 0} {}

    static ElemSet full(int n) {
        ElemSet s;
        if (n >= 64) {
            s.w_[0] = ~uint64_t{0};
            s.w_[1] = (n == 128) ? ~uint64_t{0} : ((uint64_t{1} << (n - 64)) - 1);
        } else {
            s.w_[0] = (n == 0) ? 0 : ((n == 64) ? ~uint64_t{0} : ((uint64_t{1} << n) - 1));
        }
        return s;
    }

    static ElemSet single(int i) {
        ElemSet s;
        s.set(i);
        return s;
    }

    static ElemSet of(const std::vector<int>& idx) {
        ElemSet s;
        for (int i : idx) s.set(i);
        return s;
    }

    void set(int i) { w_[i >> 6] |= uint64_t{1} << (i & 63); }
    void reset(int i) { w_[i >> 6] &= ~(uint64_t{1} << (i & 63)); }
    bool test(int i) const { return (w_[i >> 6] >> (i & 63)) & 1u; }

    int count() const {
        return __builtin_popcountll(w_[0]) + __builtin_popcountll(w_[1]);
    }
    bool empty() const { return (w_[0] | w_[1]) == 0; }

    bool intersects(const ElemSet& o) const {
        return ((w_[0] & o.w_[0]) | (w_[1] & o.w_[1])) != 0;
    }
    // superset test: every member of o is a member of *this
    bool contains_all(const ElemSet& o) const {
        return (o.w_[0] & ~w_[0]) == 0 && (o.w_[1] & ~w_[1]) == 0;
    }

    // smallest member, -1 when empty
    int min() const {
        if (w_[0]) return __builtin_ctzll(w_[0]);
        if (w_[1]) return 64 + __builtin_ctzll(w_[1]);
        return -1;
    }

    // smallest member strictly greater than i (pass -1 to start), -1 when none
    int next(int i) const {
        ++i;
        if (i < 64) {
            uint64_t rest = w_[0] & ~((i == 0) ? 0 : ((uint64_t{1} << i) - 1));
            if (rest) return __builtin_ctzll(rest);
            i = 64;
        }
        if (i < 128) {
            int j = i - 64;
            uint64_t rest = w_[1] & ~((j == 0) ? 0 : ((uint64_t{1} << j) - 1));
            if (rest) return 64 + __builtin_ctzll(rest);
        }
        return -1;
    }

    friend ElemSet operator&(ElemSet a, const ElemSet& b) {
        a.w_[0] &= b.w_[0];
        a.w_[1] &= b.w_[1];
        return a;
    }
    friend ElemSet operator|(ElemSet a, const ElemSet& b) {
        a.w_[0] |= b.w_[0];
        a.w_[1] |= b.w_[1];
        return a;
    }
    // set difference
    friend ElemSet operator-(ElemSet a, const ElemSet& b) {
        a.w_[0] &= ~b.w_[0];
        a.w_[1] &= ~b.w_[1];
        return a;
    }
    ElemSet& operator|=(const ElemSet& b) {
        w_[0] |= b.w_[0];
        w_[1] |= b.w_[1];
        return *this;
    }
    ElemSet& operator&=(const ElemSet& b) {
        w_[0] &= b.w_[0];
        w_[1] &= b.w_[1];
        return *this;
    }

    bool operator==(const ElemSet& o) const { return w_[0] == o.w_[0] && w_[1] == o.w_[1]; }
    bool operator!=(const ElemSet& o) const { return !(*this == o); }

    std::vector<int> to_vector() const {
        std::vector<int> v;
        v.reserve(static_cast<size_t>(count()));
        for (int i = min(); i >= 0; i = next(i)) v.push_back(i);
        return v;
    }

    uint64_t word(int i) const { return w_[i]; }

private:
    uint64_t w_[2];
};

}  // namespace cscode
