#pragma once

#include <cassert>
#include <cstdint>
#include <functional>
#include <string>
#include <vector>

namespace clutterlab {

/// Fixed-universe set of vertex indices backed by 64-bit words.
/// One word covers the common case (n <= 64); wider universes fall back to
/// additional words transparently.
class VertexSet {
public:
    VertexSet() : n_(0) {}
    explicit VertexSet(int universe) : n_(universe), words_((universe + 63) / 64, 0) {
        assert(universe >= 0);
    }
    VertexSet(int universe, std::initializer_list<int> members) : VertexSet(universe) {
        for (int v : members) set(v);
    }

    static VertexSet of(int universe, const std::vector<int>& members) {
        VertexSet s(universe);
        for (int v : members) s.set(v);
        return s;
    }
    static VertexSet full(int universe) {
        VertexSet s(universe);
        for (int v = 0; v < universe; ++v) s.set(v);
        return s;
    }

    int universe() const { return n_; }

    bool test(int v) const {
        assert(v >= 0 && v < n_);
        return (words_[v >> 6] >> (v & 63)) & 1u;
    }
    void set(int v) {
        assert(v >= 0 && v < n_);
        words_[v >> 6] |= uint64_t(1) << (v & 63);
    }
    void reset(int v) {
        assert(v >= 0 && v < n_);
        words_[v >> 6] &= ~(uint64_t(1) << (v & 63));
    }

    int count() const {
        int c = 0;
        for (uint64_t w : words_) c += __builtin_popcountll(w);
        return c;
    }
    bool empty() const {
        for (uint64_t w : words_)
            if (w) return false;
        return true;
    }

    /// Smallest member, or -1 when empty.
    int min() const {
        for (size_t i = 0; i < words_.size(); ++i)
            if (words_[i]) return int(i * 64 + __builtin_ctzll(words_[i]));
        return -1;
    }
    /// Largest member, or -1 when empty.
    int max() const {
        for (size_t i = words_.size(); i-- > 0;)
            if (words_[i]) return int(i * 64 + 63 - __builtin_clzll(words_[i]));
        return -1;
    }

    bool is_subset_of(const VertexSet& o) const {
        assert(n_ == o.n_);
        for (size_t i = 0; i < words_.size(); ++i)
            if (words_[i] & ~o.words_[i]) return false;
        return true;
    }
    bool intersects(const VertexSet& o) const {
        assert(n_ == o.n_);
        for (size_t i = 0; i < words_.size(); ++i)
            if (words_[i] & o.words_[i]) return true;
        return false;
    }

    VertexSet& operator|=(const VertexSet& o) {
        assert(n_ == o.n_);
        for (size_t i = 0; i < words_.size(); ++i) words_[i] |= o.words_[i];
        return *this;
    }
    VertexSet& operator&=(const VertexSet& o) {
        assert(n_ == o.n_);
        for (size_t i = 0; i < words_.size(); ++i) words_[i] &= o.words_[i];
        return *this;
    }
    VertexSet& operator-=(const VertexSet& o) {
        assert(n_ == o.n_);
        for (size_t i = 0; i < words_.size(); ++i) words_[i] &= ~o.words_[i];
        return *this;
    }
    friend VertexSet operator|(VertexSet a, const VertexSet& b) { return a |= b; }
    friend VertexSet operator&(VertexSet a, const VertexSet& b) { return a &= b; }
    friend VertexSet operator-(VertexSet a, const VertexSet& b) { return a -= b; }

    /// Complement within the universe.
    VertexSet complemented() const {
        VertexSet s(n_);
        for (size_t i = 0; i < words_.size(); ++i) s.words_[i] = ~words_[i];
        s.trim();
        return s;
    }

    bool operator==(const VertexSet& o) const { return n_ == o.n_ && words_ == o.words_; }
    bool operator!=(const VertexSet& o) const { return !(*this == o); }

    /// Members in ascending order.
    std::vector<int> members() const {
        std::vector<int> out;
        out.reserve(count());
        for (size_t i = 0; i < words_.size(); ++i) {
            uint64_t w = words_[i];
            while (w) {
                out.push_back(int(i * 64 + __builtin_ctzll(w)));
                w &= w - 1;
            }
        }
        return out;
    }

    template <typename F>
    void for_each(F&& f) const {
        for (size_t i = 0; i < words_.size(); ++i) {
            uint64_t w = words_[i];
            while (w) {
                f(int(i * 64 + __builtin_ctzll(w)));
                w &= w - 1;
            }
        }
    }

    /// Lexicographic order on the ascending member sequences. This is the
    /// order used whenever "lexicographically least" subsets are required.
    static bool lex_less(const VertexSet& a, const VertexSet& b) {
        assert(a.n_ == b.n_);
        for (size_t i = 0; i < a.words_.size(); ++i) {
            uint64_t d = a.words_[i] ^ b.words_[i];
            if (d) {
                uint64_t low = d & ~(d - 1);
                return a.words_[i] & low;  // a owns the smallest differing element
            }
        }
        return false;
    }

    uint64_t hash_mix(uint64_t h) const {
        for (uint64_t w : words_) {
            h ^= w;
            h *= 0x100000001b3ull;
        }
        return h;
    }

    std::string to_string() const {
        std::string s = "{";
        bool first = true;
        for (int v : members()) {
            if (!first) s += ",";
            s += std::to_string(v);
            first = false;
        }
        return s + "}";
    }

private:
    void trim() {
        int extra = int(words_.size()) * 64 - n_;
        if (extra > 0 && !words_.empty()) words_.back() &= ~uint64_t(0) >> extra;
    }

    int n_;
    std::vector<uint64_t> words_;
};

/// Visits every k-subset of `pool` (ascending vertex list) in lexicographic
/// order; `f` returns false to stop early.
template <typename F>
void for_each_subset_of(const std::vector<int>& pool, int k, int universe, F&& f) {
    if (k < 0 || k > int(pool.size())) return;
    std::vector<int> idx(k);
    for (int i = 0; i < k; ++i) idx[i] = i;
    while (true) {
        VertexSet s(universe);
        for (int i : idx) s.set(pool[i]);
        if (!f(s)) return;
        int i = k - 1;
        while (i >= 0 && idx[i] == int(pool.size()) - k + i) --i;
        if (i < 0) return;
        ++idx[i];
        for (int j = i + 1; j < k; ++j) idx[j] = idx[j - 1] + 1;
    }
}

}  // namespace clutterlab
