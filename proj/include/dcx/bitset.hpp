#pragma once

#include <bit>
#include <cassert>
#include <cstdint>
#include <functional>
#include <stdexcept>
#include <string>
#include <vector>

namespace dcx {

// Fixed-length bit vector. Sets over ground sets of at most 64 elements run
// entirely on one machine word; larger sets fall back to the word-array loop.
class Bitset {
public:
    Bitset() = default;
    explicit Bitset(int nbits) : nbits_(nbits), words_((nbits + 63) / 64, 0) {
        assert(nbits >= 0);
    }

    static Bitset full(int nbits) {
        Bitset b(nbits);
        for (auto& w : b.words_) w = ~uint64_t{0};
        b.trim();
        return b;
    }

    int size() const { return nbits_; }
    bool empty_domain() const { return nbits_ == 0; }

    bool test(int i) const {
        assert(i >= 0 && i < nbits_);
        return (words_[i >> 6] >> (i & 63)) & 1;
    }
    void set(int i, bool v = true) {
        assert(i >= 0 && i < nbits_);
        if (v)
            words_[i >> 6] |= uint64_t{1} << (i & 63);
        else
            words_[i >> 6] &= ~(uint64_t{1} << (i & 63));
    }

    int count() const {
        if (single()) return std::popcount(words_[0]);
        int c = 0;
        for (uint64_t w : words_) c += std::popcount(w);
        return c;
    }
    bool none() const {
        for (uint64_t w : words_)
            if (w) return false;
        return true;
    }
    bool any() const { return !none(); }

    Bitset operator&(const Bitset& o) const {
        assert(nbits_ == o.nbits_);
        Bitset r(nbits_);
        if (single()) {
            r.words_[0] = words_[0] & o.words_[0];
            return r;
        }
        for (size_t k = 0; k < words_.size(); ++k) r.words_[k] = words_[k] & o.words_[k];
        return r;
    }
    Bitset operator|(const Bitset& o) const {
        assert(nbits_ == o.nbits_);
        Bitset r(nbits_);
        if (single()) {
            r.words_[0] = words_[0] | o.words_[0];
            return r;
        }
        for (size_t k = 0; k < words_.size(); ++k) r.words_[k] = words_[k] | o.words_[k];
        return r;
    }
    Bitset& operator&=(const Bitset& o) {
        assert(nbits_ == o.nbits_);
        for (size_t k = 0; k < words_.size(); ++k) words_[k] &= o.words_[k];
        return *this;
    }
    Bitset& operator|=(const Bitset& o) {
        assert(nbits_ == o.nbits_);
        for (size_t k = 0; k < words_.size(); ++k) words_[k] |= o.words_[k];
        return *this;
    }
    // Complement with respect to the full domain of nbits_ elements.
    Bitset operator~() const {
        Bitset r(nbits_);
        for (size_t k = 0; k < words_.size(); ++k) r.words_[k] = ~words_[k];
        r.trim();
        return r;
    }
    Bitset minus(const Bitset& o) const {
        assert(nbits_ == o.nbits_);
        Bitset r(nbits_);
        for (size_t k = 0; k < words_.size(); ++k) r.words_[k] = words_[k] & ~o.words_[k];
        return r;
    }

    bool subset_of(const Bitset& o) const {
        assert(nbits_ == o.nbits_);
        if (single()) return (words_[0] & ~o.words_[0]) == 0;
        for (size_t k = 0; k < words_.size(); ++k)
            if (words_[k] & ~o.words_[k]) return false;
        return true;
    }
    bool intersects(const Bitset& o) const {
        assert(nbits_ == o.nbits_);
        if (single()) return (words_[0] & o.words_[0]) != 0;
        for (size_t k = 0; k < words_.size(); ++k)
            if (words_[k] & o.words_[k]) return true;
        return false;
    }

    bool operator==(const Bitset& o) const { return nbits_ == o.nbits_ && words_ == o.words_; }
    bool operator!=(const Bitset& o) const { return !(*this == o); }

    // Order matching the canonical 0/1-string serialization: the first
    // differing element decides, a 0 there sorts first.
    bool operator<(const Bitset& o) const {
        assert(nbits_ == o.nbits_);
        for (size_t k = 0; k < words_.size(); ++k) {
            uint64_t d = words_[k] ^ o.words_[k];
            if (d) {
                int b = std::countr_zero(d);
                return ((words_[k] >> b) & 1) == 0;
            }
        }
        return false;
    }

    // Lowest set bit index, -1 when empty.
    int first() const {
        for (size_t k = 0; k < words_.size(); ++k)
            if (words_[k]) return int(k) * 64 + std::countr_zero(words_[k]);
        return -1;
    }
    // Next set bit strictly after i, -1 when exhausted.
    int next(int i) const {
        ++i;
        if (i >= nbits_) return -1;
        size_t k = size_t(i) >> 6;
        uint64_t w = words_[k] & (~uint64_t{0} << (i & 63));
        while (true) {
            if (w) return int(k) * 64 + std::countr_zero(w);
            if (++k >= words_.size()) return -1;
            w = words_[k];
        }
    }

    std::vector<int> elements() const {
        std::vector<int> v;
        v.reserve(count());
        for (int i = first(); i >= 0; i = next(i)) v.push_back(i);
        return v;
    }

    // Low word; only meaningful when size() <= 64.
    uint64_t word0() const { return words_.empty() ? 0 : words_[0]; }
    static Bitset from_word(int nbits, uint64_t w) {
        assert(nbits <= 64);
        Bitset b(nbits);
        if (!b.words_.empty()) b.words_[0] = w;
        b.trim();
        return b;
    }

    std::string to_string() const {
        std::string s(nbits_, '0');
        for (int i = 0; i < nbits_; ++i)
            if (test(i)) s[i] = '1';
        return s;
    }
    static Bitset from_string(const std::string& s) {
        Bitset b(int(s.size()));
        for (size_t i = 0; i < s.size(); ++i) {
            if (s[i] == '1')
                b.set(int(i));
            else if (s[i] != '0')
                throw std::invalid_argument("bit string must contain only 0/1");
        }
        return b;
    }

    size_t hash() const {
        size_t h = std::hash<int>{}(nbits_);
        for (uint64_t w : words_) h = h * 0x9e3779b97f4a7c15ull + std::hash<uint64_t>{}(w);
        return h;
    }

private:
    bool single() const { return words_.size() == 1; }
    void trim() {
        if ((nbits_ & 63) != 0 && !words_.empty())
            words_.back() &= (~uint64_t{0}) >> (64 - (nbits_ & 63));
    }

    int nbits_ = 0;
    std::vector<uint64_t> words_;
};

struct BitsetHash {
    size_t operator()(const Bitset& b) const { return b.hash(); }
};

}  // namespace dcx
