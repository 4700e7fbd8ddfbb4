#pragma once

#include <bit>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <stdexcept>
#include <vector>

namespace cnctp {

// Fixed-size runtime bitset backed by 64-bit words. Bits past size() are kept at zero,
// so word-wise comparisons and popcounts need no masking.
class bitset {
public:
    using word_type = std::uint64_t;
    static constexpr std::size_t word_bits = 64;

    bitset() = default;
    explicit bitset(std::size_t size, bool value = false)
        : size_(size), words_((size + word_bits - 1) / word_bits, value ? ~word_type{0} : 0) {
        trim();
    }

    static bitset from_indices(std::size_t size, std::initializer_list<std::size_t> indices) {
        bitset out(size);
        for (auto i : indices) out.set(i);
        return out;
    }

    template <typename Range>
    static bitset from_range(std::size_t size, const Range& indices) {
        bitset out(size);
        for (auto i : indices) out.set(static_cast<std::size_t>(i));
        return out;
    }

    std::size_t size() const noexcept { return size_; }
    bool empty_set() const noexcept {
        for (auto w : words_)
            if (w) return false;
        return true;
    }

    bool test(std::size_t i) const {
        check(i);
        return (words_[i / word_bits] >> (i % word_bits)) & 1u;
    }
    bool operator[](std::size_t i) const { return test(i); }

    bitset& set(std::size_t i, bool value = true) {
        check(i);
        const word_type mask = word_type{1} << (i % word_bits);
        if (value)
            words_[i / word_bits] |= mask;
        else
            words_[i / word_bits] &= ~mask;
        return *this;
    }
    bitset& reset(std::size_t i) { return set(i, false); }

    bitset& set_all() {
        for (auto& w : words_) w = ~word_type{0};
        trim();
        return *this;
    }

    std::size_t count() const noexcept {
        std::size_t n = 0;
        for (auto w : words_) n += static_cast<std::size_t>(std::popcount(w));
        return n;
    }

    bitset& operator&=(const bitset& o) {
        same_size(o);
        for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= o.words_[i];
        return *this;
    }
    bitset& operator|=(const bitset& o) {
        same_size(o);
        for (std::size_t i = 0; i < words_.size(); ++i) words_[i] |= o.words_[i];
        return *this;
    }
    friend bitset operator&(bitset a, const bitset& b) { return a &= b; }
    friend bitset operator|(bitset a, const bitset& b) { return a |= b; }

    bool is_subset_of(const bitset& o) const {
        same_size(o);
        for (std::size_t i = 0; i < words_.size(); ++i)
            if (words_[i] & ~o.words_[i]) return false;
        return true;
    }

    // Index of the first set bit at or after `from`, or size() when there is none.
    std::size_t find_next(std::size_t from) const noexcept {
        if (from >= size_) return size_;
        std::size_t wi = from / word_bits;
        word_type w = words_[wi] & (~word_type{0} << (from % word_bits));
        while (true) {
            if (w) return wi * word_bits + static_cast<std::size_t>(std::countr_zero(w));
            if (++wi == words_.size()) return size_;
            w = words_[wi];
        }
    }
    std::size_t find_first() const noexcept { return find_next(0); }

    std::vector<std::size_t> indices() const {
        std::vector<std::size_t> out;
        out.reserve(count());
        for (auto i = find_first(); i < size_; i = find_next(i + 1)) out.push_back(i);
        return out;
    }

    friend bool operator==(const bitset&, const bitset&) = default;

    // Lexicographic order on the sorted index lists; shorter prefix sorts first.
    friend bool lex_less(const bitset& a, const bitset& b) {
        auto i = a.find_first();
        auto j = b.find_first();
        while (i < a.size_ && j < b.size_) {
            if (i != j) return i < j;
            i = a.find_next(i + 1);
            j = b.find_next(j + 1);
        }
        return i >= a.size_ && j < b.size_;
    }

    const std::vector<word_type>& words() const noexcept { return words_; }

private:
    void check(std::size_t i) const {
        if (i >= size_) throw std::out_of_range("bit index " + std::to_string(i) + " out of range");
    }
    void same_size(const bitset& o) const {
        if (o.size_ != size_) throw std::invalid_argument("bitset size mismatch");
    }
    void trim() {
        if (size_ % word_bits && !words_.empty())
            words_.back() &= (word_type{1} << (size_ % word_bits)) - 1;
    }

    std::size_t size_ = 0;
    std::vector<word_type> words_;
};

} // namespace cnctp
