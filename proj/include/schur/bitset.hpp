#pragma once

#include <algorithm>
#include <bit>
#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

namespace schur {

/// Fixed-size bit vector over [0, size), stored in 64-bit words.
///
/// Used as the dense membership index of a subset and as the forbidden-sum
/// mask during search. Bits at positions >= size() are kept clear.
class DenseBitset {
public:
    using Word = std::uint64_t;
    static constexpr std::size_t kWordBits = 64;

    DenseBitset() = default;
    explicit DenseBitset(std::size_t size) : size_(size), words_((size + kWordBits - 1) / kWordBits, 0) {}

    [[nodiscard]] std::size_t size() const noexcept { return size_; }
    [[nodiscard]] std::size_t word_count() const noexcept { return words_.size(); }

    [[nodiscard]] bool test(std::size_t pos) const noexcept {
        return pos < size_ && ((words_[pos / kWordBits] >> (pos % kWordBits)) & 1U) != 0;
    }
    void set(std::size_t pos) noexcept { words_[pos / kWordBits] |= Word{1} << (pos % kWordBits); }
    void reset(std::size_t pos) noexcept { words_[pos / kWordBits] &= ~(Word{1} << (pos % kWordBits)); }

    [[nodiscard]] Word word(std::size_t index) const noexcept { return words_[index]; }
    [[nodiscard]] const std::vector<Word>& words() const noexcept { return words_; }
    /// Overwrites all words from `src`, which must hold word_count() words.
    void assign_words(std::span<const Word> src) noexcept { std::copy(src.begin(), src.begin() + static_cast<std::ptrdiff_t>(words_.size()), words_.begin()); }

    /// Word `index` of (this << shift), i.e. bit p of the result is bit p - shift of this.
    [[nodiscard]] Word shifted_word(std::size_t index, std::size_t shift) const noexcept {
        const std::size_t word_shift = shift / kWordBits;
        const std::size_t bit_shift = shift % kWordBits;
        if (index < word_shift) {
            return 0;
        }
        const std::size_t src = index - word_shift;
        Word value = src < words_.size() ? words_[src] << bit_shift : 0;
        if (bit_shift != 0 && src >= 1 && src - 1 < words_.size()) {
            value |= words_[src - 1] >> (kWordBits - bit_shift);
        }
        return value;
    }

    /// this |= (other << shift), truncated to size().
    void or_shifted(const DenseBitset& other, std::size_t shift) noexcept {
        for (std::size_t i = shift / kWordBits; i < words_.size(); ++i) {
            words_[i] |= other.shifted_word(i, shift);
        }
        clear_tail();
    }

    [[nodiscard]] std::size_t count() const noexcept {
        std::size_t total = 0;
        for (Word w : words_) {
            total += static_cast<std::size_t>(std::popcount(w));
        }
        return total;
    }

    friend bool operator==(const DenseBitset&, const DenseBitset&) = default;

private:
    void clear_tail() noexcept {
        if (const std::size_t rem = size_ % kWordBits; rem != 0 && !words_.empty()) {
            words_.back() &= (Word{1} << rem) - 1;
        }
    }

    std::size_t size_ = 0;
    std::vector<Word> words_;
};

}  // namespace schur
