#pragma once

#include <bit>
#include <cstddef>
#include <cstdint>
#include <vector>

namespace scalabfs {

/// Fixed-size bitmap with one bit per vertex. Backing store is 64-bit
/// words so popcount and clear are cheap.
class Bitmap {
public:
    Bitmap() = default;
    explicit Bitmap(std::size_t nbits) : nbits_(nbits), words_((nbits + 63) / 64, 0) {}

    std::size_t size() const { return nbits_; }

    bool get(std::size_t i) const { return (words_[i >> 6] >> (i & 63)) & 1u; }

    void set(std::size_t i) { words_[i >> 6] |= std::uint64_t{1} << (i & 63); }

    void reset(std::size_t i) { words_[i >> 6] &= ~(std::uint64_t{1} << (i & 63)); }

    void clear() { std::fill(words_.begin(), words_.end(), 0); }

    std::size_t popcount() const {
        std::size_t n = 0;
        for (std::uint64_t w : words_) n += static_cast<std::size_t>(std::popcount(w));
        return n;
    }

    bool any() const {
        for (std::uint64_t w : words_)
            if (w != 0) return true;
        return false;
    }

    void swap(Bitmap& other) noexcept {
        words_.swap(other.words_);
        std::swap(nbits_, other.nbits_);
    }

    friend bool operator==(const Bitmap&, const Bitmap&) = default;

private:
    std::size_t nbits_ = 0;
    std::vector<std::uint64_t> words_;
};

}  // namespace scalabfs
