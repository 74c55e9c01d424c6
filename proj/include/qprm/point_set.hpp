#pragma once

#include <bit>
#include <cstddef>
#include <cstdint>
#include <vector>

namespace qprm {

/// Fixed-width set of point indices packed into 64-bit words.
class PointSet {
public:
    PointSet() = default;
    explicit PointSet(std::size_t universe) : universe_(universe), words_((universe + 63) / 64, 0) {}

    std::size_t universe() const noexcept { return universe_; }

    void insert(std::size_t i) noexcept { words_[i >> 6] |= std::uint64_t{1} << (i & 63); }
    void erase(std::size_t i) noexcept { words_[i >> 6] &= ~(std::uint64_t{1} << (i & 63)); }
    bool contains(std::size_t i) const noexcept { return (words_[i >> 6] >> (i & 63)) & 1U; }

    std::size_t size() const noexcept {
        std::size_t n = 0;
        for (auto w : words_) n += static_cast<std::size_t>(std::popcount(w));
        return n;
    }
    bool empty() const noexcept {
        for (auto w : words_) {
            if (w != 0) return false;
        }
        return true;
    }

    bool is_subset_of(const PointSet& other) const noexcept {
        for (std::size_t k = 0; k < words_.size(); ++k) {
            if ((words_[k] & ~other.words_[k]) != 0) return false;
        }
        return true;
    }

    PointSet complement() const {
        PointSet out(universe_);
        for (std::size_t k = 0; k < words_.size(); ++k) out.words_[k] = ~words_[k];
        if (universe_ % 64 != 0 && !out.words_.empty()) {
            out.words_.back() &= (std::uint64_t{1} << (universe_ % 64)) - 1;
        }
        return out;
    }

    std::vector<std::size_t> indices() const {
        std::vector<std::size_t> out;
        for (std::size_t k = 0; k < words_.size(); ++k) {
            std::uint64_t w = words_[k];
            while (w != 0) {
                out.push_back(k * 64 + static_cast<std::size_t>(std::countr_zero(w)));
                w &= w - 1;
            }
        }
        return out;
    }

    const std::vector<std::uint64_t>& words() const noexcept { return words_; }

    friend bool operator==(const PointSet&, const PointSet&) = default;

private:
    std::size_t universe_ = 0;
    std::vector<std::uint64_t> words_;
};

}  // namespace qprm
