#pragma once

#include <bit>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <span>
#include <vector>

namespace relaxlab {

// Fixed-width bit set over a task's fact ids. Width is fixed at construction;
// all binary operations require operands of equal width.
class FactSet {
    std::vector<std::uint64_t> words_;
    std::size_t size_ = 0;

    static constexpr std::size_t word_count(std::size_t bits) {
        return (bits + 63) / 64;
    }

public:
    FactSet() = default;
    explicit FactSet(std::size_t size) : words_(word_count(size), 0), size_(size) {}
    FactSet(std::size_t size, std::span<const int> ids) : FactSet(size) {
        for (int id : ids)
            insert(id);
    }

    std::size_t universe_size() const { return size_; }

    bool contains(int id) const {
        return (words_[static_cast<std::size_t>(id) >> 6] >> (id & 63)) & 1u;
    }
    void insert(int id) { words_[static_cast<std::size_t>(id) >> 6] |= std::uint64_t{1} << (id & 63); }
    void erase(int id) { words_[static_cast<std::size_t>(id) >> 6] &= ~(std::uint64_t{1} << (id & 63)); }

    std::size_t count() const {
        std::size_t n = 0;
        for (auto w : words_)
            n += static_cast<std::size_t>(std::popcount(w));
        return n;
    }
    bool empty() const {
        for (auto w : words_)
            if (w)
                return false;
        return true;
    }

    bool is_subset_of(const FactSet &other) const {
        for (std::size_t i = 0; i < words_.size(); ++i)
            if (words_[i] & ~other.words_[i])
                return false;
        return true;
    }
    bool intersects(const FactSet &other) const {
        for (std::size_t i = 0; i < words_.size(); ++i)
            if (words_[i] & other.words_[i])
                return true;
        return false;
    }

    FactSet &operator|=(const FactSet &other) {
        for (std::size_t i = 0; i < words_.size(); ++i)
            words_[i] |= other.words_[i];
        return *this;
    }
    FactSet &operator&=(const FactSet &other) {
        for (std::size_t i = 0; i < words_.size(); ++i)
            words_[i] &= other.words_[i];
        return *this;
    }
    // Set difference.
    FactSet &operator-=(const FactSet &other) {
        for (std::size_t i = 0; i < words_.size(); ++i)
            words_[i] &= ~other.words_[i];
        return *this;
    }
    friend FactSet operator|(FactSet a, const FactSet &b) { return a |= b; }
    friend FactSet operator&(FactSet a, const FactSet &b) { return a &= b; }
    friend FactSet operator-(FactSet a, const FactSet &b) { return a -= b; }

    friend bool operator==(const FactSet &a, const FactSet &b) = default;
    friend auto operator<=>(const FactSet &a, const FactSet &b) {
        return a.words_ <=> b.words_;
    }

    template<typename F>
    void for_each(F &&f) const {
        for (std::size_t i = 0; i < words_.size(); ++i) {
            std::uint64_t w = words_[i];
            while (w) {
                int bit = std::countr_zero(w);
                f(static_cast<int>(i * 64 + static_cast<std::size_t>(bit)));
                w &= w - 1;
            }
        }
    }

    std::vector<int> to_vector() const {
        std::vector<int> out;
        for_each([&](int id) { out.push_back(id); });
        return out;
    }

    std::size_t hash() const {
        std::uint64_t h = 0x9e3779b97f4a7c15ull ^ size_;
        for (auto w : words_) {
            h ^= w + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
        }
        return static_cast<std::size_t>(h);
    }
};

} // namespace relaxlab

template<>
struct std::hash<relaxlab::FactSet> {
    std::size_t operator()(const relaxlab::FactSet &s) const noexcept { return s.hash(); }
};
