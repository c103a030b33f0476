#pragma once

#include <array>
#include <bit>
#include <cstddef>
#include <cstdint>
#include <vector>

namespace mscensus {

// A set of comparable pairs of one poset, stored as a flat bit set indexed by
// the poset's canonical enumeration of Rels. The owning poset is identified by
// its id so that mixing classes of different posets is caught.
class MorphismClass {
public:
    // 64 elements give at most 64*65/2 = 2080 comparable pairs.
    static constexpr std::size_t kMaxWords = 33;

    MorphismClass() = default;
    MorphismClass(std::uint64_t poset_id, std::size_t rel_count);

    [[nodiscard]] std::uint64_t poset_id() const { return poset_id_; }
    [[nodiscard]] std::size_t rel_count() const { return rel_count_; }

    [[nodiscard]] bool contains(std::size_t rel) const
    {
        return (bits_[rel >> 6] >> (rel & 63)) & 1u;
    }
    void insert(std::size_t rel) { bits_[rel >> 6] |= std::uint64_t{1} << (rel & 63); }
    void erase(std::size_t rel) { bits_[rel >> 6] &= ~(std::uint64_t{1} << (rel & 63)); }
    void set(std::size_t rel, bool value) { value ? insert(rel) : erase(rel); }

    [[nodiscard]] std::size_t count() const;
    [[nodiscard]] bool empty() const;
    [[nodiscard]] bool subset_of(const MorphismClass& other) const;
    [[nodiscard]] bool intersects(const MorphismClass& other) const;

    MorphismClass& operator&=(const MorphismClass& other);
    MorphismClass& operator|=(const MorphismClass& other);
    MorphismClass& operator-=(const MorphismClass& other);

    friend MorphismClass operator&(MorphismClass a, const MorphismClass& b) { return a &= b; }
    friend MorphismClass operator|(MorphismClass a, const MorphismClass& b) { return a |= b; }
    friend MorphismClass operator-(MorphismClass a, const MorphismClass& b) { return a -= b; }

    // Complement relative to all comparable pairs.
    [[nodiscard]] MorphismClass complement() const;

    friend bool operator==(const MorphismClass& a, const MorphismClass& b);

    // Lexicographic comparison of the member index vectors; used for sorting.
    friend bool operator<(const MorphismClass& a, const MorphismClass& b);

    template <typename Fn>
    void for_each(Fn&& fn) const
    {
        for (std::size_t w = 0; w < words(); ++w) {
            std::uint64_t word = bits_[w];
            while (word != 0) {
                const int bit = std::countr_zero(word);
                fn(w * 64 + static_cast<std::size_t>(bit));
                word &= word - 1;
            }
        }
    }

    [[nodiscard]] std::vector<std::size_t> members() const;

    [[nodiscard]] std::size_t words() const { return (rel_count_ + 63) / 64; }
    [[nodiscard]] std::uint64_t word(std::size_t w) const { return bits_[w]; }

private:
    void check_compatible(const MorphismClass& other) const;

    std::uint64_t poset_id_ = 0;
    std::size_t rel_count_ = 0;
    std::array<std::uint64_t, kMaxWords> bits_{};
};

} // namespace mscensus
