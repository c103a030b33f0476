#include "mscensus/morphism_class.hpp"

#include "mscensus/errors.hpp"

namespace mscensus {

MorphismClass::MorphismClass(std::uint64_t poset_id, std::size_t rel_count)
    : poset_id_(poset_id), rel_count_(rel_count)
{
    if (rel_count > kMaxWords * 64) {
        throw size_limit_error("morphism class: too many comparable pairs");
    }
}

std::size_t MorphismClass::count() const
{
    std::size_t n = 0;
    for (std::size_t w = 0; w < words(); ++w) {
        n += static_cast<std::size_t>(std::popcount(bits_[w]));
    }
    return n;
}

bool MorphismClass::empty() const
{
    for (std::size_t w = 0; w < words(); ++w) {
        if (bits_[w] != 0) {
            return false;
        }
    }
    return true;
}

void MorphismClass::check_compatible(const MorphismClass& other) const
{
    if (poset_id_ != other.poset_id_ || rel_count_ != other.rel_count_) {
        throw argument_error("morphism classes belong to different posets");
    }
}

bool MorphismClass::subset_of(const MorphismClass& other) const
{
    check_compatible(other);
    for (std::size_t w = 0; w < words(); ++w) {
        if ((bits_[w] & ~other.bits_[w]) != 0) {
            return false;
        }
    }
    return true;
}

bool MorphismClass::intersects(const MorphismClass& other) const
{
    check_compatible(other);
    for (std::size_t w = 0; w < words(); ++w) {
        if ((bits_[w] & other.bits_[w]) != 0) {
            return true;
        }
    }
    return false;
}

MorphismClass& MorphismClass::operator&=(const MorphismClass& other)
{
    check_compatible(other);
    for (std::size_t w = 0; w < words(); ++w) {
        bits_[w] &= other.bits_[w];
    }
    return *this;
}

MorphismClass& MorphismClass::operator|=(const MorphismClass& other)
{
    check_compatible(other);
    for (std::size_t w = 0; w < words(); ++w) {
        bits_[w] |= other.bits_[w];
    }
    return *this;
}

MorphismClass& MorphismClass::operator-=(const MorphismClass& other)
{
    check_compatible(other);
    for (std::size_t w = 0; w < words(); ++w) {
        bits_[w] &= ~other.bits_[w];
    }
    return *this;
}

MorphismClass MorphismClass::complement() const
{
    MorphismClass out(poset_id_, rel_count_);
    for (std::size_t w = 0; w < words(); ++w) {
        out.bits_[w] = ~bits_[w];
    }
    const std::size_t tail = rel_count_ & 63;
    if (tail != 0) {
        out.bits_[words() - 1] &= (std::uint64_t{1} << tail) - 1;
    }
    return out;
}

bool operator==(const MorphismClass& a, const MorphismClass& b)
{
    if (a.poset_id_ != b.poset_id_ || a.rel_count_ != b.rel_count_) {
        return false;
    }
    for (std::size_t w = 0; w < a.words(); ++w) {
        if (a.bits_[w] != b.bits_[w]) {
            return false;
        }
    }
    return true;
}

bool operator<(const MorphismClass& a, const MorphismClass& b)
{
    const auto ma = a.members();
    const auto mb = b.members();
    return ma < mb;
}

std::vector<std::size_t> MorphismClass::members() const
{
    std::vector<std::size_t> out;
    out.reserve(count());
    for_each([&](std::size_t r) { out.push_back(r); });
    return out;
}

} // namespace mscensus
