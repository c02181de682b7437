#pragma once

#include <cassert>
#include <compare>
#include <cstdint>
#include <vector>

namespace ringlab {

// Canonical element handle: an index into the owning ring's universe.
// Only meaningful together with that ring; equality is index equality.
// Deliberately trivially constructible: the arithmetic kernels keep arrays of
// these on the stack and overwrite them wholesale.
struct Elem {
    std::uint64_t v;

    friend constexpr bool operator==(Elem, Elem) = default;
    friend constexpr auto operator<=>(Elem, Elem) = default;
};

// Dense subset of a ring universe. Keeps a membership mask plus the sorted
// member list so hot loops get O(1) membership and reports get stable order.
class ElemSet {
  public:
    ElemSet() = default;
    explicit ElemSet(std::uint64_t universe) : mask_(universe, false) {}

    static ElemSet from_members(std::uint64_t universe, std::vector<Elem> sorted_members) {
        ElemSet s(universe);
        for (Elem e : sorted_members) {
            assert(e.v < universe);
            s.mask_[e.v] = true;
        }
        s.members_ = std::move(sorted_members);
        return s;
    }

    // Members must be inserted in ascending index order.
    void insert(Elem e) {
        assert(e.v < mask_.size());
        assert(members_.empty() || members_.back().v < e.v);
        mask_[e.v] = true;
        members_.push_back(e);
    }

    bool contains(Elem e) const { return e.v < mask_.size() && mask_[e.v]; }
    std::size_t size() const { return members_.size(); }
    bool empty() const { return members_.empty(); }
    std::uint64_t universe() const { return mask_.size(); }
    const std::vector<Elem>& members() const { return members_; }

    friend bool operator==(const ElemSet& a, const ElemSet& b) {
        return a.mask_.size() == b.mask_.size() && a.members_ == b.members_;
    }

  private:
    std::vector<bool> mask_;
    std::vector<Elem> members_;
};

}  // namespace ringlab
