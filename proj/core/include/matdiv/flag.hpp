#pragma once

#include <matdiv/linalg.hpp>
#include <matdiv/scalar.hpp>

#include <string>
#include <vector>

namespace matdiv {

// Nested chain of subspaces F_lo ⊆ … ⊆ F_hi of a fixed ambient space,
// extended to all integer indices: F_i = 0 below lo, F_i = F_hi above hi.
// Chains of interest stabilize at the full space on the right.
class Flag {
  public:
    Flag() = default;
    Flag(int ambient, int lo, std::vector<Subspace> chain);

    // Single-step chain F_0 = V.
    static Flag trivial(int ambient);

    int ambient() const { return ambient_; }
    int lo() const { return lo_; }
    int hi() const { return lo_ + static_cast<int>(chain_.size()) - 1; }
    const std::vector<Subspace>& chain() const { return chain_; }

    // Zero below the stored range, the last stored member above it.
    const Subspace& at(int i) const;

    bool nested() const;          // F_i ⊆ F_{i+1} throughout the range
    bool complete_right() const;  // F_hi is the full space

    // Apply an invertible change of coordinates g to every member.
    Flag transformed(const Mat& g) const;

    // Trim leading zero subspaces and the stabilized right tail, so that two
    // chains equal as functions of the index compare equal. An identically
    // zero chain canonicalizes to a single zero step at index 0.
    Flag canonical() const;

    bool operator==(const Flag& o) const;
    bool operator!=(const Flag& o) const { return !(*this == o); }

    std::string str() const;

  private:
    int ambient_ = 0;
    int lo_ = 0;
    std::vector<Subspace> chain_;  // F_lo .. F_hi
    Subspace zero_ = Subspace::zero(0);
};

// One flag per marked point.
struct FlagConfiguration {
    std::vector<Scalar> points;
    std::vector<Flag> flags;  // aligned with points
};

enum class FlagMatchMode {
    pointwise,  // same point sets, flags compared at matching points
    multiset,   // point labels ignored, flags compared as a multiset
};

// True iff g·F_a = F_b member-by-member, with the same single g throughout.
// Pointwise mode demands identical point sets; multiset mode compares the
// collections of chains with multiplicity, ignoring the labels.
bool flags_equal_up_to_shift(const FlagConfiguration& a, const FlagConfiguration& b,
                             const Mat& g, FlagMatchMode mode);

}  // namespace matdiv
