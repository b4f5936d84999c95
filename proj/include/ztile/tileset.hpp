#pragma once

#include <cstdint>
#include <vector>

#include "ztile/intpoly.hpp"

namespace ztile {

// Finite nonempty set of nonnegative integers in canonical strictly
// increasing form. Construction sorts and validates; duplicates are rejected
// rather than silently merged.
class TileSet {
public:
    explicit TileSet(std::vector<std::int64_t> elements);

    static TileSet singleton_zero() { return TileSet({0}); }

    std::int64_t size() const noexcept { return static_cast<std::int64_t>(elems_.size()); }
    std::int64_t min() const noexcept { return elems_.front(); }
    std::int64_t max() const noexcept { return elems_.back(); }
    std::int64_t diameter() const noexcept { return max() - min(); }
    bool contains(std::int64_t v) const;
    const std::vector<std::int64_t>& elements() const noexcept { return elems_; }

    // {k} + A; k may be negative as long as all elements stay nonnegative.
    TileSet translated(std::int64_t k) const;
    // Translate so that min = 0.
    TileSet normalized() const { return translated(-min()); }
    // kA for k >= 1.
    TileSet scaled(std::int64_t k) const;
    // gcd of the elements (gcd 0 for {0}).
    std::int64_t elements_gcd() const;

    bool operator==(const TileSet& rhs) const = default;
    auto operator<=>(const TileSet& rhs) const = default;

    std::string str() const;

private:
    std::vector<std::int64_t> elems_;
};

// Mask polynomial: coefficient of x^a is 1 exactly for a in A.
IntPoly mask_poly(const TileSet& A);

// Inverse of mask_poly; the polynomial must have all coefficients in {0, 1}.
TileSet tile_from_mask(const IntPoly& f);

// A + B requiring every sum to be unique (throws otherwise). Handy for
// assembling sets in tests and in the family enumeration.
TileSet direct_sum(const TileSet& a, const TileSet& b);

}  // namespace ztile
