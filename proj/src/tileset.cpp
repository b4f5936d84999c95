#include "ztile/tileset.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <sstream>
#include <stdexcept>

namespace ztile {

namespace {
// Mask polynomials are dense in the largest element; refuse sets that would
// silently allocate gigabytes.
constexpr std::int64_t kMaxMaskExponent = 2'000'000;
}  // namespace

TileSet::TileSet(std::vector<std::int64_t> elements) : elems_(std::move(elements)) {
    if (elems_.empty()) throw std::invalid_argument("TileSet: empty set");
    std::sort(elems_.begin(), elems_.end());
    if (elems_.front() < 0) throw std::invalid_argument("TileSet: negative element");
    if (std::adjacent_find(elems_.begin(), elems_.end()) != elems_.end())
        throw std::invalid_argument("TileSet: duplicate element");
}

bool TileSet::contains(std::int64_t v) const {
    return std::binary_search(elems_.begin(), elems_.end(), v);
}

TileSet TileSet::translated(std::int64_t k) const {
    std::vector<std::int64_t> out;
    out.reserve(elems_.size());
    for (std::int64_t a : elems_) out.push_back(a + k);
    return TileSet(std::move(out));
}

TileSet TileSet::scaled(std::int64_t k) const {
    if (k < 1) throw std::invalid_argument("TileSet::scaled: k must be >= 1");
    std::vector<std::int64_t> out;
    out.reserve(elems_.size());
    for (std::int64_t a : elems_) out.push_back(a * k);
    return TileSet(std::move(out));
}

std::int64_t TileSet::elements_gcd() const {
    std::int64_t g = 0;
    for (std::int64_t a : elems_) g = std::gcd(g, a);
    return g;
}

std::string TileSet::str() const {
    std::ostringstream os;
    os << '{';
    for (std::size_t i = 0; i < elems_.size(); ++i) {
        if (i) os << ',';
        os << elems_[i];
    }
    os << '}';
    return os.str();
}

IntPoly mask_poly(const TileSet& A) {
    if (A.max() > kMaxMaskExponent)
        throw std::invalid_argument("mask_poly: element too large");
    std::vector<mpz_class> c(static_cast<std::size_t>(A.max()) + 1);
    for (std::int64_t a : A.elements()) c[static_cast<std::size_t>(a)] = 1;
    return IntPoly(std::move(c));
}

TileSet tile_from_mask(const IntPoly& f) {
    if (f.is_zero()) throw std::invalid_argument("tile_from_mask: zero polynomial");
    std::vector<std::int64_t> out;
    const auto& c = f.coeffs();
    for (std::size_t d = 0; d < c.size(); ++d) {
        if (c[d] == 0) continue;
        if (c[d] != 1) throw std::invalid_argument("tile_from_mask: coefficient not 0/1");
        out.push_back(static_cast<std::int64_t>(d));
    }
    return TileSet(std::move(out));
}

TileSet direct_sum(const TileSet& a, const TileSet& b) {
    std::set<std::int64_t> sums;
    for (std::int64_t x : a.elements())
        for (std::int64_t y : b.elements())
            if (!sums.insert(x + y).second)
                throw std::invalid_argument("direct_sum: sum " + std::to_string(x + y) +
                                            " is not unique");
    return TileSet(std::vector<std::int64_t>(sums.begin(), sums.end()));
}

}  // namespace ztile
