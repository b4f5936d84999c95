#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace ztile {

// Dense polynomial over Z with arbitrary-precision coefficients.
// coeff(d) is the coefficient of x^d. The zero polynomial stores nothing;
// asking for its degree is a logic error and throws.
class IntPoly {
public:
    IntPoly() = default;
    explicit IntPoly(std::vector<mpz_class> coeffs);

    static IntPoly zero() { return IntPoly(); }
    static IntPoly one();
    static IntPoly monomial(std::int64_t degree, mpz_class coeff = 1);
    // x^n - 1
    static IntPoly power_minus_one(std::int64_t n);
    // 1 + x + ... + x^{n-1}
    static IntPoly all_ones(std::int64_t n);

    bool is_zero() const noexcept { return coeffs_.empty(); }
    std::int64_t degree() const;  // throws std::logic_error on the zero polynomial
    const mpz_class& coeff(std::int64_t d) const;  // zero beyond the degree
    const std::vector<mpz_class>& coeffs() const noexcept { return coeffs_; }

    // Sum of coefficients, i.e. the value at x = 1.
    mpz_class eval_one() const;

    bool is_zero_one() const;  // all coefficients in {0, 1}

    IntPoly operator+(const IntPoly& rhs) const;
    IntPoly operator-(const IntPoly& rhs) const;
    IntPoly operator*(const IntPoly& rhs) const;
    bool operator==(const IntPoly& rhs) const = default;

    std::string str() const;  // for diagnostics

private:
    void trim();
    std::vector<mpz_class> coeffs_;
};

// The s-th cyclotomic polynomial with exact integer coefficients, obtained by
// repeated exact division from x^s - 1. Memoized; observationally pure.
IntPoly cyclotomic(std::int64_t s);

// Quotient f / d over Z when d divides f exactly, nullopt otherwise.
// Exact long division: the quotient over Z is forced degree by degree, so a
// single pass both constructs it and decides divisibility.
std::optional<IntPoly> try_divide(const IntPoly& f, const IntPoly& d);

// true iff f = d * q for some q with integer coefficients.
bool divides(const IntPoly& d, const IntPoly& f);

// f * g with every exponent reduced modulo n; the coefficient sum is
// preserved, so (f*g mod x^n-1)(1) = f(1) g(1).
IntPoly mul_mod_cyclic(const IntPoly& f, const IntPoly& g, std::int64_t n);

// f(x^k): the polynomial of the k-fold dilated multiset.
IntPoly expand_scale(const IntPoly& f, std::int64_t k);

}  // namespace ztile
