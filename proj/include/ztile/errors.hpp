#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace ztile {

// Inputs the underlying theory does not cover (e.g. spectra or periods
// spanning three or more primes).
struct unsupported_case : std::runtime_error {
    explicit unsupported_case(const std::string& what) : std::runtime_error(what) {}
};

// The tiling oracle refuses sets wider than its configured window instead of
// guessing.
struct diameter_cap_error : std::runtime_error {
    diameter_cap_error(std::int64_t diameter_, std::int64_t cap_)
        : std::runtime_error("diameter " + std::to_string(diameter_) +
                             " exceeds oracle cap " + std::to_string(cap_)),
          diameter(diameter_),
          cap(cap_) {}
    std::int64_t diameter;
    std::int64_t cap;
};

// Redundant internal checks that must agree as a matter of theory did not.
// This is always a bug in the library, never a property of the input.
struct internal_check_error : std::logic_error {
    explicit internal_check_error(const std::string& what) : std::logic_error(what) {}
};

// A set whose elements are not equally distributed over the residue classes
// cannot be decomposed; the census (count per class) travels with the error.
struct unequal_distribution_error : std::runtime_error {
    unequal_distribution_error(std::int64_t modulus_, std::vector<std::int64_t> census_)
        : std::runtime_error("elements not equally distributed modulo " +
                             std::to_string(modulus_)),
          modulus(modulus_),
          census(std::move(census_)) {}
    std::int64_t modulus;
    std::vector<std::int64_t> census;  // census[i] = #elements congruent to i
};

}  // namespace ztile
