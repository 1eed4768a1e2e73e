#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "ara/error.hpp"

namespace ara {

// An indeterminate x<k>, identified by its nonnegative index.
struct Variable {
    std::uint32_t index = 0;

    friend auto operator<=>(const Variable&, const Variable&) = default;

    std::string name() const { return "x" + std::to_string(index); }
    static Variable parse(std::string_view text);
};

// A power product with sparse exponents, kept sorted by variable index.
// The empty product is the unit monomial 1.  Exponents are 64-bit and all
// additions are overflow-checked; no zero exponent is ever stored.
class Monomial {
public:
    using Entry = std::pair<std::uint32_t, std::uint64_t>; // (variable index, exponent > 0)

    Monomial() = default;
    static Monomial variable(Variable v, std::uint64_t exp = 1);
    static Monomial from_entries(std::vector<Entry> entries);

    const std::vector<Entry>& entries() const { return entries_; }
    bool is_unit() const { return entries_.empty(); }
    std::uint64_t degree() const;
    std::uint64_t exponent(Variable v) const;
    std::vector<Variable> support() const;
    std::uint32_t max_index() const; // throws on the unit monomial

    bool divides(const Monomial& other) const;
    bool is_squarefree() const;
    Monomial squarefree_part() const;
    Monomial squared() const; // every exponent doubled

    Monomial operator*(const Monomial& other) const;
    Monomial divide_by(const Monomial& divisor) const; // exact; throws if not divisible
    Monomial pow(std::uint64_t k) const;
    Monomial rename(const std::vector<std::pair<std::uint32_t, std::uint32_t>>& map) const;
    static Monomial lcm(const Monomial& a, const Monomial& b);
    bool coprime(const Monomial& other) const;

    std::string str() const;
    static Monomial parse(std::string_view text);

    friend bool operator==(const Monomial&, const Monomial&) = default;

private:
    std::vector<Entry> entries_;
};

// Canonical display comparison: exponent vectors are read in ascending
// variable index; at the first index where they differ the larger exponent
// wins.  Polynomials iterate and print in descending display order.
bool display_greater(const Monomial& a, const Monomial& b);

struct DisplayGreater {
    bool operator()(const Monomial& a, const Monomial& b) const { return display_greater(a, b); }
};

} // namespace ara
