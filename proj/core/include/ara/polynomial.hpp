#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include <gmpxx.h>

#include "ara/monomial.hpp"

namespace ara {

// Exact rational coefficients.  Everything is constructed and verified over
// the rationals; prime-field reruns happen inside the Groebner engine.
using Rational = mpq_class;

std::string rational_str(const Rational& c);
Rational rational_parse(std::string_view text);

// Sparse multivariate polynomial with exact rational coefficients.  Terms are
// kept in descending canonical display order, so iteration order, printing and
// serialization are all deterministic.  No zero coefficient is ever stored.
class Polynomial {
public:
    using TermMap = std::map<Monomial, Rational, DisplayGreater>;

    Polynomial() = default;
    Polynomial(int c) : Polynomial(Rational(c)) {}
    explicit Polynomial(const Rational& c);
    explicit Polynomial(const Monomial& m, const Rational& c = 1);
    static Polynomial variable(Variable v);

    bool is_zero() const { return terms_.empty(); }
    std::size_t term_count() const { return terms_.size(); }
    const TermMap& terms() const { return terms_; }
    std::uint64_t degree() const; // max total degree; 0 for the zero polynomial
    std::vector<Variable> support() const;

    Polynomial operator-() const;
    Polynomial& operator+=(const Polynomial& other);
    Polynomial& operator-=(const Polynomial& other);
    friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
    friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
    Polynomial operator*(const Polynomial& other) const;
    Polynomial& operator*=(const Polynomial& other) { return *this = *this * other; }
    Polynomial scale(const Rational& c) const;
    Polynomial mul_term(const Monomial& m, const Rational& c) const;
    Polynomial pow(std::uint64_t k) const;

    void add_term(const Monomial& m, const Rational& c);
    Polynomial rename(const std::vector<std::pair<std::uint32_t, std::uint32_t>>& map) const;

    std::string str() const;
    static Polynomial parse(std::string_view text);

    friend bool operator==(const Polynomial&, const Polynomial&) = default;

private:
    TermMap terms_;
};

// The squaring substitution f(x1,...,xn) -> f(x1^2,...,xn^2); a ring map.
Polynomial square_substitution(const Polynomial& f);

} // namespace ara
