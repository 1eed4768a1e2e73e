#pragma once

#include <cstddef>
#include <vector>

#include "ara/polynomial.hpp"

namespace ara {

// Dense rectangular matrix of polynomials.  The matrices here stay small
// (at most ~10x10), so dense storage and cofactor determinants are fine.
class PolyMatrix {
public:
    PolyMatrix(std::size_t rows, std::size_t cols);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    Polynomial& at(std::size_t i, std::size_t j);
    const Polynomial& at(std::size_t i, std::size_t j) const;

    static PolyMatrix identity_scaled(std::size_t n, const Polynomial& diag);
    PolyMatrix operator+(const PolyMatrix& other) const;

    friend bool operator==(const PolyMatrix&, const PolyMatrix&) = default;

private:
    std::size_t rows_, cols_;
    std::vector<Polynomial> entries_;
};

// Exact symbolic determinant: cofactor expansion, columns visited sparsest
// first, with memoization on the mask of rows still unused.
Polynomial determinant(const PolyMatrix& m);

} // namespace ara
