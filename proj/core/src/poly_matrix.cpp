#include "ara/poly_matrix.hpp"

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <unordered_map>

namespace ara {

PolyMatrix::PolyMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), entries_(rows * cols) {
    if (rows == 0 || cols == 0) throw Error("matrix dimensions must be positive");
}

Polynomial& PolyMatrix::at(std::size_t i, std::size_t j) {
    if (i >= rows_ || j >= cols_) throw Error("matrix index out of range");
    return entries_[i * cols_ + j];
}

const Polynomial& PolyMatrix::at(std::size_t i, std::size_t j) const {
    if (i >= rows_ || j >= cols_) throw Error("matrix index out of range");
    return entries_[i * cols_ + j];
}

PolyMatrix PolyMatrix::identity_scaled(std::size_t n, const Polynomial& diag) {
    PolyMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m.at(i, i) = diag;
    return m;
}

PolyMatrix PolyMatrix::operator+(const PolyMatrix& other) const {
    if (rows_ != other.rows_ || cols_ != other.cols_)
        throw Error("matrix shape mismatch in addition");
    PolyMatrix m(rows_, cols_);
    for (std::size_t k = 0; k < entries_.size(); ++k)
        m.entries_[k] = entries_[k] + other.entries_[k];
    return m;
}

namespace {

struct DetContext {
    const PolyMatrix* m = nullptr;
    std::vector<std::size_t> col_order; // sparsest columns expanded first
    std::unordered_map<std::uint32_t, Polynomial> memo; // key: mask of used rows
    int col_perm_sign = 1;

    // Determinant of the minor given by the unused rows and the columns
    // col_order[popcount(used)..n-1].
    const Polynomial& minor(std::uint32_t used) {
        auto it = memo.find(used);
        if (it != memo.end()) return it->second;
        const std::size_t n = m->rows();
        const std::size_t depth = static_cast<std::size_t>(__builtin_popcount(used));
        Polynomial det;
        if (depth == n) {
            det = Polynomial(Rational(1));
        } else {
            const std::size_t col = col_order[depth];
            int sign = 1;
            for (std::size_t row = 0; row < n; ++row) {
                if (used & (1u << row)) continue;
                const Polynomial& entry = m->at(row, col);
                if (!entry.is_zero()) {
                    Polynomial sub = entry * minor(used | (1u << row));
                    det += (sign > 0) ? sub : -sub;
                }
                sign = -sign;
            }
        }
        return memo.emplace(used, std::move(det)).first->second;
    }
};

int permutation_sign(const std::vector<std::size_t>& perm) {
    int sign = 1;
    for (std::size_t i = 0; i < perm.size(); ++i)
        for (std::size_t j = i + 1; j < perm.size(); ++j)
            if (perm[i] > perm[j]) sign = -sign;
    return sign;
}

} // namespace

Polynomial determinant(const PolyMatrix& m) {
    if (m.rows() != m.cols()) throw Error("determinant requires a square matrix");
    const std::size_t n = m.rows();
    if (n > 20) throw Error("determinant supported up to 20x20");

    DetContext ctx;
    ctx.m = &m;
    ctx.col_order.resize(n);
    std::iota(ctx.col_order.begin(), ctx.col_order.end(), std::size_t{0});
    std::vector<std::size_t> nonzeros(n, 0);
    for (std::size_t j = 0; j < n; ++j)
        for (std::size_t i = 0; i < n; ++i)
            if (!m.at(i, j).is_zero()) ++nonzeros[j];
    std::stable_sort(ctx.col_order.begin(), ctx.col_order.end(),
                     [&](std::size_t a, std::size_t b) { return nonzeros[a] < nonzeros[b]; });
    ctx.col_perm_sign = permutation_sign(ctx.col_order);

    Polynomial det = ctx.minor(0);
    return ctx.col_perm_sign > 0 ? det : -det;
}

} // namespace ara
