#ifndef INCGEO_MATRIX_HPP
#define INCGEO_MATRIX_HPP

#include <cstddef>
#include <initializer_list>
#include <map>
#include <vector>

#include "incgeo/rational.hpp"

namespace incgeo {

// Dense matrix of exact rationals, row-major. Empty matrices (0 rows or
// 0 cols) are legal and have rank 0.
class Matrix {
public:
    Matrix() : rows_(0), cols_(0) {}
    Matrix(std::size_t rows, std::size_t cols)
        : rows_(rows), cols_(cols), entries_(rows * cols, Rat(0)) {}
    Matrix(std::initializer_list<std::initializer_list<long>> rows);

    static Matrix identity(std::size_t n);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    bool is_empty() const { return rows_ == 0 || cols_ == 0; }

    Rat& at(std::size_t i, std::size_t j) { return entries_[i * cols_ + j]; }
    const Rat& at(std::size_t i, std::size_t j) const { return entries_[i * cols_ + j]; }

    std::vector<Rat> row(std::size_t i) const;
    std::vector<Rat> column(std::size_t j) const;

    Matrix transpose() const;
    Matrix submatrix(const std::vector<std::size_t>& row_idx,
                     const std::vector<std::size_t>& col_idx) const;

    friend Matrix operator*(const Matrix& a, const Matrix& b);
    friend Matrix operator+(const Matrix& a, const Matrix& b);
    friend bool operator==(const Matrix& a, const Matrix& b) = default;

private:
    std::size_t rows_, cols_;
    std::vector<Rat> entries_;
};

// Reduced row echelon form; pivots are normalized to 1 and pivot columns
// cleared. Returns the pivot column indices (one per nonzero row).
Matrix reduced_row_echelon(const Matrix& m, std::vector<std::size_t>& pivot_cols);

std::size_t rank(const Matrix& m);

// left (n x d) * right (d x m) == the factored matrix, d == its rank.
struct Factorization {
    Matrix left;
    Matrix right;
};

// Canonical rank factorization: left = pivot columns of M, right = the
// nonzero rows of rref(M). Deterministic, so repeated calls agree.
Factorization factorize(const Matrix& m);

// c-fold self-Kronecker product of v; length grows as len(v)^c, capped.
std::vector<Rat> kronecker_power(const std::vector<Rat>& v, unsigned c,
                                 std::size_t cap = std::size_t(1) << 24);

// Univariate polynomial stored by its nonzero coefficients.
class SupportPolynomial {
public:
    SupportPolynomial() = default;
    SupportPolynomial(std::initializer_list<std::pair<unsigned, long>> coeffs);

    void set_coefficient(unsigned degree, const Rat& coeff);
    Rat evaluate(const Rat& x) const;
    // S(p): the set of degrees with nonzero coefficient.
    std::vector<unsigned> support() const;
    const std::map<unsigned, Rat>& coefficients() const { return coeffs_; }

private:
    std::map<unsigned, Rat> coeffs_;  // zero coefficients never stored
};

Matrix entrywise_poly(const Matrix& m, const SupportPolynomial& p);

struct PolyRankCertificate {
    Factorization factorization;  // product equals entrywise_poly(m, p)
    std::size_t bound;            // sum over c in S(p) of rank(m)^c
};

// Explicit low-rank factorization of the entrywise polynomial image,
// built from Kronecker powers of the rank factorization of m.
PolyRankCertificate poly_rank_certificate(const Matrix& m, const SupportPolynomial& p,
                                          std::size_t cap = std::size_t(1) << 24);

}  // namespace incgeo

#endif
