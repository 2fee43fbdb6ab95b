#include "incgeo/matrix.hpp"

#include <stdexcept>
#include <utility>

namespace incgeo {

Matrix::Matrix(std::initializer_list<std::initializer_list<long>> rows) {
    rows_ = rows.size();
    cols_ = rows_ == 0 ? 0 : rows.begin()->size();
    entries_.reserve(rows_ * cols_);
    for (const auto& r : rows) {
        if (r.size() != cols_) throw std::invalid_argument("ragged initializer");
        for (long v : r) entries_.emplace_back(v);
    }
}

Matrix Matrix::identity(std::size_t n) {
    Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m.at(i, i) = 1;
    return m;
}

std::vector<Rat> Matrix::row(std::size_t i) const {
    return {entries_.begin() + static_cast<long>(i * cols_),
            entries_.begin() + static_cast<long>((i + 1) * cols_)};
}

std::vector<Rat> Matrix::column(std::size_t j) const {
    std::vector<Rat> out;
    out.reserve(rows_);
    for (std::size_t i = 0; i < rows_; ++i) out.push_back(at(i, j));
    return out;
}

Matrix Matrix::transpose() const {
    Matrix t(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) t.at(j, i) = at(i, j);
    return t;
}

Matrix Matrix::submatrix(const std::vector<std::size_t>& row_idx,
                         const std::vector<std::size_t>& col_idx) const {
    Matrix s(row_idx.size(), col_idx.size());
    for (std::size_t i = 0; i < row_idx.size(); ++i)
        for (std::size_t j = 0; j < col_idx.size(); ++j)
            s.at(i, j) = at(row_idx[i], col_idx[j]);
    return s;
}

Matrix operator*(const Matrix& a, const Matrix& b) {
    if (a.cols() != b.rows()) throw std::invalid_argument("dimension mismatch in product");
    Matrix c(a.rows(), b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t k = 0; k < a.cols(); ++k) {
            const Rat& aik = a.at(i, k);
            if (aik == 0) continue;
            for (std::size_t j = 0; j < b.cols(); ++j) c.at(i, j) += aik * b.at(k, j);
        }
    return c;
}

Matrix operator+(const Matrix& a, const Matrix& b) {
    if (a.rows() != b.rows() || a.cols() != b.cols())
        throw std::invalid_argument("dimension mismatch in sum");
    Matrix c(a.rows(), a.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j) c.at(i, j) = a.at(i, j) + b.at(i, j);
    return c;
}

Matrix reduced_row_echelon(const Matrix& m, std::vector<std::size_t>& pivot_cols) {
    Matrix r = m;
    pivot_cols.clear();
    std::size_t pivot_row = 0;
    for (std::size_t col = 0; col < r.cols() && pivot_row < r.rows(); ++col) {
        std::size_t sel = pivot_row;
        while (sel < r.rows() && r.at(sel, col) == 0) ++sel;
        if (sel == r.rows()) continue;
        if (sel != pivot_row)
            for (std::size_t j = 0; j < r.cols(); ++j) std::swap(r.at(sel, j), r.at(pivot_row, j));
        Rat inv = 1 / r.at(pivot_row, col);
        for (std::size_t j = col; j < r.cols(); ++j) r.at(pivot_row, j) *= inv;
        for (std::size_t i = 0; i < r.rows(); ++i) {
            if (i == pivot_row || r.at(i, col) == 0) continue;
            Rat f = r.at(i, col);
            for (std::size_t j = col; j < r.cols(); ++j) r.at(i, j) -= f * r.at(pivot_row, j);
        }
        pivot_cols.push_back(col);
        ++pivot_row;
    }
    return r;
}

std::size_t rank(const Matrix& m) {
    std::vector<std::size_t> pivots;
    reduced_row_echelon(m, pivots);
    return pivots.size();
}

Factorization factorize(const Matrix& m) {
    std::vector<std::size_t> pivots;
    Matrix r = reduced_row_echelon(m, pivots);
    const std::size_t d = pivots.size();
    Matrix left(m.rows(), d), right(d, m.cols());
    for (std::size_t k = 0; k < d; ++k) {
        for (std::size_t i = 0; i < m.rows(); ++i) left.at(i, k) = m.at(i, pivots[k]);
        for (std::size_t j = 0; j < m.cols(); ++j) right.at(k, j) = r.at(k, j);
    }
    return {std::move(left), std::move(right)};
}

std::vector<Rat> kronecker_power(const std::vector<Rat>& v, unsigned c, std::size_t cap) {
    std::size_t len = 1;
    for (unsigned i = 0; i < c; ++i) {
        if (v.size() != 0 && len > cap / v.size())
            throw std::length_error("kronecker_power: index space exceeds cap");
        len *= v.size();
    }
    std::vector<Rat> out{Rat(1)};
    for (unsigned i = 0; i < c; ++i) {
        std::vector<Rat> next;
        next.reserve(out.size() * v.size());
        for (const Rat& a : out)
            for (const Rat& b : v) next.push_back(a * b);
        out = std::move(next);
    }
    return out;
}

SupportPolynomial::SupportPolynomial(std::initializer_list<std::pair<unsigned, long>> coeffs) {
    for (const auto& [deg, c] : coeffs) set_coefficient(deg, Rat(c));
}

void SupportPolynomial::set_coefficient(unsigned degree, const Rat& coeff) {
    if (coeff == 0)
        coeffs_.erase(degree);
    else
        coeffs_[degree] = coeff;
}

Rat SupportPolynomial::evaluate(const Rat& x) const {
    Rat acc(0);
    for (const auto& [deg, c] : coeffs_) acc += c * rat_pow(x, deg);
    return acc;
}

std::vector<unsigned> SupportPolynomial::support() const {
    std::vector<unsigned> s;
    s.reserve(coeffs_.size());
    for (const auto& [deg, c] : coeffs_) s.push_back(deg);
    return s;
}

Matrix entrywise_poly(const Matrix& m, const SupportPolynomial& p) {
    Matrix n(m.rows(), m.cols());
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j) n.at(i, j) = p.evaluate(m.at(i, j));
    return n;
}

PolyRankCertificate poly_rank_certificate(const Matrix& m, const SupportPolynomial& p,
                                          std::size_t cap) {
    const Factorization f = factorize(m);
    const std::size_t d = f.left.cols();

    // Inner dimension: one block of width d^c per degree c in S(p). The
    // degree-c coefficient is folded into the left block.
    std::size_t bound = 0;
    std::vector<std::size_t> widths;
    for (unsigned c : p.support()) {
        std::size_t w = 1;
        for (unsigned i = 0; i < c; ++i) {
            if (d != 0 && w > cap / d) throw std::length_error("poly_rank_certificate: cap exceeded");
            w *= d;
        }
        if (bound > cap - w) throw std::length_error("poly_rank_certificate: cap exceeded");
        widths.push_back(w);
        bound += w;
    }

    Matrix left(m.rows(), bound), right(bound, m.cols());
    std::size_t off = 0;
    std::size_t block = 0;
    for (unsigned c : p.support()) {
        const Rat coeff = p.coefficients().at(c);
        for (std::size_t i = 0; i < m.rows(); ++i) {
            std::vector<Rat> pi = kronecker_power(f.left.row(i), c, cap);
            for (std::size_t k = 0; k < pi.size(); ++k) left.at(i, off + k) = coeff * pi[k];
        }
        for (std::size_t j = 0; j < m.cols(); ++j) {
            std::vector<Rat> qj = kronecker_power(f.right.column(j), c, cap);
            for (std::size_t k = 0; k < qj.size(); ++k) right.at(off + k, j) = qj[k];
        }
        off += widths[block++];
    }
    return {{std::move(left), std::move(right)}, bound};
}

}  // namespace incgeo
