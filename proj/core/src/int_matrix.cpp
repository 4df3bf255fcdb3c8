#include "aqcube/int_matrix.hpp"

#include <sstream>
#include <utility>

#include "aqcube/errors.hpp"

namespace aqcube {

IntMatrix::IntMatrix(std::size_t rows, std::size_t cols, std::vector<Int> entries)
    : rows_(rows), cols_(cols), e_(std::move(entries)) {
    if (e_.size() != rows_ * cols_)
        throw InputError("IntMatrix: entry count does not match dimensions");
}

IntMatrix IntMatrix::identity(std::size_t n) {
    IntMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m.at(i, i) = 1;
    return m;
}

IntMatrix IntMatrix::zero(std::size_t rows, std::size_t cols) { return IntMatrix(rows, cols); }

bool IntMatrix::is_zero() const {
    for (const auto& x : e_)
        if (x != 0) return false;
    return true;
}

bool IntMatrix::is_diagonal() const {
    for (std::size_t r = 0; r < rows_; ++r)
        for (std::size_t c = 0; c < cols_; ++c)
            if (r != c && at(r, c) != 0) return false;
    return true;
}

IntMatrix IntMatrix::operator*(const IntMatrix& o) const {
    if (cols_ != o.rows_) throw InputError("IntMatrix multiply: dimension mismatch");
    IntMatrix out(rows_, o.cols_);
    for (std::size_t r = 0; r < rows_; ++r) {
        for (std::size_t k = 0; k < cols_; ++k) {
            const Int& a = at(r, k);
            if (a == 0) continue;
            for (std::size_t c = 0; c < o.cols_; ++c) {
                const Int& b = o.at(k, c);
                if (b != 0) out.at(r, c) += a * b;
            }
        }
    }
    return out;
}

IntMatrix IntMatrix::operator+(const IntMatrix& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_) throw InputError("IntMatrix add: dimension mismatch");
    IntMatrix out(rows_, cols_);
    for (std::size_t i = 0; i < e_.size(); ++i) out.e_[i] = e_[i] + o.e_[i];
    return out;
}

IntMatrix IntMatrix::operator-() const {
    IntMatrix out(rows_, cols_);
    for (std::size_t i = 0; i < e_.size(); ++i) out.e_[i] = -e_[i];
    return out;
}

std::vector<Int> IntMatrix::apply(const std::vector<Int>& v) const {
    if (v.size() != cols_) throw InputError("IntMatrix apply: dimension mismatch");
    std::vector<Int> out(rows_);
    for (std::size_t r = 0; r < rows_; ++r)
        for (std::size_t c = 0; c < cols_; ++c)
            if (at(r, c) != 0 && v[c] != 0) out[r] += at(r, c) * v[c];
    return out;
}

IntMatrix IntMatrix::transpose() const {
    IntMatrix out(cols_, rows_);
    for (std::size_t r = 0; r < rows_; ++r)
        for (std::size_t c = 0; c < cols_; ++c) out.at(c, r) = at(r, c);
    return out;
}

IntMatrix IntMatrix::columns(std::size_t first, std::size_t count) const {
    IntMatrix out(rows_, count);
    for (std::size_t r = 0; r < rows_; ++r)
        for (std::size_t c = 0; c < count; ++c) out.at(r, c) = at(r, first + c);
    return out;
}

IntMatrix IntMatrix::hcat(const IntMatrix& o) const {
    if (rows_ != o.rows_) throw InputError("IntMatrix hcat: row mismatch");
    IntMatrix out(rows_, cols_ + o.cols_);
    for (std::size_t r = 0; r < rows_; ++r) {
        for (std::size_t c = 0; c < cols_; ++c) out.at(r, c) = at(r, c);
        for (std::size_t c = 0; c < o.cols_; ++c) out.at(r, cols_ + c) = o.at(r, c);
    }
    return out;
}

IntMatrix IntMatrix::column(std::size_t c) const { return columns(c, 1); }

void IntMatrix::set_column(std::size_t c, const std::vector<Int>& v) {
    if (v.size() != rows_) throw InputError("IntMatrix set_column: dimension mismatch");
    for (std::size_t r = 0; r < rows_; ++r) at(r, c) = v[r];
}

void IntMatrix::swap_rows(std::size_t a, std::size_t b) {
    if (a == b) return;
    for (std::size_t c = 0; c < cols_; ++c) std::swap(at(a, c), at(b, c));
}

void IntMatrix::swap_cols(std::size_t a, std::size_t b) {
    if (a == b) return;
    for (std::size_t r = 0; r < rows_; ++r) std::swap(at(r, a), at(r, b));
}

void IntMatrix::add_row_multiple(std::size_t dst, std::size_t src, const Int& k) {
    if (k == 0) return;
    for (std::size_t c = 0; c < cols_; ++c)
        if (at(src, c) != 0) at(dst, c) += k * at(src, c);
}

void IntMatrix::add_col_multiple(std::size_t dst, std::size_t src, const Int& k) {
    if (k == 0) return;
    for (std::size_t r = 0; r < rows_; ++r)
        if (at(r, src) != 0) at(r, dst) += k * at(r, src);
}

void IntMatrix::negate_row(std::size_t r) {
    for (std::size_t c = 0; c < cols_; ++c) at(r, c) = -at(r, c);
}

void IntMatrix::negate_col(std::size_t c) {
    for (std::size_t r = 0; r < rows_; ++r) at(r, c) = -at(r, c);
}

std::string IntMatrix::to_string() const {
    std::ostringstream os;
    os << "[";
    for (std::size_t r = 0; r < rows_; ++r) {
        os << (r ? "; " : "");
        for (std::size_t c = 0; c < cols_; ++c) os << (c ? " " : "") << at(r, c);
    }
    os << "]";
    return os.str();
}

Int determinant(const IntMatrix& m) {
    if (m.rows() != m.cols()) throw InputError("determinant: matrix not square");
    std::size_t n = m.rows();
    if (n == 0) return 1;
    IntMatrix a = m;
    Int prev = 1;
    int sign = 1;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (a.at(k, k) == 0) {
            std::size_t p = k + 1;
            while (p < n && a.at(p, k) == 0) ++p;
            if (p == n) return 0;
            a.swap_rows(k, p);
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i)
            for (std::size_t j = k + 1; j < n; ++j)
                a.at(i, j) = (a.at(i, j) * a.at(k, k) - a.at(i, k) * a.at(k, j)) / prev;
        prev = a.at(k, k);
    }
    return sign > 0 ? a.at(n - 1, n - 1) : -a.at(n - 1, n - 1);
}

}  // namespace aqcube
