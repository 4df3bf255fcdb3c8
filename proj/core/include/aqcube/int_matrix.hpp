#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace aqcube {

using Int = boost::multiprecision::cpp_int;

// Dense integer matrix with arbitrary-precision entries, row-major.
class IntMatrix {
public:
    IntMatrix() : rows_(0), cols_(0) {}
    IntMatrix(std::size_t rows, std::size_t cols)
        : rows_(rows), cols_(cols), e_(rows * cols) {}
    IntMatrix(std::size_t rows, std::size_t cols, std::vector<Int> entries);

    static IntMatrix identity(std::size_t n);
    static IntMatrix zero(std::size_t rows, std::size_t cols);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    Int& at(std::size_t r, std::size_t c) { return e_[r * cols_ + c]; }
    const Int& at(std::size_t r, std::size_t c) const { return e_[r * cols_ + c]; }

    bool operator==(const IntMatrix& o) const = default;

    bool is_zero() const;
    bool is_diagonal() const;

    IntMatrix operator*(const IntMatrix& o) const;
    IntMatrix operator+(const IntMatrix& o) const;
    IntMatrix operator-() const;
    std::vector<Int> apply(const std::vector<Int>& v) const;

    IntMatrix transpose() const;
    // Columns [first, first+count) as a new matrix.
    IntMatrix columns(std::size_t first, std::size_t count) const;
    // [this | o] side by side.
    IntMatrix hcat(const IntMatrix& o) const;
    IntMatrix column(std::size_t c) const;

    void set_column(std::size_t c, const std::vector<Int>& v);

    // Elementary operations used by the normal-form routines.
    void swap_rows(std::size_t a, std::size_t b);
    void swap_cols(std::size_t a, std::size_t b);
    void add_row_multiple(std::size_t dst, std::size_t src, const Int& k);  // row dst += k * row src
    void add_col_multiple(std::size_t dst, std::size_t src, const Int& k);
    void negate_row(std::size_t r);
    void negate_col(std::size_t c);

    std::string to_string() const;

private:
    std::size_t rows_, cols_;
    std::vector<Int> e_;
};

// Exact determinant (Bareiss fraction-free elimination). Square input.
Int determinant(const IntMatrix& m);

}  // namespace aqcube
