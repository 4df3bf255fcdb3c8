#include "aqcube/smith.hpp"

#include <algorithm>
#include <cstdlib>

namespace aqcube {

std::size_t SmithResult::rank() const {
    std::size_t r = 0;
    std::size_t n = std::min(d.rows(), d.cols());
    for (std::size_t i = 0; i < n; ++i)
        if (d.at(i, i) != 0) ++r;
    return r;
}

std::vector<Int> SmithResult::diagonal() const {
    std::size_t n = std::min(d.rows(), d.cols());
    std::vector<Int> out(n);
    for (std::size_t i = 0; i < n; ++i) out[i] = d.at(i, i);
    return out;
}

namespace {

Int abs_int(const Int& x) { return x < 0 ? Int(-x) : x; }

// Locate the nonzero entry of minimal absolute value in the submatrix
// starting at (t, t); false when the submatrix is zero.
bool find_pivot(const IntMatrix& d, std::size_t t, std::size_t& pr, std::size_t& pc) {
    bool found = false;
    Int best;
    for (std::size_t r = t; r < d.rows(); ++r) {
        for (std::size_t c = t; c < d.cols(); ++c) {
            const Int& x = d.at(r, c);
            if (x == 0) continue;
            Int a = abs_int(x);
            if (!found || a < best) {
                found = true;
                best = a;
                pr = r;
                pc = c;
                if (best == 1) return true;
            }
        }
    }
    return found;
}

}  // namespace

SmithResult snf(const IntMatrix& a) {
    std::size_t rows = a.rows(), cols = a.cols();
    SmithResult res{IntMatrix::identity(rows), a, IntMatrix::identity(cols)};
    IntMatrix& u = res.u;
    IntMatrix& d = res.d;
    IntMatrix& v = res.v;

    std::size_t n = std::min(rows, cols);
    for (std::size_t t = 0; t < n; ++t) {
        for (;;) {
            std::size_t pr = t, pc = t;
            if (!find_pivot(d, t, pr, pc)) break;  // submatrix zero, done
            d.swap_rows(t, pr);
            u.swap_rows(t, pr);
            d.swap_cols(t, pc);
            v.swap_cols(t, pc);

            // Reduce the pivot column and row; truncated quotients leave
            // remainders smaller than the pivot, so re-picking converges.
            bool clean = true;
            for (std::size_t r = t + 1; r < rows; ++r) {
                if (d.at(r, t) == 0) continue;
                Int q = d.at(r, t) / d.at(t, t);
                d.add_row_multiple(r, t, -q);
                u.add_row_multiple(r, t, -q);
                if (d.at(r, t) != 0) clean = false;
            }
            for (std::size_t c = t + 1; c < cols; ++c) {
                if (d.at(t, c) == 0) continue;
                Int q = d.at(t, c) / d.at(t, t);
                d.add_col_multiple(c, t, -q);
                v.add_col_multiple(c, t, -q);
                if (d.at(t, c) != 0) clean = false;
            }
            if (!clean) continue;

            // Pivot must divide everything that remains; if not, pull the
            // offending row into the pivot row and keep reducing.
            bool divides = true;
            for (std::size_t r = t + 1; r < rows && divides; ++r)
                for (std::size_t c = t + 1; c < cols; ++c)
                    if (d.at(r, c) % d.at(t, t) != 0) {
                        d.add_row_multiple(t, r, 1);
                        u.add_row_multiple(t, r, 1);
                        divides = false;
                        break;
                    }
            if (divides) break;
        }
        if (d.at(t, t) == 0) break;
        if (d.at(t, t) < 0) {
            d.negate_row(t);
            u.negate_row(t);
        }
    }
    return res;
}

std::size_t rank(const IntMatrix& a) { return snf(a).rank(); }

IntMatrix kernel_basis(const IntMatrix& a) {
    SmithResult s = snf(a);
    std::size_t r = s.rank();
    return s.v.columns(r, a.cols() - r);
}

std::optional<std::vector<Int>> solve(const IntMatrix& a, const std::vector<Int>& b) {
    SmithResult s = snf(a);
    std::vector<Int> c = s.u.apply(b);
    std::vector<Int> y(a.cols());
    std::size_t n = std::min(a.rows(), a.cols());
    for (std::size_t i = 0; i < a.rows(); ++i) {
        if (i < n && s.d.at(i, i) != 0) {
            if (c[i] % s.d.at(i, i) != 0) return std::nullopt;
            y[i] = c[i] / s.d.at(i, i);
        } else if (c[i] != 0) {
            return std::nullopt;
        }
    }
    return s.v.apply(y);
}

std::optional<IntMatrix> solve_many(const IntMatrix& a, const IntMatrix& b) {
    if (a.rows() != b.rows()) return std::nullopt;
    SmithResult s = snf(a);
    std::size_t n = std::min(a.rows(), a.cols());
    IntMatrix x(a.cols(), b.cols());
    for (std::size_t j = 0; j < b.cols(); ++j) {
        std::vector<Int> col(b.rows());
        for (std::size_t r = 0; r < b.rows(); ++r) col[r] = b.at(r, j);
        std::vector<Int> c = s.u.apply(col);
        std::vector<Int> y(a.cols());
        for (std::size_t i = 0; i < a.rows(); ++i) {
            if (i < n && s.d.at(i, i) != 0) {
                if (c[i] % s.d.at(i, i) != 0) return std::nullopt;
                y[i] = c[i] / s.d.at(i, i);
            } else if (c[i] != 0) {
                return std::nullopt;
            }
        }
        x.set_column(j, s.v.apply(y));
    }
    return x;
}

IntMatrix column_lattice_basis(const IntMatrix& a) {
    IntMatrix m = a;
    std::size_t piv = 0;
    for (std::size_t row = 0; row < m.rows() && piv < m.cols(); ++row) {
        for (;;) {
            // Minimal-absolute-value nonzero entry in this row, at or
            // right of the pivot column.
            std::size_t best_col = m.cols();
            Int best;
            for (std::size_t c = piv; c < m.cols(); ++c) {
                if (m.at(row, c) == 0) continue;
                Int x = m.at(row, c) < 0 ? Int(-m.at(row, c)) : m.at(row, c);
                if (best_col == m.cols() || x < best) {
                    best = x;
                    best_col = c;
                }
            }
            if (best_col == m.cols()) break;  // row clear, no pivot here
            m.swap_cols(piv, best_col);
            bool clean = true;
            for (std::size_t c = piv + 1; c < m.cols(); ++c) {
                if (m.at(row, c) == 0) continue;
                Int q = m.at(row, c) / m.at(row, piv);
                m.add_col_multiple(c, piv, -q);
                if (m.at(row, c) != 0) clean = false;
            }
            if (clean) {
                if (m.at(row, piv) < 0) m.negate_col(piv);
                ++piv;
                break;
            }
        }
    }
    return m.columns(0, piv);
}

}  // namespace aqcube
