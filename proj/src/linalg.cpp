#include "ordpart/linalg.hpp"

#include <cstdlib>

#include "ordpart/errors.hpp"

namespace ordpart {

Mat Mat::identity(int n) {
    Mat m(n, n);
    for (int i = 0; i < n; ++i) m(i, i) = 1;
    return m;
}

Mat mat_mul(const Mat& x, const Mat& y) {
    ensure(x.cols == y.rows, "mat_mul: dimension mismatch");
    Mat r(x.rows, y.cols);
    for (int i = 0; i < x.rows; ++i)
        for (int k = 0; k < x.cols; ++k) {
            Coord xv = x(i, k);
            if (xv == 0) continue;
            for (int j = 0; j < y.cols; ++j) r(i, j) += xv * y(k, j);
        }
    return r;
}

Mat mat_transpose(const Mat& m) {
    Mat r(m.cols, m.rows);
    for (int i = 0; i < m.rows; ++i)
        for (int j = 0; j < m.cols; ++j) r(j, i) = m(i, j);
    return r;
}

Vec mat_apply(const Mat& m, const Vec& v) {
    ensure(static_cast<int>(v.size()) == m.cols, "mat_apply: dimension mismatch");
    Vec r(m.rows, 0);
    for (int i = 0; i < m.rows; ++i) {
        Coord s = 0;
        for (int j = 0; j < m.cols; ++j) s += m(i, j) * v[j];
        r[i] = s;
    }
    return r;
}

Mat mat_from_rows(const std::vector<Vec>& rows) {
    ensure(!rows.empty(), "mat_from_rows: empty");
    Mat m(static_cast<int>(rows.size()), static_cast<int>(rows[0].size()));
    for (int i = 0; i < m.rows; ++i) {
        ensure(static_cast<int>(rows[i].size()) == m.cols, "mat_from_rows: ragged rows");
        for (int j = 0; j < m.cols; ++j) m(i, j) = rows[i][j];
    }
    return m;
}

Vec vec_add(const Vec& x, const Vec& y) {
    ensure(x.size() == y.size(), "vec_add: size mismatch");
    Vec r(x.size());
    for (std::size_t i = 0; i < x.size(); ++i) r[i] = x[i] + y[i];
    return r;
}

Vec vec_sub(const Vec& x, const Vec& y) {
    ensure(x.size() == y.size(), "vec_sub: size mismatch");
    Vec r(x.size());
    for (std::size_t i = 0; i < x.size(); ++i) r[i] = x[i] - y[i];
    return r;
}

Vec vec_neg(const Vec& x) {
    Vec r(x.size());
    for (std::size_t i = 0; i < x.size(); ++i) r[i] = -x[i];
    return r;
}

Vec vec_scale(const Vec& x, Coord c) {
    Vec r(x.size());
    for (std::size_t i = 0; i < x.size(); ++i) r[i] = c * x[i];
    return r;
}

Coord dot(const Vec& x, const Vec& y) {
    ensure(x.size() == y.size(), "dot: size mismatch");
    Coord s = 0;
    for (std::size_t i = 0; i < x.size(); ++i) s += x[i] * y[i];
    return s;
}

bool is_zero(const Vec& x) {
    for (Coord c : x)
        if (c != 0) return false;
    return true;
}

namespace {

void swap_rows(Mat& m, int i, int j) {
    for (int k = 0; k < m.cols; ++k) std::swap(m(i, k), m(j, k));
}
void swap_cols(Mat& m, int i, int j) {
    for (int k = 0; k < m.rows; ++k) std::swap(m(k, i), m(k, j));
}
// row i -= f * row j
void row_op(Mat& m, int i, int j, Coord f) {
    for (int k = 0; k < m.cols; ++k) m(i, k) -= f * m(j, k);
}
// col i -= f * col j
void col_op(Mat& m, int i, int j, Coord f) {
    for (int k = 0; k < m.rows; ++k) m(k, i) -= f * m(k, j);
}
void negate_row(Mat& m, int i) {
    for (int k = 0; k < m.cols; ++k) m(i, k) = -m(i, k);
}

}  // namespace

SmithResult smith_normal_form(const Mat& A) {
    SmithResult r;
    r.D = A;
    r.U = Mat::identity(A.rows);
    r.V = Mat::identity(A.cols);
    Mat& D = r.D;
    int t = 0;
    int limit = std::min(A.rows, A.cols);
    while (t < limit) {
        // Find pivot with smallest nonzero absolute value in the remaining block.
        int pi = -1, pj = -1;
        Coord best = 0;
        for (int i = t; i < D.rows; ++i)
            for (int j = t; j < D.cols; ++j) {
                Coord v = D(i, j) < 0 ? -D(i, j) : D(i, j);
                if (v != 0 && (pi < 0 || v < best)) {
                    best = v;
                    pi = i;
                    pj = j;
                }
            }
        if (pi < 0) break;  // block is zero
        if (pi != t) {
            swap_rows(D, t, pi);
            swap_rows(r.U, t, pi);
        }
        if (pj != t) {
            swap_cols(D, t, pj);
            swap_cols(r.V, t, pj);
        }
        bool dirty = false;
        for (int i = t + 1; i < D.rows; ++i) {
            if (D(i, t) == 0) continue;
            Coord f = D(i, t) / D(t, t);
            row_op(D, i, t, f);
            row_op(r.U, i, t, f);
            if (D(i, t) != 0) dirty = true;
        }
        for (int j = t + 1; j < D.cols; ++j) {
            if (D(t, j) == 0) continue;
            Coord f = D(t, j) / D(t, t);
            col_op(D, j, t, f);
            col_op(r.V, j, t, f);
            if (D(t, j) != 0) dirty = true;
        }
        if (dirty) continue;  // remainder left behind, pick a new pivot
        // Pivot must divide every remaining entry for the invariant-factor chain.
        bool fixed = false;
        for (int i = t + 1; i < D.rows && !fixed; ++i)
            for (int j = t + 1; j < D.cols && !fixed; ++j)
                if (D(i, j) % D(t, t) != 0) {
                    // Fold row i into row t and retry.
                    row_op(D, t, i, -1);
                    row_op(r.U, t, i, -1);
                    fixed = true;
                }
        if (fixed) continue;
        if (D(t, t) < 0) {
            negate_row(D, t);
            negate_row(r.U, t);
        }
        ++t;
    }
    return r;
}

std::optional<Vec> solve_integer(const Mat& A, const Vec& b) {
    ensure(static_cast<int>(b.size()) == A.rows, "solve_integer: size mismatch");
    SmithResult s = smith_normal_form(A);
    Vec ub = mat_apply(s.U, b);
    Vec y(A.cols, 0);
    int limit = std::min(A.rows, A.cols);
    for (int i = 0; i < A.rows; ++i) {
        Coord d = (i < limit) ? s.D(i, i) : 0;
        if (d == 0) {
            if (ub[i] != 0) return std::nullopt;
        } else {
            if (ub[i] % d != 0) return std::nullopt;
            y[i] = ub[i] / d;
        }
    }
    return mat_apply(s.V, y);
}

std::vector<Vec> integer_kernel(const Mat& A) {
    SmithResult s = smith_normal_form(A);
    std::vector<Vec> basis;
    int limit = std::min(A.rows, A.cols);
    for (int j = 0; j < A.cols; ++j) {
        bool free_col = (j >= limit) || (s.D(j, j) == 0);
        if (!free_col) continue;
        Vec col(A.cols);
        for (int i = 0; i < A.cols; ++i) col[i] = s.V(i, j);
        basis.push_back(std::move(col));
    }
    return basis;
}

bool rows_span_direct_summand(const Mat& A) {
    SmithResult s = smith_normal_form(A);
    int limit = std::min(A.rows, A.cols);
    int nonzero = 0;
    for (int i = 0; i < limit; ++i) {
        if (s.D(i, i) == 0) continue;
        ++nonzero;
        if (s.D(i, i) != 1) return false;
    }
    return nonzero == A.rows;  // rows independent and saturated
}

}  // namespace ordpart
