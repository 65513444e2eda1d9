#pragma once

#include <cstdint>
#include <optional>
#include <vector>

namespace ordpart {

using Coord = std::int64_t;
using Vec = std::vector<Coord>;

// Dense integer matrix, row-major. Small dimensions throughout (rank <= ~8).
struct Mat {
    int rows = 0, cols = 0;
    std::vector<Coord> a;

    Mat() = default;
    Mat(int r, int c) : rows(r), cols(c), a(static_cast<std::size_t>(r) * c, 0) {}

    Coord& operator()(int i, int j) { return a[static_cast<std::size_t>(i) * cols + j]; }
    Coord operator()(int i, int j) const { return a[static_cast<std::size_t>(i) * cols + j]; }

    bool operator==(const Mat& o) const = default;

    static Mat identity(int n);
};

Mat mat_mul(const Mat& x, const Mat& y);
Mat mat_transpose(const Mat& m);
Vec mat_apply(const Mat& m, const Vec& v);
Mat mat_from_rows(const std::vector<Vec>& rows);

Vec vec_add(const Vec& x, const Vec& y);
Vec vec_sub(const Vec& x, const Vec& y);
Vec vec_neg(const Vec& x);
Vec vec_scale(const Vec& x, Coord c);
Coord dot(const Vec& x, const Vec& y);
bool is_zero(const Vec& x);

// Smith normal form with unimodular transforms: U * A * V = D, D diagonal with
// d_1 | d_2 | ... and nonnegative entries.
struct SmithResult {
    Mat U, D, V;
};
SmithResult smith_normal_form(const Mat& A);

// Exact solution of A x = b over the integers; nullopt when unsolvable.
std::optional<Vec> solve_integer(const Mat& A, const Vec& b);

// Basis of the integer kernel {x : A x = 0}.
std::vector<Vec> integer_kernel(const Mat& A);

// True when the row lattice of A is a direct summand of Z^cols, i.e. all
// invariant factors equal 1 (A must have full row rank for the usual notion;
// zero rows are rejected by the caller).
bool rows_span_direct_summand(const Mat& A);

}  // namespace ordpart
