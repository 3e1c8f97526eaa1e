#include "vfilt/linear_solve.hpp"

#include <stdexcept>

namespace vfilt {

namespace {

// Reduced row echelon form in place; returns pivot column per pivot row.
std::vector<long> rref(Mat& m) {
    std::vector<long> pivots;
    if (m.empty()) return pivots;
    const long rows = static_cast<long>(m.size());
    const long cols = static_cast<long>(m[0].size());
    long row = 0;
    for (long col = 0; col < cols && row < rows; ++col) {
        long sel = -1;
        for (long r = row; r < rows; ++r)
            if (m[r][col] != 0) {
                sel = r;
                break;
            }
        if (sel < 0) continue;
        std::swap(m[sel], m[row]);
        Rational inv = 1 / m[row][col];
        for (long c = col; c < cols; ++c) m[row][c] *= inv;
        for (long r = 0; r < rows; ++r) {
            if (r == row || m[r][col] == 0) continue;
            Rational f = m[r][col];
            for (long c = col; c < cols; ++c) m[r][c] -= f * m[row][c];
        }
        pivots.push_back(col);
        ++row;
    }
    return pivots;
}

}  // namespace

LinearSolution solve_linear(const Mat& a, const Vec& rhs) {
    const long rows = static_cast<long>(a.size());
    if (rows != static_cast<long>(rhs.size()))
        throw std::invalid_argument("solve_linear: rhs size mismatch");
    const long cols = rows == 0 ? 0 : static_cast<long>(a[0].size());

    Mat aug(rows, Vec(cols + 1, Rational(0)));
    for (long r = 0; r < rows; ++r) {
        if (static_cast<long>(a[r].size()) != cols)
            throw std::invalid_argument("solve_linear: ragged matrix");
        for (long c = 0; c < cols; ++c) aug[r][c] = a[r][c];
        aug[r][cols] = rhs[r];
    }
    std::vector<long> pivots = rref(aug);

    LinearSolution sol;
    sol.consistent = true;
    for (size_t i = 0; i < pivots.size(); ++i)
        if (pivots[i] == cols) sol.consistent = false;  // pivot in rhs column

    std::vector<long> pivot_of_col(cols, -1);
    for (size_t i = 0; i < pivots.size(); ++i)
        if (pivots[i] < cols) pivot_of_col[pivots[i]] = static_cast<long>(i);

    if (sol.consistent) {
        sol.particular.assign(cols, Rational(0));
        for (long c = 0; c < cols; ++c)
            if (pivot_of_col[c] >= 0) sol.particular[c] = aug[pivot_of_col[c]][cols];
    }
    for (long c = 0; c < cols; ++c) {
        if (pivot_of_col[c] >= 0) continue;  // free columns generate the null space
        Vec v(cols, Rational(0));
        v[c] = 1;
        for (long pc = 0; pc < cols; ++pc)
            if (pivot_of_col[pc] >= 0) v[pc] = -aug[pivot_of_col[pc]][c];
        sol.null_basis.push_back(std::move(v));
    }
    return sol;
}

long rank(Mat a) { return static_cast<long>(rref(a).size()); }

Mat mat_mul(const Mat& a, const Mat& b) {
    const long n = static_cast<long>(a.size());
    const long k = n == 0 ? 0 : static_cast<long>(a[0].size());
    const long m = b.empty() ? 0 : static_cast<long>(b[0].size());
    if (k != static_cast<long>(b.size())) throw std::invalid_argument("mat_mul: shape mismatch");
    Mat c(n, Vec(m, Rational(0)));
    for (long i = 0; i < n; ++i)
        for (long j = 0; j < k; ++j) {
            if (a[i][j] == 0) continue;
            for (long l = 0; l < m; ++l) c[i][l] += a[i][j] * b[j][l];
        }
    return c;
}

Mat identity(long n) {
    Mat m(n, Vec(n, Rational(0)));
    for (long i = 0; i < n; ++i) m[i][i] = 1;
    return m;
}

}  // namespace vfilt
