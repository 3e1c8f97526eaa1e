#pragma once

// Exact linear algebra over Q: Gaussian elimination with full solution-space
// output (particular solution plus null-space basis), subspace ranks, and the
// small matrix helpers the filtration code needs.

#include "vfilt/rational.hpp"

#include <vector>

namespace vfilt {

using Vec = std::vector<Rational>;
using Mat = std::vector<std::vector<Rational>>;  // row major

struct LinearSolution {
    bool consistent = false;
    Vec particular;             // empty when inconsistent
    std::vector<Vec> null_basis;
};

// Solves a*x = rhs exactly. The null basis spans the full solution set of the
// homogeneous system regardless of consistency.
LinearSolution solve_linear(const Mat& a, const Vec& rhs);

long rank(Mat a);

Mat mat_mul(const Mat& a, const Mat& b);
Mat identity(long n);

}  // namespace vfilt
