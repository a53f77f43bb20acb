#pragma once

#include <optional>
#include <vector>

#include "tgwa/scalar.hpp"

namespace tgwa {

using Vec = std::vector<Scalar>;
using Mat = std::vector<Vec>;  // row-major

Mat identity_matrix(size_t n);
Mat zero_matrix(size_t rows, size_t cols);
Mat matmul(const Mat& a, const Mat& b);
Vec matvec(const Mat& a, const Vec& v);
Mat matadd(const Mat& a, const Mat& b);
Mat matsub(const Mat& a, const Mat& b);
Mat matscale(const Mat& a, const Scalar& s);
bool is_zero_matrix(const Mat& a);

// Reduced row echelon form in place; returns pivot columns.
std::vector<size_t> rref(Mat& a);
size_t rank(Mat a);
// Basis of {x : a x = 0}.
std::vector<Vec> nullspace(const Mat& a, size_t cols);
std::optional<Mat> inverse(const Mat& a);

}  // namespace tgwa
