#include "tgwa/linalg.hpp"

#include "tgwa/error.hpp"

namespace tgwa {

Mat identity_matrix(size_t n) {
  Mat m = zero_matrix(n, n);
  for (size_t i = 0; i < n; ++i) m[i][i] = Scalar(1);
  return m;
}

Mat zero_matrix(size_t rows, size_t cols) { return Mat(rows, Vec(cols, Scalar(0))); }

Mat matmul(const Mat& a, const Mat& b) {
  if (a.empty()) return {};
  const size_t inner = a[0].size();
  if (b.size() != inner) throw Error(ErrorKind::InvalidArgument, "matrix size mismatch");
  const size_t cols = b.empty() ? 0 : b[0].size();
  Mat r = zero_matrix(a.size(), cols);
  for (size_t i = 0; i < a.size(); ++i)
    for (size_t k = 0; k < inner; ++k) {
      if (a[i][k].is_zero()) continue;
      for (size_t j = 0; j < cols; ++j)
        if (!b[k][j].is_zero()) r[i][j] += a[i][k] * b[k][j];
    }
  return r;
}

Vec matvec(const Mat& a, const Vec& v) {
  Vec r(a.size(), Scalar(0));
  for (size_t i = 0; i < a.size(); ++i)
    for (size_t j = 0; j < v.size(); ++j)
      if (!a[i][j].is_zero() && !v[j].is_zero()) r[i] += a[i][j] * v[j];
  return r;
}

Mat matadd(const Mat& a, const Mat& b) {
  Mat r = a;
  for (size_t i = 0; i < a.size(); ++i)
    for (size_t j = 0; j < a[i].size(); ++j) r[i][j] += b[i][j];
  return r;
}

Mat matsub(const Mat& a, const Mat& b) {
  Mat r = a;
  for (size_t i = 0; i < a.size(); ++i)
    for (size_t j = 0; j < a[i].size(); ++j) r[i][j] -= b[i][j];
  return r;
}

Mat matscale(const Mat& a, const Scalar& s) {
  Mat r = a;
  for (auto& row : r)
    for (auto& v : row) v *= s;
  return r;
}

bool is_zero_matrix(const Mat& a) {
  for (const auto& row : a)
    for (const auto& v : row)
      if (!v.is_zero()) return false;
  return true;
}

std::vector<size_t> rref(Mat& a) {
  std::vector<size_t> pivots;
  if (a.empty()) return pivots;
  const size_t rows = a.size(), cols = a[0].size();
  size_t r = 0;
  for (size_t c = 0; c < cols && r < rows; ++c) {
    size_t p = r;
    while (p < rows && a[p][c].is_zero()) ++p;
    if (p == rows) continue;
    std::swap(a[p], a[r]);
    Scalar inv = a[r][c].inverse();
    for (size_t j = c; j < cols; ++j) a[r][j] *= inv;
    for (size_t i = 0; i < rows; ++i) {
      if (i == r || a[i][c].is_zero()) continue;
      Scalar f = a[i][c];
      for (size_t j = c; j < cols; ++j)
        if (!a[r][j].is_zero()) a[i][j] -= f * a[r][j];
    }
    pivots.push_back(c);
    ++r;
  }
  return pivots;
}

size_t rank(Mat a) { return rref(a).size(); }

std::vector<Vec> nullspace(const Mat& a, size_t cols) {
  Mat m = a;
  std::vector<size_t> piv = rref(m);
  std::vector<bool> is_pivot(cols, false);
  for (size_t p : piv) is_pivot[p] = true;
  std::vector<Vec> basis;
  for (size_t f = 0; f < cols; ++f) {
    if (is_pivot[f]) continue;
    Vec v(cols, Scalar(0));
    v[f] = Scalar(1);
    for (size_t r = 0; r < piv.size(); ++r) v[piv[r]] = -m[r][f];
    basis.push_back(std::move(v));
  }
  return basis;
}

std::optional<Mat> inverse(const Mat& a) {
  const size_t n = a.size();
  if (n == 0) return Mat{};
  Mat aug = zero_matrix(n, 2 * n);
  for (size_t i = 0; i < n; ++i) {
    for (size_t j = 0; j < n; ++j) aug[i][j] = a[i][j];
    aug[i][n + i] = Scalar(1);
  }
  std::vector<size_t> piv = rref(aug);
  if (piv.size() < n || piv[n - 1] != n - 1) return std::nullopt;
  Mat inv = zero_matrix(n, n);
  for (size_t i = 0; i < n; ++i)
    for (size_t j = 0; j < n; ++j) inv[i][j] = aug[i][n + j];
  return inv;
}

}  // namespace tgwa
