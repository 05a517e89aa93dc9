#pragma once

#include <cassert>
#include <initializer_list>
#include <vector>

#include "torusadm/rational.hpp"

namespace torusadm {

// Dense row-major matrix over an exact scalar type.
template <class T>
struct Mat {
  int rows = 0;
  int cols = 0;
  std::vector<T> a;

  Mat() = default;
  Mat(int r, int c) : rows(r), cols(c), a(static_cast<size_t>(r) * c) {}
  Mat(std::initializer_list<std::initializer_list<T>> init) {
    rows = static_cast<int>(init.size());
    cols = rows ? static_cast<int>(init.begin()->size()) : 0;
    a.reserve(static_cast<size_t>(rows) * cols);
    for (const auto& row : init) {
      assert(static_cast<int>(row.size()) == cols);
      for (const auto& x : row) a.push_back(x);
    }
  }
  Mat(const std::vector<std::vector<T>>& init)  // rows as vectors
      : rows(static_cast<int>(init.size())),
        cols(init.empty() ? 0 : static_cast<int>(init.front().size())) {
    a.reserve(static_cast<size_t>(rows) * cols);
    for (const auto& row : init) {
      assert(static_cast<int>(row.size()) == cols);
      for (const auto& x : row) a.push_back(x);
    }
  }

  static Mat identity(int n) {
    Mat m(n, n);
    for (int i = 0; i < n; ++i) m(i, i) = T(1);
    return m;
  }

  T& operator()(int i, int j) { return a[static_cast<size_t>(i) * cols + j]; }
  const T& operator()(int i, int j) const {
    return a[static_cast<size_t>(i) * cols + j];
  }

  bool operator==(const Mat& o) const {
    return rows == o.rows && cols == o.cols && a == o.a;
  }

  std::vector<T> row(int i) const {
    return std::vector<T>(a.begin() + static_cast<size_t>(i) * cols,
                          a.begin() + static_cast<size_t>(i + 1) * cols);
  }

  Mat transpose() const {
    Mat t(cols, rows);
    for (int i = 0; i < rows; ++i)
      for (int j = 0; j < cols; ++j) t(j, i) = (*this)(i, j);
    return t;
  }
};

using IntMatrix = Mat<Int>;
using QMatrix = Mat<Rat>;

template <class T>
Mat<T> matmul(const Mat<T>& x, const Mat<T>& y) {
  assert(x.cols == y.rows);
  Mat<T> z(x.rows, y.cols);
  for (int i = 0; i < x.rows; ++i)
    for (int k = 0; k < x.cols; ++k) {
      const T& xik = x(i, k);
      if (xik == 0) continue;
      for (int j = 0; j < y.cols; ++j) z(i, j) += xik * y(k, j);
    }
  return z;
}

template <class T>
std::vector<T> matvec(const Mat<T>& m, const std::vector<T>& v) {
  assert(m.cols == static_cast<int>(v.size()));
  std::vector<T> out(m.rows, T(0));
  for (int i = 0; i < m.rows; ++i)
    for (int j = 0; j < m.cols; ++j) out[i] += m(i, j) * v[j];
  return out;
}

inline QMatrix to_rational(const IntMatrix& m) {
  QMatrix q(m.rows, m.cols);
  for (size_t k = 0; k < m.a.size(); ++k) q.a[k] = Rat(m.a[k]);
  return q;
}

inline std::vector<Rat> to_rational(const std::vector<Int>& v) {
  std::vector<Rat> out;
  out.reserve(v.size());
  for (const auto& x : v) out.emplace_back(x);
  return out;
}

}  // namespace torusadm
