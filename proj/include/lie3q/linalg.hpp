#pragma once

// Small exact vectors and matrices over Q.

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "lie3q/rat.hpp"

namespace lie3q {

template <std::size_t N>
using Vec = std::array<Rat, N>;

/// Row-major square matrix.
template <std::size_t N>
using Mat = std::array<std::array<Rat, N>, N>;

using Vec3 = Vec<3>;
using Mat3 = Mat<3>;

template <std::size_t N>
Vec<N> unit_vector(std::size_t i) {
  Vec<N> v;
  v[i] = Rat(1);
  return v;
}

template <std::size_t N>
Vec<N> operator+(const Vec<N>& a, const Vec<N>& b) {
  Vec<N> r;
  for (std::size_t i = 0; i < N; ++i) r[i] = a[i] + b[i];
  return r;
}

template <std::size_t N>
Vec<N> operator-(const Vec<N>& a, const Vec<N>& b) {
  Vec<N> r;
  for (std::size_t i = 0; i < N; ++i) r[i] = a[i] - b[i];
  return r;
}

template <std::size_t N>
Vec<N> operator*(const Rat& s, const Vec<N>& a) {
  Vec<N> r;
  for (std::size_t i = 0; i < N; ++i) r[i] = s * a[i];
  return r;
}

template <std::size_t N>
bool is_zero(const Vec<N>& a) {
  for (const Rat& x : a)
    if (!x.is_zero()) return false;
  return true;
}

template <std::size_t N>
Mat<N> identity() {
  Mat<N> m;
  for (std::size_t i = 0; i < N; ++i) m[i][i] = Rat(1);
  return m;
}

template <std::size_t N>
Mat<N> operator*(const Mat<N>& a, const Mat<N>& b) {
  Mat<N> r;
  for (std::size_t i = 0; i < N; ++i)
    for (std::size_t k = 0; k < N; ++k) {
      if (a[i][k].is_zero()) continue;
      for (std::size_t j = 0; j < N; ++j) r[i][j] += a[i][k] * b[k][j];
    }
  return r;
}

template <std::size_t N>
Vec<N> operator*(const Mat<N>& a, const Vec<N>& v) {
  Vec<N> r;
  for (std::size_t i = 0; i < N; ++i)
    for (std::size_t j = 0; j < N; ++j) r[i] += a[i][j] * v[j];
  return r;
}

template <std::size_t N>
Mat<N> transpose(const Mat<N>& a) {
  Mat<N> r;
  for (std::size_t i = 0; i < N; ++i)
    for (std::size_t j = 0; j < N; ++j) r[i][j] = a[j][i];
  return r;
}

template <std::size_t N>
Rat trace(const Mat<N>& a) {
  Rat t;
  for (std::size_t i = 0; i < N; ++i) t += a[i][i];
  return t;
}

template <std::size_t N>
Vec<N> column(const Mat<N>& a, std::size_t j) {
  Vec<N> c;
  for (std::size_t i = 0; i < N; ++i) c[i] = a[i][j];
  return c;
}

template <std::size_t N>
Mat<N> from_columns(const std::array<Vec<N>, N>& cols) {
  Mat<N> m;
  for (std::size_t i = 0; i < N; ++i)
    for (std::size_t j = 0; j < N; ++j) m[i][j] = cols[j][i];
  return m;
}

inline Rat det(const Mat3& m) {
  return m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1]) - m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0]) +
         m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0]);
}

/// Gauss-Jordan inverse; nullopt when singular.
template <std::size_t N>
std::optional<Mat<N>> inverse(Mat<N> a) {
  Mat<N> inv = identity<N>();
  for (std::size_t col = 0; col < N; ++col) {
    std::size_t pivot = col;
    while (pivot < N && a[pivot][col].is_zero()) ++pivot;
    if (pivot == N) return std::nullopt;
    std::swap(a[pivot], a[col]);
    std::swap(inv[pivot], inv[col]);
    const Rat scale = a[col][col].inverse();
    for (std::size_t j = 0; j < N; ++j) {
      a[col][j] *= scale;
      inv[col][j] *= scale;
    }
    for (std::size_t r = 0; r < N; ++r) {
      if (r == col || a[r][col].is_zero()) continue;
      const Rat f = a[r][col];
      for (std::size_t j = 0; j < N; ++j) {
        a[r][j] -= f * a[col][j];
        inv[r][j] -= f * inv[col][j];
      }
    }
  }
  return inv;
}

/// Basis of the null space of a, in reduced-echelon order.
template <std::size_t N>
std::vector<Vec<N>> kernel(Mat<N> a) {
  std::array<int, N> pivot_col_of_row{};
  std::size_t rank = 0;
  std::array<bool, N> is_pivot{};
  for (std::size_t col = 0; col < N && rank < N; ++col) {
    std::size_t pivot = rank;
    while (pivot < N && a[pivot][col].is_zero()) ++pivot;
    if (pivot == N) continue;
    std::swap(a[pivot], a[rank]);
    const Rat scale = a[rank][col].inverse();
    for (std::size_t j = 0; j < N; ++j) a[rank][j] *= scale;
    for (std::size_t r = 0; r < N; ++r) {
      if (r == rank || a[r][col].is_zero()) continue;
      const Rat f = a[r][col];
      for (std::size_t j = 0; j < N; ++j) a[r][j] -= f * a[rank][j];
    }
    pivot_col_of_row[rank] = static_cast<int>(col);
    is_pivot[col] = true;
    ++rank;
  }
  std::vector<Vec<N>> basis;
  for (std::size_t free = 0; free < N; ++free) {
    if (is_pivot[free]) continue;
    Vec<N> v;
    v[free] = Rat(1);
    for (std::size_t r = 0; r < rank; ++r) v[static_cast<std::size_t>(pivot_col_of_row[r])] = -a[r][free];
    basis.push_back(v);
  }
  return basis;
}

template <std::size_t N>
std::string to_string(const Vec<N>& v) {
  std::string s = "(";
  for (std::size_t i = 0; i < N; ++i) {
    if (i) s += ", ";
    s += v[i].str();
  }
  return s + ")";
}

}  // namespace lie3q
