// Copyright 2026 The kneg Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <vector>

#include "kneg/core.hpp"

namespace kneg {

/// Dense square complex matrix, row-major. Dimensions in this library never
/// exceed 256, so no attempt is made at sparsity or blocking.
class Matrix {
 public:
  Matrix() : dim_(0) {}
  explicit Matrix(int dim) : dim_(dim), a_(static_cast<size_t>(dim) * dim) {}

  static Matrix identity(int dim) {
    Matrix m(dim);
    for (int i = 0; i < dim; ++i) m(i, i) = 1.0;
    return m;
  }

  int dim() const { return dim_; }

  Complex& operator()(int i, int j) { return a_[static_cast<size_t>(i) * dim_ + j]; }
  const Complex& operator()(int i, int j) const {
    return a_[static_cast<size_t>(i) * dim_ + j];
  }

  Complex trace() const {
    Complex t = 0.0;
    for (int i = 0; i < dim_; ++i) t += (*this)(i, i);
    return t;
  }

  double frobenius_norm() const {
    double s = 0.0;
    for (const Complex& z : a_) s += std::norm(z);
    return std::sqrt(s);
  }

  /// max_ij |a(i,j) - conj(a(j,i))|
  double hermiticity_residual() const {
    double r = 0.0;
    for (int i = 0; i < dim_; ++i)
      for (int j = i; j < dim_; ++j)
        r = std::max(r, std::abs((*this)(i, j) - std::conj((*this)(j, i))));
    return r;
  }

  bool is_hermitian(double tol) const { return hermiticity_residual() <= tol; }

  Matrix adjoint() const {
    Matrix m(dim_);
    for (int i = 0; i < dim_; ++i)
      for (int j = 0; j < dim_; ++j) m(j, i) = std::conj((*this)(i, j));
    return m;
  }

  Matrix& operator+=(const Matrix& o) {
    for (size_t k = 0; k < a_.size(); ++k) a_[k] += o.a_[k];
    return *this;
  }
  Matrix& operator-=(const Matrix& o) {
    for (size_t k = 0; k < a_.size(); ++k) a_[k] -= o.a_[k];
    return *this;
  }
  Matrix& operator*=(Complex s) {
    for (Complex& z : a_) z *= s;
    return *this;
  }

  friend Matrix operator+(Matrix a, const Matrix& b) { return a += b; }
  friend Matrix operator-(Matrix a, const Matrix& b) { return a -= b; }
  friend Matrix operator*(Complex s, Matrix a) { return a *= s; }

  friend Matrix operator*(const Matrix& a, const Matrix& b) {
    Matrix c(a.dim_);
    for (int i = 0; i < a.dim_; ++i)
      for (int k = 0; k < a.dim_; ++k) {
        Complex aik = a(i, k);
        if (aik == Complex(0.0)) continue;
        for (int j = 0; j < a.dim_; ++j) c(i, j) += aik * b(k, j);
      }
    return c;
  }

 private:
  int dim_;
  std::vector<Complex> a_;
};

inline double max_abs_diff(const Matrix& a, const Matrix& b) {
  double r = 0.0;
  for (int i = 0; i < a.dim(); ++i)
    for (int j = 0; j < a.dim(); ++j) r = std::max(r, std::abs(a(i, j) - b(i, j)));
  return r;
}

/// Re tr(a * b) without forming the product.
inline double real_trace_product(const Matrix& a, const Matrix& b) {
  double t = 0.0;
  for (int i = 0; i < a.dim(); ++i)
    for (int k = 0; k < a.dim(); ++k) t += (a(i, k) * b(k, i)).real();
  return t;
}

}  // namespace kneg
