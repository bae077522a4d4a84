// acpc/tensor.hpp

// Copyright 2026  The ACPC authors

// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//  http://www.apache.org/licenses/LICENSE-2.0
//
// THIS CODE IS PROVIDED *AS IS* BASIS, WITHOUT WARRANTIES OR CONDITIONS OF ANY
// KIND, EITHER EXPRESS OR IMPLIED, INCLUDING WITHOUT LIMITATION ANY IMPLIED
// WARRANTIES OR CONDITIONS OF TITLE, FITNESS FOR A PARTICULAR PURPOSE,
// MERCHANTABLITY OR NON-INFRINGEMENT.
// See the Apache 2 License for the specific language governing permissions and
// limitations under the License.

#ifndef ACPC_TENSOR_HPP_
#define ACPC_TENSOR_HPP_

#include <cassert>
#include <cmath>
#include <cstddef>
#include <initializer_list>
#include <numeric>
#include <stdexcept>
#include <vector>

#include "acpc/rng.hpp"

namespace acpc {

// Dense row-major tensor. Rank is small (<= 3 in this codebase); shape is
// carried dynamically. `Real` is float for training runs and double for
// verification runs.
template <typename Real>
struct Tensor {
  std::vector<std::size_t> shape;
  std::vector<Real> data;

  Tensor() = default;

  explicit Tensor(std::vector<std::size_t> s, Real fill = Real(0))
      : shape(std::move(s)), data(shape_numel(shape), fill) {}

  Tensor(std::initializer_list<std::size_t> s, std::vector<Real> values)
      : shape(s), data(std::move(values)) {
    if (data.size() != shape_numel(shape))
      throw std::invalid_argument("Tensor: data length does not match shape");
  }

  static std::size_t shape_numel(const std::vector<std::size_t>& s) {
    std::size_t n = 1;
    for (std::size_t d : s) n *= d;
    return n;
  }

  std::size_t numel() const { return data.size(); }
  std::size_t rank() const { return shape.size(); }
  std::size_t dim(std::size_t i) const { return shape.at(i); }

  Real& at(std::size_t i) {
    assert(rank() == 1 && i < shape[0]);
    return data[i];
  }
  Real at(std::size_t i) const {
    assert(rank() == 1 && i < shape[0]);
    return data[i];
  }
  Real& at(std::size_t i, std::size_t j) {
    assert(rank() == 2 && i < shape[0] && j < shape[1]);
    return data[i * shape[1] + j];
  }
  Real at(std::size_t i, std::size_t j) const {
    assert(rank() == 2 && i < shape[0] && j < shape[1]);
    return data[i * shape[1] + j];
  }
  Real& at(std::size_t i, std::size_t j, std::size_t k) {
    assert(rank() == 3 && i < shape[0] && j < shape[1] && k < shape[2]);
    return data[(i * shape[1] + j) * shape[2] + k];
  }
  Real at(std::size_t i, std::size_t j, std::size_t k) const {
    assert(rank() == 3 && i < shape[0] && j < shape[1] && k < shape[2]);
    return data[(i * shape[1] + j) * shape[2] + k];
  }

  Real* row(std::size_t i) {
    assert(rank() == 2 && i < shape[0]);
    return data.data() + i * shape[1];
  }
  const Real* row(std::size_t i) const {
    assert(rank() == 2 && i < shape[0]);
    return data.data() + i * shape[1];
  }

  bool same_shape(const Tensor& other) const { return shape == other.shape; }

  bool all_finite() const {
    for (Real v : data)
      if (!std::isfinite(v)) return false;
    return true;
  }

  void fill(Real v) { std::fill(data.begin(), data.end(), v); }

  static Tensor zeros(std::vector<std::size_t> s) { return Tensor(std::move(s)); }

  static Tensor full(std::vector<std::size_t> s, Real v) {
    return Tensor(std::move(s), v);
  }

  // Entries uniform in [-bound, bound].
  static Tensor uniform(std::vector<std::size_t> s, Real bound, Rng& rng) {
    Tensor t(std::move(s));
    for (Real& v : t.data) v = static_cast<Real>(rng.uniform(-bound, bound));
    return t;
  }

  static Tensor normal(std::vector<std::size_t> s, Real sigma, Rng& rng) {
    Tensor t(std::move(s));
    for (Real& v : t.data) v = static_cast<Real>(sigma * rng.normal());
    return t;
  }
};

template <typename Real>
bool bitwise_equal(const Tensor<Real>& a, const Tensor<Real>& b) {
  return a.shape == b.shape && a.data == b.data;
}

}  // namespace acpc

#endif  // ACPC_TENSOR_HPP_
