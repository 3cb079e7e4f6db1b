#pragma once

// Mixed-radix indexing of tensor products of based spaces. The first factor is the
// most significant digit.

#include <cstddef>
#include <vector>

#include "errors.hpp"

namespace hopfcyclic {

inline std::size_t tensor_dim(const std::vector<std::size_t>& dims) {
  std::size_t n = 1;
  for (auto d : dims) n *= d;
  return n;
}

inline std::size_t encode(const std::vector<std::size_t>& digits, const std::vector<std::size_t>& dims) {
  if (digits.size() != dims.size()) throw Error(ErrorCode::shape_mismatch, "tensor index arity");
  std::size_t idx = 0;
  for (std::size_t k = 0; k < dims.size(); ++k) {
    if (digits[k] >= dims[k]) throw Error(ErrorCode::shape_mismatch, "tensor digit out of range");
    idx = idx * dims[k] + digits[k];
  }
  return idx;
}

inline std::vector<std::size_t> decode(std::size_t idx, const std::vector<std::size_t>& dims) {
  std::vector<std::size_t> digits(dims.size());
  for (std::size_t k = dims.size(); k-- > 0;) {
    digits[k] = idx % dims[k];
    idx /= dims[k];
  }
  return digits;
}

/// dims = {head, base, base, ..., base} with `count` copies of base.
inline std::vector<std::size_t> power_dims(std::size_t head, std::size_t base, std::size_t count) {
  std::vector<std::size_t> d;
  d.reserve(count + 1);
  d.push_back(head);
  for (std::size_t i = 0; i < count; ++i) d.push_back(base);
  return d;
}

}  // namespace hopfcyclic
