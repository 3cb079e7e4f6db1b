#pragma once

// Single-constant corruptions of Hopf data and modules, for checking that the axiom
// checkers notice every one of them.

#include <cstddef>
#include <random>
#include <string>
#include <vector>

#include "hopfcyclic/hopf.hpp"
#include "hopfcyclic/sayd.hpp"

namespace mutations {

template <class F>
struct Mutant {
  std::string what;
  F bump;
};

template <class F>
hopfcyclic::SparseVec<F> bumped(const hopfcyclic::SparseVec<F>& v, std::size_t i, const F& by) {
  auto out = v;
  out = out + hopfcyclic::SparseVec<F>::unit(i, by);
  return out;
}

template <class F>
hopfcyclic::Matrix<F> bumped(const hopfcyclic::Matrix<F>& m, std::size_t r, std::size_t c, const F& by) {
  auto out = m;
  out.set_col(c, bumped(m.col(c), r, by));
  return out;
}

/// `count` corruptions cycling through product, coproduct, antipode, counit and unit.
/// Each adds `one` to one structure constant, chosen with a fixed seed.
template <class F>
std::vector<std::pair<std::string, hopfcyclic::HopfData<F>>> hopf_mutants(const hopfcyclic::HopfData<F>& h,
                                                                          std::size_t count, unsigned seed = 1) {
  std::mt19937 rng(seed);
  const std::size_t d = h.dim();
  auto pick = [&](std::size_t n) { return static_cast<std::size_t>(rng() % n); };
  const F one = h.field.one();
  std::vector<std::pair<std::string, hopfcyclic::HopfData<F>>> out;
  for (std::size_t t = 0; out.size() < count; ++t) {
    auto m = h;
    std::string what;
    switch (t % 5) {
      case 0: {
        std::size_t i = pick(d), j = pick(d), k = pick(d);
        m.algebra.mult[i * d + j] = bumped(m.algebra.mult[i * d + j], k, one);
        what = "mult(" + std::to_string(i) + "," + std::to_string(j) + ")[" + std::to_string(k) + "]";
        break;
      }
      case 1: {
        std::size_t k = pick(d), ij = pick(d * d);
        m.coalgebra.comult[k] = bumped(m.coalgebra.comult[k], ij, one);
        what = "comult(" + std::to_string(k) + ")[" + std::to_string(ij) + "]";
        break;
      }
      case 2: {
        std::size_t r = pick(d), c = pick(d);
        m.antipode = bumped(m.antipode, r, c, one);
        m.antipode_inverse.reset();
        what = "antipode[" + std::to_string(r) + "," + std::to_string(c) + "]";
        break;
      }
      case 3: {
        std::size_t i = pick(d);
        m.coalgebra.counit[i] += one;
        what = "counit[" + std::to_string(i) + "]";
        break;
      }
      default: {
        std::size_t i = pick(d);
        m.algebra.unit = bumped(m.algebra.unit, i, one);
        what = "unit[" + std::to_string(i) + "]";
        break;
      }
    }
    out.emplace_back(what, std::move(m));
  }
  return out;
}

/// Corruptions of the action matrices and the coaction, alternating.
template <class F>
std::vector<std::pair<std::string, hopfcyclic::SaydCandidate<F>>> module_mutants(const hopfcyclic::HopfData<F>& h,
                                                                                 const hopfcyclic::SaydCandidate<F>& m,
                                                                                 std::size_t count, unsigned seed = 1) {
  std::mt19937 rng(seed);
  auto pick = [&](std::size_t n) { return static_cast<std::size_t>(rng() % n); };
  const F one = h.field.one();
  std::vector<std::pair<std::string, hopfcyclic::SaydCandidate<F>>> out;
  for (std::size_t t = 0; out.size() < count; ++t) {
    auto c = m;
    c.is_module = c.is_comodule = c.is_yd = c.is_ayd = c.is_stable = hopfcyclic::Flag{};
    std::string what;
    if (t % 2 == 0) {
      std::size_t a = pick(h.dim()), r = pick(m.dim), col = pick(m.dim);
      c.action.mats[a] = bumped(c.action.mats[a], r, col, one);
      what = "action[" + std::to_string(a) + "](" + std::to_string(r) + "," + std::to_string(col) + ")";
    } else {
      std::size_t r = pick(h.dim() * m.dim), col = pick(m.dim);
      c.coaction.map = bumped(c.coaction.map, r, col, one);
      what = "coaction(" + std::to_string(r) + "," + std::to_string(col) + ")";
    }
    out.emplace_back(what, std::move(c));
  }
  return out;
}

}  // namespace mutations
