#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "fewweight/gf2m.hpp"

namespace fewweight {

/// Solves a^{2^h} x^{2^{2h}} + a x = rhs over GF(2^m).
///
/// The left side is GF(2)-linear in x, so it is written as an m x m bit
/// matrix on polynomial-basis coordinates and reduced once; each right-hand
/// side then costs m parity evaluations.
class AffineLinearizedSolver {
 public:
  /// Throws InvalidParameter when a = 0 or h is not a proper divisor of m.
  AffineLinearizedSolver(const Field& field, int h, Element a);

  /// The map x -> a^{2^h} x^{2^{2h}} + a x.
  Element apply(Element x) const;

  int rank() const { return rank_; }
  std::span<const Element> kernel_basis() const { return kernel_; }

  /// One solution (free coordinates set to zero), or empty when inconsistent.
  std::optional<Element> solve_one(Element rhs) const;

  /// Every solution in ascending order; 2^{m - rank} of them or none.
  std::vector<Element> solve_all(Element rhs) const;

 private:
  Field field_;
  int h_;
  Element a_;
  Element a_frob_;
  int rank_ = 0;
  // Row r of the reduced system: pivot column, coefficient mask over the
  // unknowns, and the combination of original equations that produced it.
  std::vector<int> pivot_;
  std::vector<std::uint32_t> coeff_;
  std::vector<std::uint32_t> combo_;
  std::vector<Element> kernel_;
};

/// Complete solution set of a^{2^h} x^{2^{2h}} + a x = rhs, ascending.
std::vector<Element> solve_affine_linearized(const Field& field, int h, Element a, Element rhs);

}  // namespace fewweight
