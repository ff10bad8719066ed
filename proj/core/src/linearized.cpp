#include "fewweight/linearized.hpp"

#include <algorithm>
#include <bit>
#include <utility>

#include "fewweight/errors.hpp"

namespace fewweight {

namespace {

int parity(std::uint32_t v) { return std::popcount(v) & 1; }

}  // namespace

AffineLinearizedSolver::AffineLinearizedSolver(const Field& field, int h, Element a)
    : field_(field), h_(h), a_(a) {
  require_proper_divisor(field.degree(), h);
  if (a.is_zero()) throw InvalidParameter("linearized equation needs a nonzero leading coefficient a");
  a_frob_ = field.frobenius(a, h);

  const int m = field.degree();
  coeff_.assign(m, 0);
  combo_.assign(m, 0);
  for (int j = 0; j < m; ++j) {
    const Element image = apply(Element(std::uint32_t{1} << j));
    for (int i = 0; i < m; ++i)
      if ((image.bits >> i) & 1) coeff_[i] |= std::uint32_t{1} << j;
  }
  for (int i = 0; i < m; ++i) combo_[i] = std::uint32_t{1} << i;

  // Reduced row echelon form, tracking the row operations in combo_.
  for (int col = 0; col < m && rank_ < m; ++col) {
    const std::uint32_t bit = std::uint32_t{1} << col;
    int r = rank_;
    while (r < m && (coeff_[r] & bit) == 0) ++r;
    if (r == m) continue;
    std::swap(coeff_[r], coeff_[rank_]);
    std::swap(combo_[r], combo_[rank_]);
    for (int o = 0; o < m; ++o) {
      if (o == rank_ || (coeff_[o] & bit) == 0) continue;
      coeff_[o] ^= coeff_[rank_];
      combo_[o] ^= combo_[rank_];
    }
    pivot_.push_back(col);
    ++rank_;
  }

  std::uint32_t pivots = 0;
  for (int c : pivot_) pivots |= std::uint32_t{1} << c;
  for (int f = 0; f < m; ++f) {
    if ((pivots >> f) & 1) continue;
    std::uint32_t v = std::uint32_t{1} << f;
    for (int r = 0; r < rank_; ++r)
      if ((coeff_[r] >> f) & 1) v |= std::uint32_t{1} << pivot_[r];
    kernel_.emplace_back(v);
  }
}

Element AffineLinearizedSolver::apply(Element x) const {
  return field_.mul(a_frob_, field_.frobenius(x, 2 * h_)) + field_.mul(a_, x);
}

std::optional<Element> AffineLinearizedSolver::solve_one(Element rhs) const {
  const int m = field_.degree();
  for (int r = rank_; r < m; ++r)
    if (parity(combo_[r] & rhs.bits)) return std::nullopt;
  std::uint32_t x = 0;
  for (int r = 0; r < rank_; ++r)
    if (parity(combo_[r] & rhs.bits)) x |= std::uint32_t{1} << pivot_[r];
  return Element(x);
}

std::vector<Element> AffineLinearizedSolver::solve_all(Element rhs) const {
  std::vector<Element> out;
  const auto x0 = solve_one(rhs);
  if (!x0) return out;
  const std::size_t count = std::size_t{1} << kernel_.size();
  out.reserve(count);
  for (std::size_t mask = 0; mask < count; ++mask) {
    Element x = *x0;
    for (std::size_t i = 0; i < kernel_.size(); ++i)
      if ((mask >> i) & 1) x += kernel_[i];
    out.push_back(x);
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<Element> solve_affine_linearized(const Field& field, int h, Element a, Element rhs) {
  return AffineLinearizedSolver(field, h, a).solve_all(rhs);
}

}  // namespace fewweight
