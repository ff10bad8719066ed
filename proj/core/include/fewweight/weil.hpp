#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "fewweight/gf2m.hpp"

namespace fewweight {

/// Value of S_h(a, b) = sum over x of (-1)^{Tr(a x^{2^h+1} + b x)}.
///
/// The closed form for m/h odd and Tr_h(b c^{-1}) = 1 only fixes the
/// magnitude, so that case is carried as MagnitudeOnly; callers needing the
/// sign use weil_sum_direct.
class WeilSumValue {
 public:
  enum class Kind { Exact, MagnitudeOnly };

  static WeilSumValue exact(std::int64_t value) { return WeilSumValue(Kind::Exact, value); }
  static WeilSumValue magnitude_only(std::uint64_t magnitude) {
    return WeilSumValue(Kind::MagnitudeOnly, static_cast<std::int64_t>(magnitude));
  }

  Kind kind() const { return kind_; }
  bool is_exact() const { return kind_ == Kind::Exact; }
  /// Throws std::logic_error for MagnitudeOnly values.
  std::int64_t value() const;
  std::uint64_t magnitude() const;

  /// Exact: equality. MagnitudeOnly: |direct| equals the magnitude.
  bool agrees_with(std::int64_t direct) const;

  friend bool operator==(const WeilSumValue&, const WeilSumValue&) = default;

 private:
  WeilSumValue(Kind kind, std::int64_t v) : kind_(kind), v_(v) {}

  Kind kind_;
  std::int64_t v_;
};

std::string to_string(const WeilSumValue& v);

/// Validated (field, h, a, b): h a proper divisor of m and a != 0.
struct WeilSumQuery {
  Field field;
  int h;
  Element a;
  Element b;

  static WeilSumQuery make(const Field& field, int h, Element a, Element b);
};

/// Weil sums for one (field, h), with the per-h constants precomputed.
class WeilEvaluator {
 public:
  WeilEvaluator(const Field& field, int h);

  const Field& field() const { return field_; }
  int h() const { return h_; }
  /// 2^h + 1.
  std::uint64_t exponent() const { return exponent_; }
  bool quotient_is_odd() const { return (field_.degree() / h_) % 2 == 1; }

  /// Direct summation over all 2^m elements.
  std::int64_t direct(Element a, Element b) const;

  /// direct(a, b) for every b, indexed by b.bits, via a fast Walsh-Hadamard
  /// transform of x -> (-1)^{Tr(a x^{2^h+1})}.
  std::vector<std::int64_t> direct_spectrum(Element a) const;

  WeilSumValue closed(Element a, Element b) const;

  /// closed(a, b) for every b, indexed by b.bits, sharing one linear solver.
  std::vector<WeilSumValue> closed_spectrum(Element a) const;

  /// True iff a = c^{2^h+1} for some c.
  bool is_power(Element a) const;

 private:
  WeilSumValue closed_odd(Element a, Element b) const;
  void check_nonzero(Element a) const;

  Field field_;
  int h_;
  std::uint64_t exponent_;
  std::uint64_t subgroup_gcd_;
  std::uint64_t exponent_inverse_ = 0;  // modulo 2^m - 1, m/h odd only
  // Trace-dual coordinates of the basis x^j: bit i of dual_[j] is Tr(x^{i+j}).
  std::vector<std::uint32_t> dual_;
};

std::int64_t weil_sum_direct(const WeilSumQuery& q);
WeilSumValue weil_sum_closed(const WeilSumQuery& q);

/// Whether a is a (2^h+1)-th power; throws InvalidParameter for a = 0.
bool is_power_2h_plus_1(const Field& field, int h, Element a);

struct SubfieldImageCounts {
  std::uint64_t t0 = 0;  // |{x : Tr(x^{2^h+1}) = 0}|
  std::uint64_t t1 = 0;  // 2^m - t0
};

/// Direct count, checked against 2^{m-1} -/+ (-1)^{e/h} 2^{e+h-1}.
/// Requires m/h even.
SubfieldImageCounts subfield_image_counts(const Field& field, int h);

}  // namespace fewweight
