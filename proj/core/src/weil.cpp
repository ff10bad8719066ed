#include "fewweight/weil.hpp"

#include <numeric>
#include <stdexcept>
#include <utility>

#include "fewweight/errors.hpp"
#include "fewweight/linearized.hpp"

namespace fewweight {

namespace {

std::uint64_t mod_inverse(std::uint64_t a, std::uint64_t n) {
  std::int64_t t = 0, new_t = 1;
  std::int64_t r = static_cast<std::int64_t>(n), new_r = static_cast<std::int64_t>(a % n);
  while (new_r != 0) {
    const std::int64_t q = r / new_r;
    t = std::exchange(new_t, t - q * new_t);
    r = std::exchange(new_r, r - q * new_r);
  }
  if (r != 1) throw ConsistencyFailure("exponent is not invertible modulo the group order");
  return static_cast<std::uint64_t>(t < 0 ? t + static_cast<std::int64_t>(n) : t);
}

// (-1)^{e/h} for m = 2e.
std::int64_t even_case_sign(int m, int h) { return ((m / 2) / h) % 2 == 0 ? 1 : -1; }

}  // namespace

std::int64_t WeilSumValue::value() const {
  if (kind_ != Kind::Exact) throw std::logic_error("Weil sum sign is undetermined (magnitude only)");
  return v_;
}

std::uint64_t WeilSumValue::magnitude() const {
  return static_cast<std::uint64_t>(v_ < 0 ? -v_ : v_);
}

bool WeilSumValue::agrees_with(std::int64_t direct) const {
  if (kind_ == Kind::Exact) return v_ == direct;
  return direct != 0 && static_cast<std::uint64_t>(direct < 0 ? -direct : direct) == magnitude();
}

std::string to_string(const WeilSumValue& v) {
  if (v.is_exact()) return "exact:" + std::to_string(v.value());
  return "magnitude:" + std::to_string(v.magnitude());
}

WeilSumQuery WeilSumQuery::make(const Field& field, int h, Element a, Element b) {
  require_proper_divisor(field.degree(), h);
  if (a.is_zero()) throw InvalidParameter("Weil sum S_h(a, b) needs a != 0");
  if (a.bits >= field.size() || b.bits >= field.size())
    throw InvalidParameter("element outside GF(2^" + std::to_string(field.degree()) + ")");
  return WeilSumQuery{field, h, a, b};
}

WeilEvaluator::WeilEvaluator(const Field& field, int h) : field_(field), h_(h) {
  require_proper_divisor(field.degree(), h);
  exponent_ = (std::uint64_t{1} << h) + 1;
  subgroup_gcd_ = std::gcd(exponent_, std::uint64_t{field.group_order()});
  if (quotient_is_odd()) {
    if (subgroup_gcd_ != 1) throw ConsistencyFailure("gcd(2^h+1, 2^m-1) != 1 with m/h odd");
    exponent_inverse_ = mod_inverse(exponent_, field.group_order());
  }
  const int m = field.degree();
  dual_.assign(m, 0);
  for (int j = 0; j < m; ++j)
    for (int i = 0; i < m; ++i)
      if (field.trace(field.mul(Element(std::uint32_t{1} << i), Element(std::uint32_t{1} << j))))
        dual_[j] |= std::uint32_t{1} << i;
}

void WeilEvaluator::check_nonzero(Element a) const {
  if (a.is_zero()) throw InvalidParameter("Weil sum S_h(a, b) needs a != 0");
}

bool WeilEvaluator::is_power(Element a) const {
  check_nonzero(a);
  return field_.log(a) % subgroup_gcd_ == 0;
}

std::int64_t WeilEvaluator::direct(Element a, Element b) const {
  std::int64_t sum = 0;
  for (std::uint32_t u = 0; u < field_.size(); ++u) {
    const Element x(u);
    const Element arg = field_.mul(a, field_.pow(x, exponent_)) + field_.mul(b, x);
    sum += field_.trace(arg) ? -1 : 1;
  }
  return sum;
}

std::vector<std::int64_t> WeilEvaluator::direct_spectrum(Element a) const {
  const std::uint32_t q = field_.size();
  std::vector<std::int64_t> f(q);
  for (std::uint32_t u = 0; u < q; ++u)
    f[u] = field_.trace(field_.mul(a, field_.pow(Element(u), exponent_))) ? -1 : 1;
  for (std::uint32_t len = 1; len < q; len <<= 1)
    for (std::uint32_t i = 0; i < q; i += len << 1)
      for (std::uint32_t j = i; j < i + len; ++j) {
        const std::int64_t x = f[j], y = f[j + len];
        f[j] = x + y;
        f[j + len] = x - y;
      }
  std::vector<std::int64_t> out(q);
  for (std::uint32_t b = 0; b < q; ++b) {
    std::uint32_t v = 0;
    for (std::size_t j = 0; j < dual_.size(); ++j)
      if ((b >> j) & 1) v ^= dual_[j];
    out[b] = f[v];
  }
  return out;
}

WeilSumValue WeilEvaluator::closed_odd(Element a, Element b) const {
  if (b.is_zero()) return WeilSumValue::exact(0);
  // c^{2^h+1} = a has the unique solution c = a^{(2^h+1)^{-1}}.
  const Element c = field_.exp(std::uint64_t{field_.log(a)} * exponent_inverse_);
  const Element shifted = field_.mul(b, field_.inverse(c));
  if (field_.relative_trace(h_, shifted) != Field::one()) return WeilSumValue::exact(0);
  return WeilSumValue::magnitude_only(std::uint64_t{1} << ((field_.degree() + h_) / 2));
}

WeilSumValue WeilEvaluator::closed(Element a, Element b) const {
  check_nonzero(a);
  WeilSumValue result = WeilSumValue::exact(0);
  if (quotient_is_odd()) {
    result = closed_odd(a, b);
  } else {
    const int m = field_.degree();
    const int e = m / 2;
    const std::int64_t s = even_case_sign(m, h_);
    const bool power = is_power(a);
    if (b.is_zero()) {
      result = WeilSumValue::exact(power ? -s * (std::int64_t{1} << (e + h_)) : s * (std::int64_t{1} << e));
    } else {
      const AffineLinearizedSolver solver(field_, h_, a);
      const auto x0 = solver.solve_one(field_.frobenius(b, h_));
      if (!x0) {
        if (!power) throw ConsistencyFailure("permutation linearized polynomial has no preimage");
      } else {
        const std::int64_t chi = field_.trace(field_.mul(a, field_.pow(*x0, exponent_))) ? -1 : 1;
        result = WeilSumValue::exact(power ? -s * (std::int64_t{1} << (e + h_)) * chi
                                           : s * (std::int64_t{1} << e) * chi);
      }
    }
  }
#ifdef FEWWEIGHT_VALIDATE
  if (field_.degree() <= 12 && !result.agrees_with(direct(a, b)))
    throw ConsistencyFailure("closed-form Weil sum disagrees with direct summation");
#endif
  return result;
}

std::vector<WeilSumValue> WeilEvaluator::closed_spectrum(Element a) const {
  check_nonzero(a);
  const std::uint32_t q = field_.size();
  std::vector<WeilSumValue> out;
  out.reserve(q);
  if (quotient_is_odd()) {
    for (std::uint32_t b = 0; b < q; ++b) out.push_back(closed_odd(a, Element(b)));
    return out;
  }
  const int m = field_.degree();
  const int e = m / 2;
  const std::int64_t s = even_case_sign(m, h_);
  const bool power = is_power(a);
  const std::int64_t big = -s * (std::int64_t{1} << (e + h_));
  const std::int64_t small = s * (std::int64_t{1} << e);
  out.push_back(WeilSumValue::exact(power ? big : small));
  const AffineLinearizedSolver solver(field_, h_, a);
  for (std::uint32_t b = 1; b < q; ++b) {
    const auto x0 = solver.solve_one(field_.frobenius(Element(b), h_));
    if (!x0) {
      if (!power) throw ConsistencyFailure("permutation linearized polynomial has no preimage");
      out.push_back(WeilSumValue::exact(0));
      continue;
    }
    const std::int64_t chi = field_.trace(field_.mul(a, field_.pow(*x0, exponent_))) ? -1 : 1;
    out.push_back(WeilSumValue::exact((power ? big : small) * chi));
  }
  return out;
}

std::int64_t weil_sum_direct(const WeilSumQuery& q) { return WeilEvaluator(q.field, q.h).direct(q.a, q.b); }

WeilSumValue weil_sum_closed(const WeilSumQuery& q) { return WeilEvaluator(q.field, q.h).closed(q.a, q.b); }

bool is_power_2h_plus_1(const Field& field, int h, Element a) { return WeilEvaluator(field, h).is_power(a); }

SubfieldImageCounts subfield_image_counts(const Field& field, int h) {
  require_proper_divisor(field.degree(), h);
  const int m = field.degree();
  if ((m / h) % 2 != 0)
    throw InvalidParameter("T0/T1 counts need m/h even; m=" + std::to_string(m) + ", h=" + std::to_string(h));
  const std::uint64_t exponent = (std::uint64_t{1} << h) + 1;
  SubfieldImageCounts counts;
  for (std::uint32_t u = 0; u < field.size(); ++u)
    if (field.trace(field.pow(Element(u), exponent)) == 0) ++counts.t0;
  counts.t1 = field.size() - counts.t0;

  const int e = m / 2;
  const std::int64_t s = even_case_sign(m, h);
  const std::int64_t expected_t0 = (std::int64_t{1} << (m - 1)) - s * (std::int64_t{1} << (e + h - 1));
  if (static_cast<std::int64_t>(counts.t0) != expected_t0)
    throw ConsistencyFailure("T0 count " + std::to_string(counts.t0) + " differs from closed form " +
                             std::to_string(expected_t0));
  return counts;
}

}  // namespace fewweight
