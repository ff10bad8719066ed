#include "fewweight/gf2m.hpp"

#include <bit>
#include <sstream>
#include <utility>

#include "fewweight/errors.hpp"

namespace fewweight {

namespace {

int poly_degree(Polynomial p) { return p == 0 ? -1 : std::bit_width(p) - 1; }

Polynomial poly_mod(Polynomial a, Polynomial f) {
  const int df = poly_degree(f);
  for (int da = poly_degree(a); da >= df; da = poly_degree(a)) a ^= f << (da - df);
  return a;
}

// Operands must already be reduced modulo f with deg f <= 21.
Polynomial poly_mulmod(Polynomial a, Polynomial b, Polynomial f) {
  Polynomial r = 0;
  while (b != 0) {
    if (b & 1) r ^= a;
    b >>= 1;
    a <<= 1;
  }
  return poly_mod(r, f);
}

Polynomial poly_gcd(Polynomial a, Polynomial b) {
  while (b != 0) {
    a = poly_mod(a, b);
    std::swap(a, b);
  }
  return a;
}

Polynomial poly_powmod(Polynomial base, std::uint64_t e, Polynomial f) {
  Polynomial r = poly_mod(1, f);
  base = poly_mod(base, f);
  while (e != 0) {
    if (e & 1) r = poly_mulmod(r, base, f);
    base = poly_mulmod(base, base, f);
    e >>= 1;
  }
  return r;
}

std::vector<std::uint64_t> prime_factors(std::uint64_t n) {
  std::vector<std::uint64_t> out;
  for (std::uint64_t p = 2; p * p <= n; ++p) {
    if (n % p != 0) continue;
    out.push_back(p);
    while (n % p == 0) n /= p;
  }
  if (n > 1) out.push_back(n);
  return out;
}

}  // namespace

std::string to_string(Polynomial p) {
  if (p == 0) return "0";
  std::ostringstream os;
  bool first = true;
  for (int i = poly_degree(p); i >= 0; --i) {
    if (((p >> i) & 1) == 0) continue;
    if (!first) os << " + ";
    first = false;
    if (i == 0)
      os << "1";
    else if (i == 1)
      os << "x";
    else
      os << "x^" << i;
  }
  return os.str();
}

std::optional<int> reducibility_witness(Polynomial f) {
  const int d = poly_degree(f);
  if (d < 1) return 0;
  // x^{2^k} mod f, advanced by one squaring per step.
  Polynomial xp = poly_mod(0b10, f);
  for (int k = 1; k <= d / 2; ++k) {
    xp = poly_mulmod(xp, xp, f);
    if (poly_gcd(f, xp ^ 0b10) != 1) return k;
  }
  return std::nullopt;
}

bool is_irreducible(Polynomial f) { return !reducibility_witness(f).has_value(); }

std::vector<Polynomial> irreducible_polynomials(int m, std::size_t count) {
  std::vector<Polynomial> out;
  for (Polynomial p = Polynomial{1} << m; p < (Polynomial{1} << (m + 1)) && out.size() < count; ++p)
    if (is_irreducible(p)) out.push_back(p);
  return out;
}

void require_proper_divisor(int m, int h) {
  if (!is_proper_divisor(m, h))
    throw InvalidParameter("h=" + std::to_string(h) + " is not a proper positive divisor of m=" +
                           std::to_string(m));
}

Field Field::build(int m, std::optional<Polynomial> modulus) {
  if (m < kMinDegree || m > kMaxDegree)
    throw InvalidParameter("extension degree m=" + std::to_string(m) + " outside [" +
                           std::to_string(kMinDegree) + ", " + std::to_string(kMaxDegree) + "]");

  Polynomial f = 0;
  if (modulus) {
    f = *modulus;
    if (poly_degree(f) != m)
      throw InvalidParameter("modulus " + to_string(f) + " has degree " +
                             std::to_string(poly_degree(f)) + ", expected " + std::to_string(m));
    if (auto k = reducibility_witness(f))
      throw InvalidParameter("modulus " + to_string(f) + " is reducible: gcd(f, x^(2^" +
                             std::to_string(*k) + ") + x) = " +
                             to_string(poly_gcd(f, poly_powmod(0b10, Polynomial{1} << *k, f) ^ 0b10)));
  } else {
    f = irreducible_polynomials(m, 1).front();
  }

  auto t = std::make_shared<Tables>();
  t->m = m;
  t->size = std::uint32_t{1} << m;
  t->order = t->size - 1;
  t->modulus = f;

  const auto factors = prime_factors(t->order);
  auto full_order = [&](Polynomial c) {
    if (poly_powmod(c, t->order, f) != 1) return false;
    for (auto p : factors)
      if (poly_powmod(c, t->order / p, f) == 1) return false;
    return true;
  };
  Polynomial g = 1;
  while (!full_order(g)) ++g;
  t->generator = Element(static_cast<std::uint32_t>(g));

  t->log.assign(t->size, 0);
  t->antilog.assign(2 * std::size_t{t->order}, 0);
  Polynomial v = 1;
  for (std::uint32_t i = 0; i < t->order; ++i) {
    t->antilog[i] = static_cast<std::uint32_t>(v);
    t->antilog[i + t->order] = static_cast<std::uint32_t>(v);
    t->log[v] = i;
    v = poly_mulmod(v, g, f);
  }
  if (v != 1) throw ConsistencyFailure("generator powers did not cycle back to 1");

  Field field(t);

  // Tr(a) = a + a^2 + ... + a^{2^{m-1}}, evaluated in the field.
  t->trace.assign(t->size, 0);
  std::uint32_t zeros = 0;
  for (std::uint32_t a = 0; a < t->size; ++a) {
    Element acc;
    Element x(a);
    for (int i = 0; i < m; ++i) {
      acc += x;
      x = field.mul(x, x);
    }
    if (acc.bits > 1) throw ConsistencyFailure("trace left GF(2) at element " + std::to_string(a));
    t->trace[a] = static_cast<std::uint8_t>(acc.bits);
    zeros += acc.bits == 0;
  }
  if (zeros != t->size / 2) throw ConsistencyFailure("trace is not balanced");

  return field;
}

Element Field::pow(Element a, std::uint64_t k) const {
  if (a.is_zero()) return k == 0 ? one() : zero();
  const std::uint64_t e = (std::uint64_t{t_->log[a.bits]} * (k % t_->order)) % t_->order;
  return Element(t_->antilog[e]);
}

Element Field::inverse(Element a) const {
  if (a.is_zero()) throw InvalidParameter("zero has no multiplicative inverse");
  const std::uint32_t l = t_->log[a.bits];
  return Element(t_->antilog[l == 0 ? 0 : t_->order - l]);
}

Element Field::frobenius(Element a, int k) const {
  if (a.is_zero()) return a;
  // 2^m = 1 modulo the group order, so only k mod m matters.
  const std::uint64_t e = (std::uint64_t{t_->log[a.bits]} << (k % t_->m)) % t_->order;
  return Element(t_->antilog[e]);
}

std::uint32_t Field::log(Element a) const {
  if (a.is_zero()) throw InvalidParameter("log of zero is undefined");
  return t_->log[a.bits];
}

Element Field::relative_trace(int h, Element a) const {
  require_proper_divisor(t_->m, h);
  Element acc;
  for (int i = 0; i < t_->m / h; ++i) acc += frobenius(a, h * i);
  return acc;
}

}  // namespace fewweight
