#pragma once

// Reference arithmetic for GF(2^m) written against plain integers, sharing no
// code with the library. Slow on purpose: shift-and-add multiplication,
// square-and-multiply powers, traces summed term by term.

#include <cstdint>
#include <map>
#include <vector>

namespace oracle {

inline int degree(std::uint64_t p) {
  int d = -1;
  while (p) {
    p >>= 1;
    ++d;
  }
  return d;
}

// Carry-less product in GF(2)[x].
inline std::uint64_t clmul(std::uint64_t a, std::uint64_t b) {
  std::uint64_t r = 0;
  for (int i = 0; b; ++i, b >>= 1)
    if (b & 1) r ^= a << i;
  return r;
}

inline std::uint64_t poly_mod(std::uint64_t a, std::uint64_t f) {
  const int df = degree(f);
  for (int d = degree(a); d >= df; d = degree(a)) a ^= f << (d - df);
  return a;
}

// Trial division by every polynomial of degree 1..deg/2.
inline bool irreducible_by_trial_division(std::uint64_t f) {
  const int d = degree(f);
  if (d < 1) return false;
  for (std::uint64_t g = 2; degree(g) <= d / 2; ++g)
    if (poly_mod(f, g) == 0) return false;
  return true;
}

struct NaiveField {
  int m;
  std::uint64_t f;

  std::uint32_t size() const { return std::uint32_t{1} << m; }
  std::uint32_t add(std::uint32_t a, std::uint32_t b) const { return a ^ b; }
  std::uint32_t mul(std::uint32_t a, std::uint32_t b) const {
    return static_cast<std::uint32_t>(poly_mod(clmul(a, b), f));
  }
  std::uint32_t pow(std::uint32_t a, std::uint64_t k) const {
    std::uint32_t r = 1;
    while (k) {
      if (k & 1) r = mul(r, a);
      a = mul(a, a);
      k >>= 1;
    }
    return r;
  }
  std::uint32_t square(std::uint32_t a) const { return mul(a, a); }
  std::uint32_t frob(std::uint32_t a, int k) const {
    for (int i = 0; i < k; ++i) a = square(a);
    return a;
  }
  int trace(std::uint32_t a) const {
    std::uint32_t t = 0, x = a;
    for (int i = 0; i < m; ++i) {
      t ^= x;
      x = square(x);
    }
    return static_cast<int>(t);  // t is 0 or 1
  }
  std::uint32_t relative_trace(int h, std::uint32_t a) const {
    std::uint32_t t = 0, x = a;
    for (int i = 0; i < m / h; ++i) {
      t ^= x;
      x = frob(x, h);
    }
    return t;
  }
  std::uint64_t order(std::uint32_t a) const {
    std::uint64_t k = 1;
    for (std::uint32_t x = a; x != 1; x = mul(x, a)) ++k;
    return k;
  }

  std::int64_t weil(int h, std::uint32_t a, std::uint32_t b) const {
    const std::uint64_t e = (std::uint64_t{1} << h) + 1;
    std::int64_t s = 0;
    for (std::uint32_t x = 0; x < size(); ++x) s += trace(mul(a, pow(x, e)) ^ mul(b, x)) ? -1 : 1;
    return s;
  }

  // Weights of (Tr(x * phi(d)))_d for every message x, x = 0 included.
  std::map<std::uint64_t, std::uint64_t> message_weights(const std::vector<std::uint32_t>& columns) const {
    std::map<std::uint64_t, std::uint64_t> out;
    for (std::uint32_t x = 0; x < size(); ++x) {
      std::uint64_t w = 0;
      for (auto c : columns) w += static_cast<std::uint64_t>(trace(mul(x, c)));
      ++out[w];
    }
    return out;
  }
};

}  // namespace oracle
