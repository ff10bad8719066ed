#pragma once

#include <compare>
#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace fewweight {

/// Bit-encoded polynomial over GF(2): bit i is the coefficient of x^i,
/// so x^3 + x + 1 is 0b1011 = 11.
using Polynomial = std::uint64_t;

/// An element of GF(2^m) in polynomial-basis coordinates.
struct Element {
  std::uint32_t bits = 0;

  constexpr Element() = default;
  constexpr explicit Element(std::uint32_t b) : bits(b) {}

  constexpr bool is_zero() const { return bits == 0; }

  friend constexpr Element operator+(Element a, Element b) { return Element(a.bits ^ b.bits); }
  constexpr Element& operator+=(Element o) {
    bits ^= o.bits;
    return *this;
  }
  friend constexpr bool operator==(Element, Element) = default;
  friend constexpr auto operator<=>(Element, Element) = default;
};

std::string to_string(Polynomial p);

/// Smallest k in [1, deg/2] with gcd(f, x^{2^k} + x) != 1, i.e. a witness that
/// f has an irreducible factor of degree dividing k. Empty when f is
/// irreducible. Polynomials of degree < 1 are never irreducible (returns 0).
std::optional<int> reducibility_witness(Polynomial f);
bool is_irreducible(Polynomial f);

/// The first `count` irreducible polynomials of degree m in increasing
/// integer order.
std::vector<Polynomial> irreducible_polynomials(int m, std::size_t count);

/// True when h is a proper positive divisor of m.
constexpr bool is_proper_divisor(int m, int h) { return h >= 1 && h < m && m % h == 0; }

/// Throws InvalidParameter unless h is a proper positive divisor of m.
void require_proper_divisor(int m, int h);

/// GF(2^m) for 2 <= m <= 20 with log/antilog and trace tables.
///
/// Immutable after construction; copies share the tables, so a Field can be
/// passed by value and used from several threads at once.
class Field {
 public:
  static constexpr int kMinDegree = 2;
  static constexpr int kMaxDegree = 20;

  /// Builds GF(2^m). Without a modulus the smallest irreducible polynomial of
  /// degree m is used. The generator is the smallest element of full order.
  static Field build(int m, std::optional<Polynomial> modulus = std::nullopt);

  int degree() const { return t_->m; }
  std::uint32_t size() const { return t_->size; }
  std::uint32_t group_order() const { return t_->order; }
  Polynomial modulus() const { return t_->modulus; }
  Element generator() const { return t_->generator; }

  static constexpr Element zero() { return Element(0); }
  static constexpr Element one() { return Element(1); }

  Element mul(Element a, Element b) const {
    if (a.is_zero() || b.is_zero()) return Element();
    return Element(t_->antilog[t_->log[a.bits] + t_->log[b.bits]]);
  }

  /// a^k with 0^0 = 1.
  Element pow(Element a, std::uint64_t k) const;
  Element inverse(Element a) const;
  /// a^{2^k}.
  Element frobenius(Element a, int k) const;

  /// Discrete log to the base generator(); throws on zero.
  std::uint32_t log(Element a) const;
  /// generator()^k.
  Element exp(std::uint64_t k) const { return Element(t_->antilog[k % t_->order]); }

  /// Absolute trace to GF(2), 0 or 1.
  int trace(Element a) const { return t_->trace[a.bits]; }

  /// Trace to the subfield GF(2^h): sum of a^{2^{hi}} for i < m/h.
  Element relative_trace(int h, Element a) const;

  /// log_table()[a] for a != 0; entry 0 is unused.
  std::span<const std::uint32_t> log_table() const { return t_->log; }
  /// antilog_table()[i] = g^i for 0 <= i < 2^m - 1.
  std::span<const std::uint32_t> antilog_table() const {
    return std::span<const std::uint32_t>(t_->antilog).first(t_->order);
  }
  std::span<const std::uint8_t> trace_table() const { return t_->trace; }

 private:
  struct Tables {
    int m = 0;
    std::uint32_t size = 0;
    std::uint32_t order = 0;
    Polynomial modulus = 0;
    Element generator;
    std::vector<std::uint32_t> log;
    // Doubled so that log[a] + log[b] indexes without reduction.
    std::vector<std::uint32_t> antilog;
    std::vector<std::uint8_t> trace;
  };

  explicit Field(std::shared_ptr<const Tables> t) : t_(std::move(t)) {}

  std::shared_ptr<const Tables> t_;
};

}  // namespace fewweight
