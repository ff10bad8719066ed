#pragma once

#include <cstdint>
#include <iosfwd>
#include <map>
#include <optional>
#include <span>
#include <string_view>
#include <vector>

#include "fewweight/gf2m.hpp"

namespace fewweight {

enum class DefiningSetKind {
  D0,              // {x != 0 : Tr(x) = 0}
  D1,              // {x : Tr(x) = 1}
  FullStar,        // GF(2^m)^*
  PuncturedImage,  // {x^{2^h+1} : x != 0}, m/h even
  Custom,
};

std::string_view to_string(DefiningSetKind kind);
/// Accepts the CLI spellings d0, d1, full, punctured.
std::optional<DefiningSetKind> parse_defining_set_kind(std::string_view name);

/// Nonzero field elements in ascending integer order.
struct DefiningSet {
  DefiningSetKind kind = DefiningSetKind::Custom;
  int h = 0;  // the h of {x^{2^h+1}}; PuncturedImage only
  std::vector<Element> elements;
};

DefiningSet defining_set(const Field& field, DefiningSetKind kind, int h = 0);
/// Sorted and deduplicated; throws InvalidParameter on zero or out-of-field elements.
DefiningSet custom_defining_set(const Field& field, std::vector<Element> elements);

/// The code {(Tr(x phi(d)))_{d in D} : x in GF(2^m)} with phi(d) = d^{2^h+1},
/// or phi(d) = d when h = 0.
class LinearCode {
 public:
  /// Throws InvalidParameter unless h = 0 or h is a proper divisor of m.
  LinearCode(Field field, int h, DefiningSet defset);

  const Field& field() const { return field_; }
  /// Exponent parameter of phi; 0 for the identity map.
  int map_h() const { return h_; }
  /// The h a reader would quote for this code: map_h(), or the h of a
  /// punctured-image defining set.
  int parameter_h() const { return h_ != 0 ? h_ : defset_.h; }
  const DefiningSet& defining_set() const { return defset_; }
  DefiningSetKind kind() const { return defset_.kind; }

  std::size_t length() const { return columns_.size(); }
  int dimension() const { return k_; }

  /// phi(d) for each d of the defining set, in order.
  std::span<const Element> columns() const { return columns_; }

  std::vector<std::uint8_t> codeword(Element message) const;

 private:
  Field field_;
  int h_;
  DefiningSet defset_;
  std::vector<Element> columns_;
  int k_ = 0;
};

LinearCode build_code(const Field& field, int h, DefiningSet defset);

/// The code over {x^{2^h+1}} with phi(d) = d. Requires m/h even and m > 2.
LinearCode punctured_code(const Field& field, int h);

/// Number of d in the defining set with Tr(x phi(d)) = 1.
std::uint64_t codeword_weight_direct(const LinearCode& code, Element message);

/// Weight of the message-b codeword of the D_a code with parameter h, from
/// 2^{m-1} - |N(a,b)| and |N(a,b)| = 2^{m-2} + (S_h(b,0) + (-1)^a S_h(b,1))/4.
/// Uses closed-form Weil sums when exact, direct summation otherwise.
std::uint64_t codeword_weight_formula(const Field& field, int h, int a, Element b);

using WeightCounts = std::map<std::uint64_t, std::uint64_t>;

struct EnumerationOptions {
  /// Upper bound on 2^m * n coordinate evaluations; the default admits m <= 16.
  std::uint64_t budget = std::uint64_t{1} << 32;
  /// 0 selects std::thread::hardware_concurrency().
  unsigned workers = 0;
};

struct WeightDistribution {
  int m = 0;
  int h = 0;  // parameter_h() of the code
  DefiningSetKind kind = DefiningSetKind::Custom;
  std::uint64_t n = 0;
  int k = 0;
  /// Weight of the codeword of every message x in GF(2^m); sums to 2^m.
  /// This is the multiset the weight tables and moment identities describe.
  WeightCounts message_counts;
  /// Distinct codewords; sums to 2^k. Equal to message_counts when k = m.
  WeightCounts counts;
  /// Smallest nonzero weight, 0 when every codeword is zero.
  std::uint64_t d_min = 0;

  bool full_rank() const { return k == m; }
  /// message_counts without the x = 0 entry.
  WeightCounts nonzero_message_counts() const;
  std::size_t distinct_nonzero_weights() const;
};

/// Exact distribution by enumerating all messages; throws BudgetExceeded when
/// 2^m * n exceeds options.budget.
WeightDistribution weight_distribution(const LinearCode& code, const EnumerationOptions& options = {});

/// Dense GF(2) matrix, rows packed into 64-bit words.
class BitMatrix {
 public:
  BitMatrix() = default;
  BitMatrix(std::size_t rows, std::size_t cols);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool get(std::size_t r, std::size_t c) const { return (row(r)[c / 64] >> (c % 64)) & 1; }
  void set(std::size_t r, std::size_t c, bool v);

  /// Reduces to row echelon form in place, drops zero rows, returns the rank.
  std::size_t row_reduce();

 private:
  std::span<std::uint64_t> row(std::size_t r) { return {words_.data() + r * stride_, stride_}; }
  std::span<const std::uint64_t> row(std::size_t r) const { return {words_.data() + r * stride_, stride_}; }

  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::size_t stride_ = 0;
  std::vector<std::uint64_t> words_;
};

/// Codewords of the basis messages 1, x, ..., x^{m-1}, row reduced; k x n.
BitMatrix generator_matrix(const LinearCode& code);

/// Header line "n k m h modulus" followed by one '0'/'1' row per line.
void write_generator_matrix(std::ostream& os, const LinearCode& code);

}  // namespace fewweight
