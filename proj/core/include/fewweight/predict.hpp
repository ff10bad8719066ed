#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <boost/rational.hpp>

#include "fewweight/code.hpp"

namespace fewweight {

using Rational = boost::rational<std::int64_t>;

/// Which weight table a prediction evaluates.
///   T1: D0 code, m/h odd          T2: D1 code, m/h odd
///   T3: D0 code, m/h even > 2     T4: D1 code, m/h even > 2
///   T5: full code, m/h even, m>2  C6: punctured code, m/h even, m>2
enum class Theorem { T1, T2, T3, T4, T5, C6 };

/// AsPrinted evaluates the table entries verbatim. MomentCorrected keeps the
/// weights and the multiplicities obtained directly from character-sum
/// counting, and re-solves the remaining two from the first two power
/// moments. The forms only differ for T2 and T3.
enum class TableForm { AsPrinted, MomentCorrected };

std::string_view to_string(Theorem t);
std::string_view to_string(TableForm f);
std::optional<Theorem> parse_theorem(std::string_view name);
std::optional<TableForm> parse_table_form(std::string_view name);

/// The code family a table describes.
DefiningSetKind variant_of(Theorem t);

/// The table covering `kind` for the parity of m/h; empty for custom sets.
std::optional<Theorem> theorem_for(int m, int h, DefiningSetKind kind);

struct PredictedRow {
  Rational weight;
  Rational multiplicity;
};

struct TheoremPrediction {
  Theorem source = Theorem::T1;
  TableForm form = TableForm::AsPrinted;
  int m = 0;
  int h = 0;
  bool applicable = false;
  /// The hypothesis, and why it fails when !applicable.
  std::string hypothesis;
  std::uint64_t length = 0;
  /// Nonzero messages only, ascending weight; zero multiplicities dropped and
  /// equal weights merged.
  std::vector<PredictedRow> rows;

  bool integral() const;
  std::size_t distinct_nonzero_weights() const;
};

/// Evaluates the table for (m, h). An unmet hypothesis yields
/// applicable = false and no rows. Throws InvalidParameter when h is not a
/// proper divisor of m.
TheoremPrediction predict_distribution(int m, int h, Theorem source, TableForm form = TableForm::AsPrinted);

enum class VerificationStatus { Match, Mismatch, Inapplicable };
std::string_view to_string(VerificationStatus s);

struct WeightComparison {
  Rational weight;
  Rational expected;
  std::uint64_t actual = 0;
};

struct VerificationReport {
  int m = 0;
  int h = 0;
  DefiningSetKind variant = DefiningSetKind::D0;
  Theorem source = Theorem::T1;
  TableForm form = TableForm::AsPrinted;
  VerificationStatus status = VerificationStatus::Inapplicable;
  /// Every weight present in either table; rows with expected == actual
  /// included. Empty when inapplicable.
  std::vector<WeightComparison> details;
  /// Both power-moment identities on the enumerated distribution.
  bool moment_check = false;
  /// Both power-moment identities on the prediction (false if inapplicable).
  bool prediction_moment_check = false;
  /// The tables state dimension m; false when the enumerated rank is lower.
  bool dimension_ok = false;
  std::uint64_t n = 0;
  int k = 0;
  std::uint64_t d_min = 0;
  WeightCounts computed;  // nonzero messages
  std::vector<std::string> notes;
};

/// Compares a prediction to an enumerated distribution of the same (m, h)
/// and code family; throws InvalidParameter on a parameter mismatch.
VerificationReport verify(const TheoremPrediction& pred, const WeightDistribution& computed);

/// sum A_w = 2^m - 1 and sum w A_w = n 2^{m-1} over nonzero messages.
bool pless_check(const WeightDistribution& dist);
bool pless_check(const TheoremPrediction& pred);

struct SecretSharingRatio {
  Rational ratio;  // w_min / w_max over nonzero weights
  bool suitable = false;  // ratio > 1/2
};

/// Over the distinct nonzero codeword weights; throws InvalidParameter when
/// there are none.
SecretSharingRatio secret_sharing_ratio(const WeightDistribution& dist);
SecretSharingRatio secret_sharing_ratio(const WeightCounts& counts);

struct SweepOptions {
  int m_min = 3;
  int m_max = 12;
  /// Restrict to one h; otherwise every proper divisor of m.
  std::optional<int> h;
  std::vector<TableForm> forms{TableForm::AsPrinted};
  /// Concurrent cases; 0 selects hardware concurrency.
  unsigned workers = 0;
  std::uint64_t budget = EnumerationOptions{}.budget;
};

/// Builds the D0, D1, full and (m/h even) punctured codes for every case,
/// enumerates them and verifies against the matching table in each requested
/// form. Ordered by (m, h, variant, form). Per-case problems are reported,
/// not thrown.
std::vector<VerificationReport> sweep(const SweepOptions& options);

}  // namespace fewweight
