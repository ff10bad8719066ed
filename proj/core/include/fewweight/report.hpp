#pragma once

#include <iosfwd>
#include <span>
#include <string>

#include "fewweight/code.hpp"
#include "fewweight/predict.hpp"

namespace fewweight {

/// "{6:10, 8:15, 10:6}"; the zero weight is omitted unless include_zero.
std::string format_counts(const WeightCounts& counts, bool include_zero = false);

std::string format_rational(const Rational& r);

/// One machine-parseable line: "m h variant status n k d w:c w:c ...",
/// weights taken over nonzero messages.
std::string format_report_line(const VerificationReport& r);

/// Case lines grouped by table form, '#' detail lines under each mismatch,
/// and a trailing summary block.
void write_sweep_report(std::ostream& os, std::span<const VerificationReport> reports);

struct SweepTotals {
  std::size_t match = 0;
  std::size_t mismatch = 0;
  std::size_t inapplicable = 0;
};
SweepTotals tally(std::span<const VerificationReport> reports);

}  // namespace fewweight
