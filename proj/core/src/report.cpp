#include "fewweight/report.hpp"

#include <ostream>
#include <sstream>

namespace fewweight {

std::string format_counts(const WeightCounts& counts, bool include_zero) {
  std::ostringstream os;
  os << '{';
  bool first = true;
  for (auto [w, c] : counts) {
    if (w == 0 && !include_zero) continue;
    if (!first) os << ", ";
    first = false;
    os << w << ':' << c;
  }
  os << '}';
  return os.str();
}

std::string format_rational(const Rational& r) {
  if (r.denominator() == 1) return std::to_string(r.numerator());
  return std::to_string(r.numerator()) + "/" + std::to_string(r.denominator());
}

std::string format_report_line(const VerificationReport& r) {
  std::ostringstream os;
  os << r.m << ' ' << r.h << ' ' << to_string(r.variant) << ' ' << to_string(r.status) << ' ' << r.n << ' ' << r.k
     << ' ' << r.d_min;
  for (auto [w, c] : r.computed) os << ' ' << w << ':' << c;
  return os.str();
}

SweepTotals tally(std::span<const VerificationReport> reports) {
  SweepTotals t;
  for (const auto& r : reports) {
    switch (r.status) {
      case VerificationStatus::Match: ++t.match; break;
      case VerificationStatus::Mismatch: ++t.mismatch; break;
      case VerificationStatus::Inapplicable: ++t.inapplicable; break;
    }
  }
  return t;
}

void write_sweep_report(std::ostream& os, std::span<const VerificationReport> reports) {
  for (auto form : {TableForm::AsPrinted, TableForm::MomentCorrected}) {
    bool header = false;
    for (const auto& r : reports) {
      if (r.form != form) continue;
      if (!header) {
        os << "# table-form=" << to_string(form) << '\n';
        header = true;
      }
      os << format_report_line(r) << '\n';
      if (r.status == VerificationStatus::Match && r.dimension_ok) continue;
      for (const auto& note : r.notes) os << "#   " << to_string(r.source) << ' ' << note << '\n';
    }
  }
  const SweepTotals t = tally(reports);
  os << "# summary\n";
  os << "cases=" << reports.size() << '\n';
  os << "match=" << t.match << '\n';
  os << "mismatch=" << t.mismatch << '\n';
  os << "inapplicable=" << t.inapplicable << '\n';
}

}  // namespace fewweight
