#include <gtest/gtest.h>

#include <sstream>

#include "fewweight/errors.hpp"
#include "fewweight/predict.hpp"
#include "fewweight/report.hpp"

using namespace fewweight;

namespace {

using Rows = std::vector<std::pair<std::int64_t, std::int64_t>>;

Rows rows_of(const TheoremPrediction& p) {
  Rows out;
  for (const auto& r : p.rows) {
    EXPECT_EQ(r.weight.denominator(), 1);
    EXPECT_EQ(r.multiplicity.denominator(), 1);
    out.emplace_back(r.weight.numerator(), r.multiplicity.numerator());
  }
  return out;
}

WeightDistribution enumerate(int m, int h, DefiningSetKind kind) {
  const Field f = Field::build(m);
  const LinearCode code = kind == DefiningSetKind::PuncturedImage ? punctured_code(f, h)
                                                                  : build_code(f, h, defining_set(f, kind));
  return weight_distribution(code, EnumerationOptions{EnumerationOptions{}.budget, 1});
}

// A distribution whose per-message counts are exactly the prediction.
WeightDistribution as_distribution(const TheoremPrediction& p) {
  WeightDistribution d;
  d.m = p.m;
  d.h = p.h;
  d.kind = variant_of(p.source);
  d.n = p.length;
  d.k = p.m;
  d.message_counts[0] = 1;
  for (const auto& r : p.rows)
    d.message_counts[static_cast<std::uint64_t>(r.weight.numerator())] += static_cast<std::uint64_t>(r.multiplicity.numerator());
  d.counts = d.message_counts;
  return d;
}

std::vector<std::pair<int, int>> params(int m_min, int m_max) {
  std::vector<std::pair<int, int>> out;
  for (int m = m_min; m <= m_max; ++m)
    for (int h = 1; h < m; ++h)
      if (m % h == 0) out.emplace_back(m, h);
  return out;
}

const Theorem kAll[] = {Theorem::T1, Theorem::T2, Theorem::T3, Theorem::T4, Theorem::T5, Theorem::C6};

}  // namespace

TEST(Predict, TableExamples) {
  EXPECT_EQ(rows_of(predict_distribution(5, 1, Theorem::T1)), (Rows{{6, 10}, {8, 15}, {10, 6}}));
  EXPECT_EQ(rows_of(predict_distribution(8, 2, Theorem::T3)), (Rows{{56, 108}, {64, 98}, {80, 48}, {96, 1}}));
  EXPECT_EQ(rows_of(predict_distribution(8, 2, Theorem::T4)), (Rows{{56, 96}, {64, 109}, {80, 48}, {96, 2}}));
  EXPECT_EQ(rows_of(predict_distribution(6, 1, Theorem::T5)), (Rows{{24, 21}, {36, 42}}));
  EXPECT_EQ(rows_of(predict_distribution(6, 1, Theorem::C6)), (Rows{{8, 21}, {12, 42}}));
  EXPECT_EQ(predict_distribution(6, 1, Theorem::C6).length, 21u);
}

TEST(Predict, PrintedT2FailsSecondMoment) {
  const auto printed = predict_distribution(5, 1, Theorem::T2, TableForm::AsPrinted);
  EXPECT_EQ(rows_of(printed), (Rows{{6, 7}, {8, 15}, {10, 9}}));
  EXPECT_FALSE(pless_check(printed));  // 6*7 + 8*15 + 10*9 = 252, not 16*16

  const auto corrected = predict_distribution(5, 1, Theorem::T2, TableForm::MomentCorrected);
  EXPECT_EQ(rows_of(corrected), (Rows{{6, 6}, {8, 15}, {10, 10}}));
  EXPECT_TRUE(pless_check(corrected));

  const auto r = verify(printed, enumerate(5, 1, DefiningSetKind::D1));
  EXPECT_EQ(r.status, VerificationStatus::Mismatch);
  EXPECT_TRUE(r.moment_check);
  EXPECT_FALSE(r.prediction_moment_check);
  std::size_t wrong = 0;
  for (const auto& c : r.details)
    if (c.expected != Rational(static_cast<std::int64_t>(c.actual))) {
      ++wrong;
      EXPECT_TRUE(c.weight == Rational(6) || c.weight == Rational(10));
    }
  EXPECT_EQ(wrong, 2u);
  EXPECT_EQ(verify(corrected, enumerate(5, 1, DefiningSetKind::D1)).status, VerificationStatus::Match);
}

TEST(Predict, PrintedT2NonIntegralWhenExponentNegative) {
  const auto p = predict_distribution(3, 1, Theorem::T2, TableForm::AsPrinted);
  EXPECT_FALSE(p.integral());
  EXPECT_TRUE(predict_distribution(3, 1, Theorem::T2, TableForm::MomentCorrected).integral());
}

TEST(Predict, CorrectedT2UsesShiftedExponent) {
  // Re-solved multiplicities equal 2^{m-h-1} -/+ 2^{(m-h-2)/2}.
  for (auto [m, h] : params(3, 20)) {
    if ((m / h) % 2 == 0) continue;
    const auto p = predict_distribution(m, h, Theorem::T2, TableForm::MomentCorrected);
    ASSERT_EQ(p.rows.size(), 3u);
    const Rational half(std::int64_t{1} << (m - h - 1));
    const Rational off(std::int64_t{1} << ((m - h - 2) / 2));
    EXPECT_EQ(p.rows[0].multiplicity, half - off);
    EXPECT_EQ(p.rows[2].multiplicity, half + off);
  }
}

TEST(Predict, PrintedT3FailsMomentsWhenSignNegative) {
  for (auto [m, h] : params(4, 20)) {
    if ((m / h) % 2 == 1 || m / h == 2) continue;
    const bool negative = ((m / 2) / h) % 2 == 1;
    const auto printed = predict_distribution(m, h, Theorem::T3, TableForm::AsPrinted);
    EXPECT_EQ(pless_check(printed), !negative) << m << ' ' << h;
    EXPECT_TRUE(pless_check(predict_distribution(m, h, Theorem::T3, TableForm::MomentCorrected))) << m << ' ' << h;
  }
}

TEST(Predict, FormsAgreeOutsideT2AndT3) {
  for (auto [m, h] : params(3, 16))
    for (auto t : {Theorem::T1, Theorem::T4, Theorem::T5, Theorem::C6})
      EXPECT_EQ(rows_of(predict_distribution(m, h, t, TableForm::AsPrinted)),
                rows_of(predict_distribution(m, h, t, TableForm::MomentCorrected)));
}

TEST(Predict, CorrectedPredictionsSatisfyMoments) {
  for (auto [m, h] : params(3, 20)) {
    for (auto t : kAll) {
      const auto p = predict_distribution(m, h, t, TableForm::MomentCorrected);
      if (!p.applicable) continue;
      EXPECT_TRUE(p.integral()) << to_string(t) << ' ' << m << ' ' << h;
      EXPECT_TRUE(pless_check(p)) << to_string(t) << ' ' << m << ' ' << h;
      EXPECT_LE(p.distinct_nonzero_weights(), (t == Theorem::T5 || t == Theorem::C6) ? 2u : 4u);
    }
  }
}

TEST(Predict, ApplicabilityGates) {
  for (auto [m, h] : params(2, 16)) {
    const bool odd = (m / h) % 2 == 1;
    EXPECT_EQ(predict_distribution(m, h, Theorem::T1).applicable, odd);
    EXPECT_EQ(predict_distribution(m, h, Theorem::T2).applicable, odd);
    EXPECT_EQ(predict_distribution(m, h, Theorem::T3).applicable, !odd && m / h > 2);
    EXPECT_EQ(predict_distribution(m, h, Theorem::T4).applicable, !odd && m / h > 2);
    EXPECT_EQ(predict_distribution(m, h, Theorem::T5).applicable, !odd && m > 2);
    EXPECT_EQ(predict_distribution(m, h, Theorem::C6).applicable, !odd && m > 2);
    for (auto t : kAll) {
      const auto p = predict_distribution(m, h, t);
      if (!p.applicable) EXPECT_TRUE(p.rows.empty());
    }
  }
  EXPECT_THROW(predict_distribution(5, 3, Theorem::T1), InvalidParameter);
}

TEST(Predict, PuncturedIsFullScaled) {
  for (auto [m, h] : params(4, 20)) {
    if ((m / h) % 2 == 1) continue;
    const auto full = predict_distribution(m, h, Theorem::T5);
    const auto punct = predict_distribution(m, h, Theorem::C6);
    ASSERT_EQ(full.rows.size(), punct.rows.size());
    const Rational scale((std::int64_t{1} << h) + 1);
    for (std::size_t i = 0; i < full.rows.size(); ++i) {
      EXPECT_EQ(punct.rows[i].weight, full.rows[i].weight / scale);
      EXPECT_EQ(punct.rows[i].multiplicity, full.rows[i].multiplicity);
    }
  }
}

TEST(Predict, VerifyIsReflexive) {
  for (auto [m, h] : params(3, 14))
    for (auto t : kAll) {
      const auto p = predict_distribution(m, h, t, TableForm::MomentCorrected);
      if (!p.applicable) continue;
      const auto r = verify(p, as_distribution(p));
      EXPECT_EQ(r.status, VerificationStatus::Match);
      EXPECT_TRUE(r.moment_check);
    }
}

TEST(Predict, VerifyAgainstEnumeration) {
  EXPECT_EQ(verify(predict_distribution(5, 1, Theorem::T1), enumerate(5, 1, DefiningSetKind::D0)).status,
            VerificationStatus::Match);
  EXPECT_EQ(verify(predict_distribution(8, 2, Theorem::T3), enumerate(8, 2, DefiningSetKind::D0)).status,
            VerificationStatus::Match);
  const auto inapplicable = verify(predict_distribution(4, 2, Theorem::T3), enumerate(4, 2, DefiningSetKind::D0));
  EXPECT_EQ(inapplicable.status, VerificationStatus::Inapplicable);
  EXPECT_TRUE(inapplicable.details.empty());
  EXPECT_FALSE(inapplicable.dimension_ok);

  const auto deficient = verify(predict_distribution(4, 2, Theorem::T5), enumerate(4, 2, DefiningSetKind::FullStar));
  EXPECT_EQ(deficient.status, VerificationStatus::Match);
  EXPECT_FALSE(deficient.dimension_ok);
  EXPECT_EQ(deficient.k, 2);

  EXPECT_THROW(verify(predict_distribution(5, 1, Theorem::T1), enumerate(5, 1, DefiningSetKind::D1)), InvalidParameter);
  EXPECT_THROW(verify(predict_distribution(6, 1, Theorem::T3), enumerate(6, 2, DefiningSetKind::D0)), InvalidParameter);
}

TEST(Predict, PowerMomentsOfSmallEnumerators) {
  auto dist = [](int m, std::uint64_t n, WeightCounts c) {
    WeightDistribution d;
    d.m = m;
    d.k = m;
    d.n = n;
    d.message_counts = c;
    d.counts = c;
    return d;
  };
  EXPECT_TRUE(pless_check(dist(5, 15, {{0, 1}, {6, 10}, {8, 15}, {10, 6}})));
  EXPECT_TRUE(pless_check(dist(5, 16, {{0, 1}, {6, 6}, {8, 15}, {10, 10}})));
  EXPECT_FALSE(pless_check(dist(5, 16, {{0, 1}, {6, 7}, {8, 15}, {10, 9}})));
}

TEST(Predict, SecretSharingRatio) {
  const auto r = secret_sharing_ratio(enumerate(5, 1, DefiningSetKind::D0));
  EXPECT_EQ(r.ratio, Rational(3, 5));
  EXPECT_TRUE(r.suitable);

  const auto constant = secret_sharing_ratio(WeightCounts{{0, 1}, {4, 15}});
  EXPECT_EQ(constant.ratio, Rational(1));
  EXPECT_TRUE(constant.suitable);

  const auto half = secret_sharing_ratio(WeightCounts{{0, 1}, {6, 3}, {12, 4}});
  EXPECT_EQ(half.ratio, Rational(1, 2));
  EXPECT_FALSE(half.suitable);

  EXPECT_THROW(secret_sharing_ratio(WeightCounts{{0, 1}}), InvalidParameter);

  for (int m = 5; m <= 15; m += 2) {
    const auto p = predict_distribution(m, 1, Theorem::T1);
    const Rational ratio = p.rows.front().weight / p.rows.back().weight;
    EXPECT_GT(ratio, Rational(1, 2));
  }
}

TEST(Predict, SweepShapes) {
  EXPECT_TRUE(sweep(SweepOptions{5, 4}).empty());

  SweepOptions opts;
  opts.m_min = 3;
  opts.m_max = 6;
  opts.forms = {TableForm::MomentCorrected};
  opts.workers = 3;
  const auto reports = sweep(opts);
  // m=3: 3; m=4: 4 + 4; m=5: 3; m=6: (6,1) 4 + (6,2) 3 + (6,3) 4
  EXPECT_EQ(reports.size(), 25u);
  for (std::size_t i = 1; i < reports.size(); ++i) {
    const auto& a = reports[i - 1];
    const auto& b = reports[i];
    EXPECT_TRUE(std::tie(a.m, a.h, a.variant) < std::tie(b.m, b.h, b.variant));
  }
  for (const auto& r : reports) EXPECT_NE(r.status, VerificationStatus::Mismatch) << format_report_line(r);

  opts.workers = 1;
  const auto serial = sweep(opts);
  ASSERT_EQ(serial.size(), reports.size());
  for (std::size_t i = 0; i < serial.size(); ++i) EXPECT_EQ(format_report_line(serial[i]), format_report_line(reports[i]));
}

TEST(Predict, SweepBudgetSkipsCases) {
  SweepOptions opts;
  opts.m_min = opts.m_max = 8;
  opts.h = 2;
  opts.budget = 100;
  for (const auto& r : sweep(opts)) EXPECT_EQ(r.status, VerificationStatus::Inapplicable);
}

TEST(Predict, ReportFormatting) {
  const auto r = verify(predict_distribution(5, 1, Theorem::T1), enumerate(5, 1, DefiningSetKind::D0));
  EXPECT_EQ(format_report_line(r), "5 1 d0 match 15 5 6 6:10 8:15 10:6");
  EXPECT_EQ(format_counts(WeightCounts{{0, 1}, {6, 10}}), "{6:10}");
  EXPECT_EQ(format_counts(WeightCounts{{0, 1}, {6, 10}}, true), "{0:1, 6:10}");
  EXPECT_EQ(format_rational(Rational(-3, 4)), "-3/4");

  std::ostringstream os;
  const std::vector<VerificationReport> reports{r};
  write_sweep_report(os, reports);
  EXPECT_EQ(os.str(),
            "# table-form=as-printed\n5 1 d0 match 15 5 6 6:10 8:15 10:6\n# summary\ncases=1\nmatch=1\nmismatch=0\n"
            "inapplicable=0\n");
}

TEST(Predict, NameParsing) {
  for (auto t : kAll) EXPECT_EQ(parse_theorem(to_string(t)), t);
  EXPECT_EQ(parse_table_form("printed"), TableForm::AsPrinted);
  EXPECT_EQ(parse_table_form("moment-corrected"), TableForm::MomentCorrected);
  EXPECT_FALSE(parse_table_form("other"));
  EXPECT_EQ(theorem_for(6, 2, DefiningSetKind::D1), Theorem::T2);
  EXPECT_EQ(theorem_for(6, 3, DefiningSetKind::D1), Theorem::T4);
  EXPECT_FALSE(theorem_for(6, 3, DefiningSetKind::Custom));
}
