#include "fewweight/predict.hpp"

#include <algorithm>
#include <atomic>
#include <map>
#include <thread>

#include "fewweight/errors.hpp"

namespace fewweight {

namespace {

Rational pow2(int k) {
  if (k >= 0) return Rational(std::int64_t{1} << k);
  return Rational(1, std::int64_t{1} << -k);
}

Rational to_rational(std::uint64_t v) { return Rational(static_cast<std::int64_t>(v)); }

std::string to_string(const Rational& r) {
  if (r.denominator() == 1) return std::to_string(r.numerator());
  return std::to_string(r.numerator()) + "/" + std::to_string(r.denominator());
}

// Solves rows[i], rows[j] multiplicities from
//   sum A = 2^m - 1  and  sum w A = n 2^{m-1},
// keeping every other row as given.
void solve_from_moments(std::vector<PredictedRow>& rows, std::size_t i, std::size_t j, int m, std::uint64_t n) {
  Rational r0 = pow2(m) - 1;
  Rational r1 = to_rational(n) * pow2(m - 1);
  for (std::size_t t = 0; t < rows.size(); ++t) {
    if (t == i || t == j) continue;
    r0 -= rows[t].multiplicity;
    r1 -= rows[t].weight * rows[t].multiplicity;
  }
  const Rational wi = rows[i].weight, wj = rows[j].weight;
  rows[i].multiplicity = (r1 - wj * r0) / (wi - wj);
  rows[j].multiplicity = r0 - rows[i].multiplicity;
}

std::vector<PredictedRow> normalize(const std::vector<PredictedRow>& rows) {
  std::map<Rational, Rational> merged;
  for (const auto& r : rows) merged[r.weight] += r.multiplicity;
  std::vector<PredictedRow> out;
  for (const auto& [w, a] : merged)
    if (a != Rational(0)) out.push_back({w, a});
  return out;
}

}  // namespace

std::string_view to_string(Theorem t) {
  switch (t) {
    case Theorem::T1: return "T1";
    case Theorem::T2: return "T2";
    case Theorem::T3: return "T3";
    case Theorem::T4: return "T4";
    case Theorem::T5: return "T5";
    case Theorem::C6: return "C6";
  }
  return "?";
}

std::string_view to_string(TableForm f) { return f == TableForm::AsPrinted ? "as-printed" : "moment-corrected"; }

std::optional<Theorem> parse_theorem(std::string_view name) {
  for (auto t : {Theorem::T1, Theorem::T2, Theorem::T3, Theorem::T4, Theorem::T5, Theorem::C6})
    if (to_string(t) == name) return t;
  return std::nullopt;
}

std::optional<TableForm> parse_table_form(std::string_view name) {
  if (name == "printed" || name == "as-printed") return TableForm::AsPrinted;
  if (name == "corrected" || name == "moment-corrected") return TableForm::MomentCorrected;
  return std::nullopt;
}

std::string_view to_string(VerificationStatus s) {
  switch (s) {
    case VerificationStatus::Match: return "match";
    case VerificationStatus::Mismatch: return "mismatch";
    case VerificationStatus::Inapplicable: return "inapplicable";
  }
  return "?";
}

DefiningSetKind variant_of(Theorem t) {
  switch (t) {
    case Theorem::T1:
    case Theorem::T3: return DefiningSetKind::D0;
    case Theorem::T2:
    case Theorem::T4: return DefiningSetKind::D1;
    case Theorem::T5: return DefiningSetKind::FullStar;
    case Theorem::C6: return DefiningSetKind::PuncturedImage;
  }
  return DefiningSetKind::Custom;
}

std::optional<Theorem> theorem_for(int m, int h, DefiningSetKind kind) {
  const bool odd = (m / h) % 2 == 1;
  switch (kind) {
    case DefiningSetKind::D0: return odd ? Theorem::T1 : Theorem::T3;
    case DefiningSetKind::D1: return odd ? Theorem::T2 : Theorem::T4;
    case DefiningSetKind::FullStar: return Theorem::T5;
    case DefiningSetKind::PuncturedImage: return Theorem::C6;
    case DefiningSetKind::Custom: return std::nullopt;
  }
  return std::nullopt;
}

bool TheoremPrediction::integral() const {
  return std::all_of(rows.begin(), rows.end(), [](const PredictedRow& r) {
    return r.weight.denominator() == 1 && r.multiplicity.denominator() == 1 && r.multiplicity >= Rational(0);
  });
}

std::size_t TheoremPrediction::distinct_nonzero_weights() const {
  return static_cast<std::size_t>(std::count_if(rows.begin(), rows.end(), [](const PredictedRow& r) { return r.weight != Rational(0); }));
}

TheoremPrediction predict_distribution(int m, int h, Theorem source, TableForm form) {
  require_proper_divisor(m, h);
  TheoremPrediction p;
  p.source = source;
  p.form = form;
  p.m = m;
  p.h = h;

  const int ratio = m / h;
  const bool odd = ratio % 2 == 1;
  const Rational q = pow2(m);
  const Rational hp1 = pow2(h) + 1;

  switch (source) {
    case Theorem::T1:
    case Theorem::T2:
      p.hypothesis = "m/h odd";
      p.applicable = odd;
      p.length = source == Theorem::T1 ? (std::uint64_t{1} << (m - 1)) - 1 : std::uint64_t{1} << (m - 1);
      break;
    case Theorem::T3:
    case Theorem::T4:
      p.hypothesis = "m/h even and m/h > 2";
      p.applicable = !odd && ratio > 2;
      p.length = source == Theorem::T3 ? (std::uint64_t{1} << (m - 1)) - 1 : std::uint64_t{1} << (m - 1);
      break;
    case Theorem::T5:
    case Theorem::C6:
      p.hypothesis = "m/h even and m > 2";
      p.applicable = !odd && m > 2;
      p.length = (std::uint64_t{1} << m) - 1;
      if (source == Theorem::C6 && !odd) p.length /= (std::uint64_t{1} << h) + 1;
      break;
  }
  if (!p.applicable) {
    p.hypothesis += " (fails for m=" + std::to_string(m) + ", h=" + std::to_string(h) + ")";
    return p;
  }

  std::vector<PredictedRow> rows;
  if (odd) {
    // m + h and m - h are even here.
    const Rational base = pow2(m - 2);
    const Rational delta = pow2((m + h - 4) / 2);
    const Rational half = pow2(m - h - 1);
    rows.push_back({base - delta, 0});
    rows.push_back({base, q - 1 - pow2(m - h)});
    rows.push_back({base + delta, 0});
    if (source == Theorem::T1) {
      rows[0].multiplicity = half + pow2((m - h - 2) / 2);
      rows[2].multiplicity = half - pow2((m - h - 2) / 2);
    } else if (form == TableForm::AsPrinted) {
      // (m-h-4)/2 is -1 when m - h = 2; kept exact rather than rounded.
      const Rational off = pow2((m - h - 4) / 2);
      rows[0].multiplicity = half - off;
      rows[2].multiplicity = half + off;
    } else {
      solve_from_moments(rows, 0, 2, m, p.length);
    }
  } else {
    const int e = m / 2;
    const std::int64_t s = (e / h) % 2 == 0 ? 1 : -1;
    switch (source) {
      case Theorem::T3: {
        const Rational base = pow2(m - 2);
        rows.push_back({base + s * pow2(e + h - 1), (pow2(m - 2 * h - 1) - 1 - s * pow2(e - h - 1)) / hp1});
        rows.push_back({base + s * pow2(e + h - 2), (pow2(h) - 1) * pow2(m - 2 * h)});
        rows.push_back({base, pow2(m - 1) - s * (pow2(h) - 1) * (pow2(m - 2 * h - 1) + pow2(e - h - 1))});
        rows.push_back({base - s * pow2(e - 1),
                        (pow2(m + h - 1) + pow2(m - 2 * h - 1) - pow2(m - 1) - pow2(h) +
                         s * (pow2(e + h - 1) + pow2(m - 1) - pow2(m - 2 * h - 1))) /
                            hp1});
        if (form == TableForm::MomentCorrected) solve_from_moments(rows, 2, 3, m, p.length);
        break;
      }
      case Theorem::T4: {
        const Rational base = pow2(m - 2);
        rows.push_back({base + s * pow2(e + h - 1), (pow2(m - 2 * h - 1) + s * pow2(e - h - 1)) / hp1});
        rows.push_back({base + s * pow2(e + h - 2), (pow2(h) - 1) * pow2(m - 2 * h)});
        rows.push_back({base, pow2(m - 1) - 1 + s * pow2(e - h - 1) * (pow2(h) - 1) - (pow2(h) - 1) * pow2(m - 2 * h - 1)});
        rows.push_back({base - s * pow2(e - 1), (pow2(e) - s) * pow2(e + h - 1) / hp1});
        break;
      }
      case Theorem::T5:
      case Theorem::C6: {
        const Rational scale = source == Theorem::C6 ? hp1 : Rational(1);
        rows.push_back({(pow2(m - 1) - s * pow2(e - 1)) / scale, (q - 1) * pow2(h) / hp1});
        rows.push_back({(pow2(m - 1) + s * pow2(e + h - 1)) / scale, (q - 1) / hp1});
        break;
      }
      default:
        break;
    }
  }
  p.rows = normalize(rows);
  return p;
}

bool pless_check(const WeightDistribution& dist) {
  std::uint64_t count = 0, moment = 0;
  for (auto [w, a] : dist.nonzero_message_counts()) {
    count += a;
    moment += w * a;
  }
  return count == (std::uint64_t{1} << dist.m) - 1 && moment == dist.n * (std::uint64_t{1} << (dist.m - 1));
}

bool pless_check(const TheoremPrediction& pred) {
  if (!pred.applicable) return false;
  Rational count = 0, moment = 0;
  for (const auto& r : pred.rows) {
    count += r.multiplicity;
    moment += r.weight * r.multiplicity;
  }
  return count == pow2(pred.m) - 1 && moment == to_rational(pred.length) * pow2(pred.m - 1);
}

VerificationReport verify(const TheoremPrediction& pred, const WeightDistribution& computed) {
  if (pred.m != computed.m || pred.h != computed.h || variant_of(pred.source) != computed.kind)
    throw InvalidParameter("prediction " + std::string(to_string(pred.source)) + " (m=" + std::to_string(pred.m) +
                           ", h=" + std::to_string(pred.h) + ") does not describe the " +
                           std::string(to_string(computed.kind)) + " code with m=" + std::to_string(computed.m) +
                           ", h=" + std::to_string(computed.h));
  VerificationReport r;
  r.m = computed.m;
  r.h = computed.h;
  r.variant = computed.kind;
  r.source = pred.source;
  r.form = pred.form;
  r.n = computed.n;
  r.k = computed.k;
  r.d_min = computed.d_min;
  r.computed = computed.nonzero_message_counts();
  r.moment_check = pless_check(computed);
  r.dimension_ok = computed.full_rank();
  if (!r.dimension_ok)
    r.notes.push_back("dimension " + std::to_string(computed.k) + " is below the stated " + std::to_string(computed.m));

  if (!pred.applicable) {
    r.status = VerificationStatus::Inapplicable;
    r.notes.push_back("hypothesis: " + pred.hypothesis);
    return r;
  }
  r.prediction_moment_check = pless_check(pred);
  if (!r.prediction_moment_check) r.notes.push_back("prediction violates the power-moment identities");
  if (!pred.integral()) r.notes.push_back("prediction has non-integral multiplicities");

  std::map<Rational, WeightComparison> rows;
  for (const auto& row : pred.rows) rows[row.weight] = {row.weight, row.multiplicity, 0};
  for (auto [w, a] : r.computed) {
    auto& c = rows[to_rational(w)];
    c.weight = to_rational(w);
    c.actual = a;
  }
  bool agree = pred.length == computed.n;
  if (!agree)
    r.notes.push_back("length " + std::to_string(computed.n) + " differs from predicted " + std::to_string(pred.length));
  for (const auto& [w, c] : rows) {
    r.details.push_back(c);
    if (c.expected != to_rational(c.actual)) {
      agree = false;
      r.notes.push_back("weight " + to_string(w) + ": expected " + to_string(c.expected) + ", enumerated " +
                        std::to_string(c.actual));
    }
  }
  r.status = agree ? VerificationStatus::Match : VerificationStatus::Mismatch;
  return r;
}

SecretSharingRatio secret_sharing_ratio(const WeightCounts& counts) {
  std::optional<std::uint64_t> lo, hi;
  for (auto [w, a] : counts) {
    if (w == 0 || a == 0) continue;
    if (!lo) lo = w;
    hi = w;
  }
  if (!lo) throw InvalidParameter("secret-sharing ratio needs at least one nonzero weight");
  SecretSharingRatio out;
  out.ratio = Rational(static_cast<std::int64_t>(*lo), static_cast<std::int64_t>(*hi));
  out.suitable = out.ratio > Rational(1, 2);
  return out;
}

SecretSharingRatio secret_sharing_ratio(const WeightDistribution& dist) { return secret_sharing_ratio(dist.counts); }

std::vector<VerificationReport> sweep(const SweepOptions& options) {
  struct Case {
    int m;
    int h;
    DefiningSetKind kind;
  };
  std::vector<Case> cases;
  std::map<int, Field> fields;
  for (int m = std::max(options.m_min, Field::kMinDegree); m <= options.m_max; ++m) {
    for (int h = 1; h < m; ++h) {
      if (m % h != 0 || (options.h && *options.h != h)) continue;
      if (!fields.contains(m)) fields.emplace(m, Field::build(m));
      for (auto kind : {DefiningSetKind::D0, DefiningSetKind::D1, DefiningSetKind::FullStar,
                        DefiningSetKind::PuncturedImage}) {
        if (kind == DefiningSetKind::PuncturedImage && ((m / h) % 2 != 0 || m <= 2)) continue;
        cases.push_back({m, h, kind});
      }
    }
  }

  std::vector<std::vector<VerificationReport>> results(cases.size());
  auto run_case = [&](std::size_t idx) {
    const Case& c = cases[idx];
    const Field& field = fields.at(c.m);
    const Theorem theorem = *theorem_for(c.m, c.h, c.kind);
    auto failed = [&](VerificationStatus status, const std::string& why) {
      for (auto form : options.forms) {
        VerificationReport r;
        r.m = c.m;
        r.h = c.h;
        r.variant = c.kind;
        r.source = theorem;
        r.form = form;
        r.status = status;
        r.notes.push_back(why);
        results[idx].push_back(std::move(r));
      }
    };
    try {
      const LinearCode code = c.kind == DefiningSetKind::PuncturedImage
                                  ? punctured_code(field, c.h)
                                  : build_code(field, c.h, defining_set(field, c.kind));
      const WeightDistribution dist = weight_distribution(code, EnumerationOptions{options.budget, 1});
      for (auto form : options.forms)
        results[idx].push_back(verify(predict_distribution(c.m, c.h, theorem, form), dist));
    } catch (const BudgetExceeded& e) {
      failed(VerificationStatus::Inapplicable, std::string("skipped: ") + e.what());
    } catch (const std::exception& e) {
      failed(VerificationStatus::Mismatch, std::string("error: ") + e.what());
    }
  };

  unsigned workers = options.workers != 0 ? options.workers : std::max(1u, std::thread::hardware_concurrency());
  workers = static_cast<unsigned>(std::min<std::size_t>(workers, std::max<std::size_t>(cases.size(), 1)));
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < cases.size(); i = next++) run_case(i);
  };
  if (workers <= 1) {
    worker();
  } else {
    std::vector<std::jthread> pool;
    for (unsigned i = 0; i < workers; ++i) pool.emplace_back(worker);
  }

  std::vector<VerificationReport> out;
  for (auto& rs : results)
    for (auto& r : rs) out.push_back(std::move(r));
  return out;
}

}  // namespace fewweight
