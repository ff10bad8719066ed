#include "cli.hpp"

#include <algorithm>
#include <fstream>
#include <optional>
#include <ostream>

#include <CLI11.hpp>

#include "fewweight/code.hpp"
#include "fewweight/errors.hpp"
#include "fewweight/predict.hpp"
#include "fewweight/report.hpp"
#include "fewweight/weil.hpp"

namespace fewweight::cli {

namespace {

struct Params {
  int m = 0;
  int h = 0;
  std::string variant = "d0";
  std::optional<std::uint64_t> modulus;
  std::string format = "text";
  std::uint64_t budget = EnumerationOptions{}.budget;
  unsigned workers = 0;
  std::string table_form = "printed";
  std::uint32_t a = 1;
  std::uint32_t b = 0;
  int m_min = 3;
  int m_max = 12;
  std::optional<int> sweep_h;
  std::string output = "-";
};

bool machine(const Params& p) { return p.format == "machine"; }

DefiningSetKind variant(const Params& p) {
  auto kind = parse_defining_set_kind(p.variant);
  if (!kind) throw InvalidParameter("unknown variant '" + p.variant + "'");
  return *kind;
}

LinearCode make_code(const Field& field, const Params& p) {
  const auto kind = variant(p);
  if (kind == DefiningSetKind::PuncturedImage) return punctured_code(field, p.h);
  require_proper_divisor(field.degree(), p.h);
  return build_code(field, p.h, defining_set(field, kind));
}

void print_header(std::ostream& out, const Field& field, const Params& p) {
  out << "m=" << field.degree() << '\n'
      << "h=" << p.h << '\n'
      << "variant=" << p.variant << '\n'
      << "modulus=" << field.modulus() << '\n'
      << "generator=" << field.generator().bits << '\n';
}

int cmd_construct(const Params& p, std::ostream& out) {
  const Field field = Field::build(p.m, p.modulus);
  const LinearCode code = make_code(field, p);
  if (machine(p)) {
    print_header(out, field, p);
    out << "n=" << code.length() << '\n' << "k=" << code.dimension() << '\n' << "defining_set=";
    for (std::size_t i = 0; i < code.defining_set().elements.size(); ++i)
      out << (i ? " " : "") << code.defining_set().elements[i].bits;
    out << '\n';
  } else {
    out << "GF(2^" << field.degree() << ") modulus " << to_string(field.modulus()) << " (" << field.modulus()
        << "), generator " << field.generator().bits << '\n';
    out << "code " << p.variant << " h=" << p.h << ": n=" << code.length() << " k=" << code.dimension() << '\n';
  }
  return kExitOk;
}

int cmd_weights(const Params& p, std::ostream& out) {
  const Field field = Field::build(p.m, p.modulus);
  const LinearCode code = make_code(field, p);
  const WeightDistribution dist = weight_distribution(code, EnumerationOptions{p.budget, p.workers});
  if (machine(p)) {
    print_header(out, field, p);
    out << "n=" << dist.n << '\n' << "k=" << dist.k << '\n' << "d=" << dist.d_min << '\n';
    for (auto [w, c] : dist.counts) out << w << ' ' << c << '\n';
  } else {
    out << "n=" << dist.n << " k=" << dist.k << " d=" << dist.d_min << '\n';
    out << format_counts(dist.counts) << '\n';
    if (!dist.full_rank())
      out << "per-message weights (k < m): " << format_counts(dist.nonzero_message_counts(), true) << '\n';
  }
  return kExitOk;
}

int cmd_weil(const Params& p, std::ostream& out) {
  const Field field = Field::build(p.m, p.modulus);
  const auto q = WeilSumQuery::make(field, p.h, Element(p.a), Element(p.b));
  const std::int64_t direct = weil_sum_direct(q);
  const WeilSumValue closed = weil_sum_closed(q);
  const bool agree = closed.agrees_with(direct);
  if (machine(p)) {
    out << "m=" << p.m << '\n' << "h=" << p.h << '\n' << "a=" << p.a << '\n' << "b=" << p.b << '\n';
    out << "direct=" << direct << '\n' << "closed=" << to_string(closed) << '\n' << "agree=" << agree << '\n';
  } else {
    out << "S_" << p.h << "(" << p.a << ", " << p.b << ") direct=" << direct << " closed=" << to_string(closed)
        << (agree ? " agree" : " DISAGREE") << '\n';
  }
  return agree ? kExitOk : kExitMismatch;
}

TableForm table_form(const std::string& name) {
  auto f = parse_table_form(name);
  if (!f) throw InvalidParameter("unknown table form '" + name + "'");
  return *f;
}

int cmd_verify(const Params& p, std::ostream& out) {
  const Field field = Field::build(p.m, p.modulus);
  const LinearCode code = make_code(field, p);
  const WeightDistribution dist = weight_distribution(code, EnumerationOptions{p.budget, p.workers});
  const Theorem theorem = *theorem_for(p.m, p.h, code.kind());
  const VerificationReport r = verify(predict_distribution(p.m, p.h, theorem, table_form(p.table_form)), dist);
  if (machine(p)) {
    out << format_report_line(r) << '\n';
    out << "source=" << to_string(r.source) << '\n'
        << "table_form=" << to_string(r.form) << '\n'
        << "moments=" << (r.moment_check ? "pass" : "fail") << '\n'
        << "prediction_moments=" << (r.prediction_moment_check ? "pass" : "fail") << '\n'
        << "dimension=" << (r.dimension_ok ? "pass" : "fail") << '\n';
  } else {
    out << to_string(r.source) << " (" << to_string(r.form) << ") for " << p.variant << " m=" << p.m << " h=" << p.h
        << ": " << to_string(r.status) << '\n';
    out << "n=" << r.n << " k=" << r.k << " d=" << r.d_min << '\n';
    out << "enumerated " << format_counts(r.computed) << '\n';
    if (r.status != VerificationStatus::Inapplicable) {
      out << "predicted  {";
      bool first = true;
      for (const auto& c : r.details) {
        if (c.expected == Rational(0)) continue;
        out << (first ? "" : ", ") << format_rational(c.weight) << ':' << format_rational(c.expected);
        first = false;
      }
      out << "}\n";
    }
    out << "moments " << (r.moment_check ? "pass" : "fail") << ", prediction moments "
        << (r.prediction_moment_check ? "pass" : "fail") << '\n';
  }
  for (const auto& note : r.notes) out << "# " << note << '\n';
  return r.status == VerificationStatus::Mismatch ? kExitMismatch : kExitOk;
}

int cmd_sweep(const Params& p, std::ostream& out) {
  SweepOptions opts;
  opts.m_min = p.m_min;
  opts.m_max = p.m_max;
  opts.h = p.sweep_h;
  opts.workers = p.workers;
  opts.budget = p.budget;
  if (p.m_max > Field::kMaxDegree || p.m_min < Field::kMinDegree)
    throw InvalidParameter("sweep range must lie within [" + std::to_string(Field::kMinDegree) + ", " +
                           std::to_string(Field::kMaxDegree) + "]");
  if (p.table_form == "both")
    opts.forms = {TableForm::AsPrinted, TableForm::MomentCorrected};
  else
    opts.forms = {table_form(p.table_form)};
  const auto reports = sweep(opts);
  write_sweep_report(out, reports);
  return tally(reports).mismatch == 0 ? kExitOk : kExitMismatch;
}

int cmd_export(const Params& p, std::ostream& out) {
  const Field field = Field::build(p.m, p.modulus);
  const LinearCode code = make_code(field, p);
  if (p.output == "-") {
    write_generator_matrix(out, code);
    return kExitOk;
  }
  std::ofstream file(p.output);
  if (!file) throw InvalidParameter("cannot open '" + p.output + "' for writing");
  write_generator_matrix(file, code);
  return kExitOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Trace-defined binary codes with few weights: construction, enumeration and table checks",
               "fewweight"};
  app.require_subcommand(1);
  // -h would collide with --h; subcommands inherit this.
  app.set_help_flag("--help", "print this help and exit");
  Params p;

  auto add_field = [&](CLI::App* sub) {
    sub->add_option("--m", p.m, "extension degree m of GF(2^m)")->required()->check(CLI::Range(2, 20));
    sub->add_option("--modulus", p.modulus, "irreducible modulus, bit-encoded (x^3+x+1 = 11)");
    sub->add_option("--format", p.format, "output format")->check(CLI::IsMember({"text", "machine"}));
  };
  auto add_code = [&](CLI::App* sub) {
    add_field(sub);
    sub->add_option("--h", p.h, "proper divisor h of m")->required();
    sub->add_option("--variant", p.variant, "defining set")->check(CLI::IsMember({"d0", "d1", "full", "punctured"}));
  };
  auto add_enumeration = [&](CLI::App* sub) {
    sub->add_option("--budget", p.budget, "maximum 2^m * n coordinate evaluations");
    sub->add_option("--workers", p.workers, "enumeration threads (0 = all cores)");
  };

  auto* construct = app.add_subcommand("construct", "build a code and print its parameters");
  add_code(construct);

  auto* weights = app.add_subcommand("weights", "enumerate the weight distribution");
  add_code(weights);
  add_enumeration(weights);

  auto* weil = app.add_subcommand("weil", "evaluate S_h(a,b) directly and in closed form");
  add_field(weil);
  weil->add_option("--h", p.h, "proper divisor h of m")->required();
  weil->add_option("--a", p.a, "a != 0, bit-encoded element");
  weil->add_option("--b", p.b, "b, bit-encoded element");

  auto* verify_cmd = app.add_subcommand("verify", "check an enumerated distribution against its weight table");
  add_code(verify_cmd);
  add_enumeration(verify_cmd);
  verify_cmd->add_option("--table-form", p.table_form, "printed or corrected")
      ->check(CLI::IsMember({"printed", "corrected"}));

  auto* sweep_cmd = app.add_subcommand("sweep", "verify every table over a range of m");
  sweep_cmd->add_option("--m-min", p.m_min, "smallest m")->check(CLI::Range(2, 20));
  sweep_cmd->add_option("--m-max", p.m_max, "largest m")->check(CLI::Range(2, 20));
  sweep_cmd->add_option("--h", p.sweep_h, "only this h (default: every proper divisor)");
  sweep_cmd->add_option("--table-form", p.table_form, "printed, corrected or both")
      ->check(CLI::IsMember({"printed", "corrected", "both"}));
  add_enumeration(sweep_cmd);

  auto* export_cmd = app.add_subcommand("export", "write the row-reduced generator matrix");
  add_code(export_cmd);
  export_cmd->add_option("--output,-o", p.output, "destination file, '-' for stdout");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (construct->parsed()) return cmd_construct(p, out);
    if (weights->parsed()) return cmd_weights(p, out);
    if (weil->parsed()) return cmd_weil(p, out);
    if (verify_cmd->parsed()) return cmd_verify(p, out);
    if (sweep_cmd->parsed()) return cmd_sweep(p, out);
    if (export_cmd->parsed()) return cmd_export(p, out);
  } catch (const InvalidParameter& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const BudgetExceeded& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << '\n';
    return kExitInternal;
  }
  err << app.help();
  return kExitUsage;
}

}  // namespace fewweight::cli
