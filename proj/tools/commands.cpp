#include "commands.hpp"

#include "complex_parse.hpp"

#include "lounesto/classification.hpp"
#include "lounesto/dynamics.hpp"
#include "lounesto/split.hpp"
#include "lounesto/sweeps.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <charconv>
#include <fstream>
#include <functional>
#include <ostream>
#include <sstream>

namespace lounesto::cli {

namespace {

using json = nlohmann::ordered_json;
using Cplx = std::complex<double>;

struct RunConfig {
  std::string command;
  std::string kind = "single+";
  double m = 1.0;
  double theta = 0.0;
  double phi = 0.0;
  double p = 0.0;
  std::string sign = "particle";
  std::string alpha;
  std::string beta;
  std::string alpha2;
  std::string beta2;
  std::string sector;
  std::uint64_t seed = 42;
  std::uint64_t samples = 0;
  double rel_tol = 1e-9;
  double max_boost = 1e3;
  std::vector<std::string> families;
  std::string format = "json";
  std::string out_path;
};

/// Bad input detected after parsing.
struct InvalidInput : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::string number(double v) {
  char buf[64];
  const auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, v);
  return ec == std::errc() ? std::string(buf, ptr) : std::string("nan");
}

std::string csv_field(const std::string &s) {
  if (s.find_first_of(",\"\n") == std::string::npos)
    return s;
  std::string q = "\"";
  for (const char c : s) {
    if (c == '"')
      q += '"';
    q += c;
  }
  return q + "\"";
}

std::string csv_line(const std::vector<std::string> &fields) {
  std::string line;
  for (std::size_t k = 0; k < fields.size(); ++k) {
    if (k)
      line += ',';
    line += csv_field(fields[k]);
  }
  return line + '\n';
}

json complex_json(Cplx z) { return json{{"re", z.real()}, {"im", z.imag()}}; }

json vector_json(const FourVector<double> &v) {
  json a = json::array();
  for (int k = 0; k < 4; ++k)
    a.push_back(complex_json(v(k)));
  return a;
}

json support_json(const Support &s) {
  return json{{"sigma", s.sigma}, {"omega", s.omega}, {"K", s.K}, {"S", s.S}};
}

std::string cls(LounestoClass c) { return std::string(to_string(c)); }

Cplx phase(const std::string &text, const char *name) {
  const auto z = parse_complex(text);
  if (!z)
    throw InvalidInput(std::string("cannot parse ") + name + " '" + text +
                       "' as a complex number (expected a+bi)");
  return *z;
}

SpinorSpec<double> spec_from(const RunConfig &c) {
  SpinorSpec<double> s;
  const auto kind = parse_kind(c.kind);
  if (!kind)
    throw InvalidInput("unknown --kind '" + c.kind + "'");
  const auto sign = parse_sign(c.sign);
  if (!sign)
    throw InvalidInput("unknown --sign '" + c.sign + "'");
  s.kind = *kind;
  s.sign = *sign;
  s.mass = c.m;
  s.theta = c.theta;
  s.phi = c.phi;
  s.momentum = c.p;
  s.phases = {phase(c.alpha, "--alpha"), phase(c.beta, "--beta")};
  validate(s);
  if (s.phases.is_zero())
    throw NullSpinorError("NullSpinor: both phase factors are zero");
  return s;
}

json spec_json(const RunConfig &c) {
  return json{{"kind", c.kind},   {"m", c.m},
              {"theta", c.theta}, {"phi", c.phi},
              {"p", c.p},         {"sign", c.sign},
              {"alpha", c.alpha}, {"beta", c.beta}};
}

json config_json(const RunConfig &c) {
  json j;
  j["command"] = c.command;
  if (c.command == "classify" || c.command == "split" ||
      c.command == "compose")
    j["spec"] = spec_json(c);
  if (c.command == "compose") {
    j["alpha2"] = c.alpha2;
    j["beta2"] = c.beta2;
  }
  if (c.command == "tables")
    j["sector"] = c.sector;
  if (c.command == "tables" || c.command == "dirac" || c.command == "fpk" ||
      c.command == "class6") {
    j["samples"] = c.samples;
    j["seed"] = c.seed;
  }
  if (c.command == "dirac" || c.command == "fpk")
    j["max_boost"] = c.max_boost;
  if (c.command == "dirac")
    j["families"] = c.families;
  j["rel_tol"] = c.rel_tol;
  j["format"] = c.format;
  return j;
}

/// Text produced by one command plus whether a property was violated.
struct Outcome {
  std::string text;
  bool violation = false;
};

Outcome emit(const RunConfig &c, json result, std::string csv,
             bool violation = false) {
  if (c.format == "csv")
    return {std::move(csv), violation};
  json record;
  record["config"] = config_json(c);
  record["result"] = std::move(result);
  record["status"] = violation ? "violation" : "ok";
  return {record.dump(2) + "\n", violation};
}

Outcome cmd_classify(const RunConfig &c, const TolerancePolicy &tol) {
  const auto spec = spec_from(c);
  const auto psi = build(spec);
  const auto b = bilinears(psi.amplitudes);
  const auto fpk = fpk_residuals(b);
  const auto cross = crosscheck(spec, tol);

  json r;
  r["class"] = cls(cross.classified);
  r["predicted_class"] = cls(cross.predicted);
  r["agree"] = cross.agree;
  r["boundary"] = cross.boundary;
  json amps = json::array();
  for (int k = 0; k < 4; ++k)
    amps.push_back(complex_json(psi.amplitudes(k)));
  r["spinor"] = amps;
  json S = json::array();
  for (int mu = 0; mu < 4; ++mu) {
    json row = json::array();
    for (int nu = 0; nu < 4; ++nu)
      row.push_back(complex_json(b.S(mu, nu)));
    S.push_back(row);
  }
  r["bilinears"] = json{{"sigma", complex_json(b.sigma)},
                        {"omega", complex_json(b.omega)},
                        {"J", vector_json(b.J)},
                        {"K", vector_json(b.K)},
                        {"S", S}};
  r["magnitudes"] = json{{"sigma", std::abs(b.sigma)},
                         {"omega", std::abs(b.omega)},
                         {"J", b.J.norm()},
                         {"K", b.K.norm()},
                         {"S", b.S.norm()}};
  r["fpk"] = json{{"r1", fpk.r1}, {"r2", fpk.r2}, {"r3", fpk.r3}};

  std::string csv =
      csv_line({"class", "predicted_class", "sigma", "omega", "J_t", "K_norm",
                "S_norm", "r1", "r2", "r3"}) +
      csv_line({cls(cross.classified), cls(cross.predicted),
                number(b.sigma.real()), number(b.omega.real()),
                number(b.scale()), number(b.K.norm()), number(b.S.norm()),
                number(fpk.r1), number(fpk.r2), number(fpk.r3)});
  return emit(c, std::move(r), std::move(csv));
}

std::string equation(LounestoClass whole, LounestoClass left,
                     LounestoClass right, bool degenerate) {
  std::string e = cls(whole) + " = " + cls(left) + " + " + cls(right);
  return degenerate ? e + " (degenerate)" : e;
}

Outcome cmd_split(const RunConfig &c, const TolerancePolicy &tol) {
  const auto spec = spec_from(c);
  const auto s = split(spec, tol);
  const auto u = gamma_union_report(s, tol);
  const std::string eq =
      equation(s.class_whole, s.class_real, s.class_imag, s.degenerate());

  json r;
  r["equation"] = eq;
  r["class_whole"] = cls(s.class_whole);
  r["class_real"] = cls(s.class_real);
  r["class_imag"] = cls(s.class_imag);
  r["degenerate"] = s.degenerate();
  r["recombination_residual"] = s.recombination_residual;
  r["support"] = json{{"whole", support_json(u.whole)},
                      {"real", support_json(u.real)},
                      {"imag", support_json(u.imag)},
                      {"parts_union", support_json(u.parts_union)}};
  r["support_text"] = render(u);

  std::string csv =
      csv_line({"equation", "whole_class", "real_class", "imag_class",
                "degenerate", "recombination_residual"}) +
      csv_line({eq, cls(s.class_whole), cls(s.class_real), cls(s.class_imag),
                s.degenerate() ? "true" : "false",
                number(s.recombination_residual)});
  return emit(c, std::move(r), std::move(csv));
}

Outcome cmd_compose(const RunConfig &c, const TolerancePolicy &tol) {
  const auto a = spec_from(c);
  auto b = a;
  b.phases = {phase(c.alpha2, "--alpha2"), phase(c.beta2, "--beta2")};
  if (b.phases.is_zero())
    throw NullSpinorError("NullSpinor: both phase factors of the second "
                          "spinor are zero");
  const auto r = compose(a, b, tol);
  const std::string eq =
      equation(r.class_sum, r.class_left, r.class_right, false);

  json j;
  j["equation"] = eq;
  j["class_sum"] = cls(r.class_sum);
  j["class_left"] = cls(r.class_left);
  j["class_right"] = cls(r.class_right);
  std::string csv = csv_line({"equation", "sum_class", "left_class",
                              "right_class"}) +
                    csv_line({eq, cls(r.class_sum), cls(r.class_left),
                              cls(r.class_right)});
  return emit(c, std::move(j), std::move(csv));
}

Outcome cmd_tables(const RunConfig &c, const TolerancePolicy &tol) {
  Sector sector;
  if (c.sector == "regular")
    sector = Sector::Regular;
  else if (c.sector == "singular")
    sector = Sector::Singular;
  else
    throw InvalidInput("unknown --sector '" + c.sector + "'");

  const auto rows = composition_table(sector, c.samples, c.seed, tol);
  bool violation = false;
  json arr = json::array();
  std::string csv = csv_line({"target_class", "left_class", "right_class",
                              "constraint_tag", "samples", "successes"});
  for (const auto &row : rows) {
    violation = violation || row.success_count != row.sample_count;
    arr.push_back(json{{"target_class", cls(row.target_class)},
                       {"left_class", cls(row.left_class)},
                       {"right_class", cls(row.right_class)},
                       {"constraint_tag", row.phase_constraint_tag},
                       {"method", row.method},
                       {"samples", row.sample_count},
                       {"successes", row.success_count},
                       {"boundary_excluded", row.boundary_count}});
    csv += csv_line({cls(row.target_class), cls(row.left_class),
                     cls(row.right_class), row.phase_constraint_tag,
                     std::to_string(row.sample_count),
                     std::to_string(row.success_count)});
  }
  return emit(c, json{{"rows", arr}}, std::move(csv), violation);
}

Outcome cmd_dirac(const RunConfig &c, const TolerancePolicy &tol) {
  DiracSweepConfig cfg;
  cfg.samples = c.samples;
  cfg.seed = c.seed;
  cfg.max_boost = c.max_boost;
  if (!c.families.empty() &&
      !(c.families.size() == 1 && c.families.front() == "all")) {
    cfg.families.clear();
    for (const auto &name : c.families) {
      const auto f = parse_dirac_family(name);
      if (!f)
        throw InvalidInput("unknown --family '" + name + "'");
      cfg.families.push_back(*f);
    }
  }
  const auto sweep = dirac_sweep(cfg, tol);

  json arr = json::array();
  std::string csv = csv_line({"family", "expect_satisfy", "samples",
                              "boundary", "satisfied", "min_relative",
                              "max_relative", "below_gap"});
  for (const auto &f : sweep.families) {
    arr.push_back(json{{"family", std::string(to_string(f.family))},
                       {"expect_satisfy", f.expect_satisfy},
                       {"samples", f.samples},
                       {"boundary_excluded", f.boundary},
                       {"satisfied", f.satisfied},
                       {"satisfied_fraction",
                        f.samples ? double(f.satisfied) / double(f.samples)
                                  : 0.0},
                       {"min_relative_residual", f.min_relative},
                       {"max_relative_residual", f.max_relative},
                       {"below_gap", f.below_gap},
                       {"class_mismatch", f.class_mismatch},
                       {"ok", f.ok()}});
    csv += csv_line({std::string(to_string(f.family)),
                     f.expect_satisfy ? "true" : "false",
                     std::to_string(f.samples), std::to_string(f.boundary),
                     std::to_string(f.satisfied), number(f.min_relative),
                     number(f.max_relative), std::to_string(f.below_gap)});
  }
  json r{{"families", arr},
         {"gap", sweep.gap},
         {"satisfy_tolerance", kDiracRelTolerance},
         {"linearity_pairs", sweep.linearity_pairs},
         {"linearity_satisfied", sweep.linearity_satisfied},
         {"triangle_violations", sweep.triangle_violations}};
  return emit(c, std::move(r), std::move(csv), !sweep.ok());
}

Outcome cmd_fpk(const RunConfig &c, const TolerancePolicy &) {
  const auto a = fpk_audit(c.samples, c.seed, c.max_boost);
  json r{{"samples", a.samples},
         {"regular", a.regular},
         {"singular", a.singular},
         {"bound", a.bound},
         {"max_r1_scaled", a.max_r1},
         {"max_r2_scaled", a.max_r2},
         {"max_r3_scaled", a.max_r3},
         {"max_singular_jj_scaled", a.max_singular_jj},
         {"min_regular_jj_scaled", a.min_regular_jj},
         {"violations", a.violations}};
  std::string csv =
      csv_line({"samples", "regular", "singular", "max_r1", "max_r2",
                "max_r3", "max_singular_jj", "min_regular_jj",
                "violations"}) +
      csv_line({std::to_string(a.samples), std::to_string(a.regular),
                std::to_string(a.singular), number(a.max_r1),
                number(a.max_r2), number(a.max_r3),
                number(a.max_singular_jj), number(a.min_regular_jj),
                std::to_string(a.violations)});
  return emit(c, std::move(r), std::move(csv), !a.ok());
}

Outcome cmd_class6(const RunConfig &c, const TolerancePolicy &tol) {
  const auto rep = class6_search(c.samples, c.seed, tol);
  json hist;
  for (const auto k : kAllClasses)
    hist[cls(k)] = rep.sum_histogram[static_cast<std::size_t>(k)];
  hist["Null"] =
      rep.sum_histogram[static_cast<std::size_t>(LounestoClass::Null)];
  json r{{"trials", rep.trials},
         {"boundary_excluded", rep.boundary_count},
         {"class6_sums", rep.class6_sums},
         {"null_sums", rep.null_sums},
         {"sum_histogram", hist},
         {"class6_splits", rep.class6_splits},
         {"class6_splits_ok", rep.class6_splits_ok}};
  const bool violation =
      rep.class6_sums != 0 || rep.class6_splits_ok != rep.class6_splits;
  std::string csv =
      csv_line({"trials", "boundary", "class6_sums", "null_sums",
                "class6_splits", "class6_splits_ok"}) +
      csv_line({std::to_string(rep.trials), std::to_string(rep.boundary_count),
                std::to_string(rep.class6_sums), std::to_string(rep.null_sums),
                std::to_string(rep.class6_splits),
                std::to_string(rep.class6_splits_ok)});
  return emit(c, std::move(r), std::move(csv), violation);
}

void add_spec_options(CLI::App *sub, RunConfig &c) {
  sub->add_option("--kind", c.kind, "single+ | single- | dual+ | dual-")
      ->check(CLI::IsMember({"single+", "single-", "dual+", "dual-"}));
  sub->add_option("--m", c.m, "mass (> 0)");
  sub->add_option("--theta", c.theta, "polar angle in [0, pi]");
  sub->add_option("--phi", c.phi, "azimuth in [0, 2pi)");
  sub->add_option("--p", c.p, "momentum magnitude (>= 0)");
  sub->add_option("--sign", c.sign, "particle | antiparticle")
      ->check(CLI::IsMember({"particle", "antiparticle"}));
  sub->add_option("--alpha", c.alpha, "phase alpha, a+bi")->required();
  sub->add_option("--beta", c.beta, "phase beta, a+bi")->required();
}

} // namespace

int run(const std::vector<std::string> &args, std::ostream &out,
        std::ostream &err) {
  CLI::App app{"Lounesto classification and spinor split toolkit",
               "lounesto"};
  app.require_subcommand(1);

  RunConfig cfg;
  app.add_option("--rel-tol", cfg.rel_tol,
                 "vanishing threshold relative to J^0")
      ->check(CLI::PositiveNumber);
  app.add_option("--format", cfg.format, "json | csv")
      ->check(CLI::IsMember({"json", "csv"}));
  app.add_option("--out", cfg.out_path, "write the report to PATH");

  // Subcommands inherit the global options so they can follow the verb.
  app.fallthrough();

  std::map<std::string, std::function<Outcome(const RunConfig &,
                                              const TolerancePolicy &)>>
      handlers;

  auto *classify_cmd = app.add_subcommand("classify", "classify one spinor");
  add_spec_options(classify_cmd, cfg);
  handlers["classify"] = cmd_classify;

  auto *split_cmd =
      app.add_subcommand("split", "split a spinor into real/imag phase parts");
  add_spec_options(split_cmd, cfg);
  handlers["split"] = cmd_split;

  auto *compose_cmd =
      app.add_subcommand("compose", "sum two spinors of one family");
  add_spec_options(compose_cmd, cfg);
  compose_cmd->add_option("--alpha2", cfg.alpha2, "second alpha")->required();
  compose_cmd->add_option("--beta2", cfg.beta2, "second beta")->required();
  handlers["compose"] = cmd_compose;

  auto *tables_cmd =
      app.add_subcommand("tables", "reproduce the composition tables");
  tables_cmd->add_option("--sector", cfg.sector, "regular | singular")
      ->required();
  std::uint64_t table_samples = 1000;
  tables_cmd->add_option("--samples", table_samples, "draws per row (>= 1)");
  tables_cmd->add_option("--seed", cfg.seed, "64-bit seed");
  handlers["tables"] = cmd_tables;

  auto *dirac_cmd = app.add_subcommand("dirac", "Dirac-equation sweep");
  std::uint64_t dirac_samples = 1000;
  dirac_cmd->add_option("--samples", dirac_samples, "draws per family");
  dirac_cmd->add_option("--seed", cfg.seed, "64-bit seed");
  dirac_cmd->add_option("--max-boost", cfg.max_boost, "largest p/m")
      ->check(CLI::NonNegativeNumber);
  dirac_cmd->add_option("--family", cfg.families,
                        "all | c2-equal | c2-unequal | c1 | c3 | c6-single | "
                        "c4 | c5 | c6-dual");
  handlers["dirac"] = cmd_dirac;

  auto *fpk_cmd = app.add_subcommand("fpk", "Fierz-Pauli-Kofink audit");
  std::uint64_t fpk_samples = 10000;
  fpk_cmd->add_option("--samples", fpk_samples, "random spinors");
  fpk_cmd->add_option("--seed", cfg.seed, "64-bit seed");
  fpk_cmd->add_option("--max-boost", cfg.max_boost, "largest p/m")
      ->check(CLI::NonNegativeNumber);
  handlers["fpk"] = cmd_fpk;

  auto *class6_cmd =
      app.add_subcommand("class6", "search for class-6 sums of classes 1-5");
  std::uint64_t class6_trials = 100000;
  class6_cmd->add_option("--samples", class6_trials, "random pairs");
  class6_cmd->add_option("--seed", cfg.seed, "64-bit seed");
  handlers["class6"] = cmd_class6;

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError &e) {
    std::ostringstream o, e_stream;
    const int code = app.exit(e, o, e_stream);
    out << o.str();
    err << e_stream.str();
    return code == 0 ? kExitOk : kExitInvalid;
  }

  for (auto *sub : app.get_subcommands())
    cfg.command = sub->get_name();
  if (cfg.command == "tables")
    cfg.samples = table_samples;
  else if (cfg.command == "dirac")
    cfg.samples = dirac_samples;
  else if (cfg.command == "fpk")
    cfg.samples = fpk_samples;
  else if (cfg.command == "class6")
    cfg.samples = class6_trials;

  try {
    if (cfg.command != "classify" && cfg.command != "split" &&
        cfg.command != "compose" && cfg.samples == 0)
      throw InvalidInput("--samples must be at least 1");
    const TolerancePolicy tol{cfg.rel_tol};
    const Outcome outcome = handlers.at(cfg.command)(cfg, tol);

    if (cfg.out_path.empty()) {
      out << outcome.text;
    } else {
      std::ofstream file(cfg.out_path, std::ios::binary);
      if (!file)
        throw InvalidInput("cannot open --out path '" + cfg.out_path + "'");
      file << outcome.text;
    }
    if (outcome.violation) {
      err << "property violation in '" << cfg.command << "'\n";
      return kExitViolation;
    }
    return kExitOk;
  } catch (const InvalidInput &e) {
    err << "error: " << e.what() << '\n';
    return kExitInvalid;
  } catch (const NullSpinorError &e) {
    err << "error: " << e.what() << '\n';
    return kExitInvalid;
  } catch (const DomainError &e) {
    err << "error: " << e.what() << '\n';
    return kExitInvalid;
  } catch (const FamilyMismatchError &e) {
    err << "error: " << e.what() << '\n';
    return kExitInvalid;
  } catch (const AnomalyError &e) {
    err << "anomaly: " << e.what() << '\n';
    return kExitViolation;
  }
}

} // namespace lounesto::cli
