// End-to-end acceptance suite: one PASS/FAIL line per criterion.

#include "lounesto/split.hpp"
#include "lounesto/sweeps.hpp"

#include <array>
#include <cstdio>
#include <iostream>
#include <sstream>
#include <string>

using namespace lounesto;

namespace {

constexpr std::uint64_t kSeed = 42;

int failures = 0;

void report(int id, const std::string &name, bool pass,
            const std::string &detail) {
  std::cout << (pass ? "PASS" : "FAIL") << "  criterion " << id << "  "
            << name << "  (" << detail << ")\n";
  if (!pass)
    ++failures;
}

std::string row_name(const CompositionRow &r) {
  std::string s(to_string(r.target_class));
  s += "=";
  s += to_string(r.left_class);
  s += "+";
  s += to_string(r.right_class);
  return s;
}

void check_table(int id, const std::string &name, Sector sector,
                 std::size_t rows) {
  constexpr std::uint64_t kSamples = 1000;
  const auto table = composition_table(sector, kSamples, kSeed);
  bool pass = table.size() == rows;
  std::ostringstream d;
  d << table.size() << " rows;";
  for (const auto &r : table) {
    pass = pass && r.sample_count == kSamples &&
           r.success_count == r.sample_count;
    d << ' ' << row_name(r) << ' ' << r.success_count << '/'
      << r.sample_count;
    if (r.boundary_count)
      d << " (+" << r.boundary_count << " boundary)";
    d << ';';
  }
  report(id, name, pass, d.str());
}

void check_dirac() {
  DiracSweepConfig cfg;
  cfg.samples = 1000;
  cfg.seed = kSeed;
  const auto s = dirac_sweep(cfg);
  std::ostringstream d;
  for (const auto &f : s.families)
    d << to_string(f.family) << ' ' << f.satisfied << '/' << f.samples
      << " min " << f.min_relative << "; ";
  d << "linearity " << s.linearity_satisfied << '/' << s.linearity_pairs;
  report(3, "Dirac partition", s.ok() && s.linearity_pairs == 1000, d.str());
}

void check_fpk() {
  const auto a = fpk_audit(10000, kSeed);
  std::ostringstream d;
  d << a.samples << " spinors, max r1/r2/r3 " << a.max_r1 << '/' << a.max_r2
    << '/' << a.max_r3 << ", max singular |J.J| " << a.max_singular_jj
    << ", min regular J.J " << a.min_regular_jj << ", violations "
    << a.violations;
  report(4, "FPK audit", a.ok() && a.samples == 10000, d.str());
}

void check_coherence() {
  const auto c = coherence_sweep(10000, kSeed);
  std::ostringstream d;
  d << "agree " << c.agree << '/' << c.samples << ", boost "
    << c.boost_invariant << ", rescale " << c.scale_invariant << ", boundary "
    << c.boundary;
  report(5, "classifier coherence", c.ok() && c.samples == 10000, d.str());
}

void check_class6() {
  const auto r = class6_search(100000, kSeed);
  std::ostringstream d;
  d << r.trials << " pairs, class-6 sums " << r.class6_sums << ", boundary "
    << r.boundary_count << ", class-6 splits " << r.class6_splits_ok << '/'
    << r.class6_splits;
  report(6, "class-6 search",
         r.trials == 100000 && r.class6_sums == 0 &&
             r.class6_splits_ok == r.class6_splits && r.class6_splits > 0,
         d.str());
}

bool capture(const std::string &cmd, std::string &out) {
  FILE *pipe = popen(cmd.c_str(), "r");
  if (!pipe)
    return false;
  std::array<char, 4096> buf;
  std::size_t n;
  while ((n = std::fread(buf.data(), 1, buf.size(), pipe)) > 0)
    out.append(buf.data(), n);
  return pclose(pipe) == 0;
}

void check_determinism() {
  const std::string cmd = std::string("\"") + LOUNESTO_CLI_PATH +
                          "\" tables --sector singular --seed 42";
  std::string first, second;
  const bool ran = capture(cmd, first) && capture(cmd, second);
  std::ostringstream d;
  d << first.size() << " bytes per run";
  report(7, "determinism", ran && !first.empty() && first == second, d.str());
}

} // namespace

int main() {
  check_table(1, "regular-sector table", Sector::Regular, 4);
  check_table(2, "singular-sector table", Sector::Singular, 10);
  check_dirac();
  check_fpk();
  check_coherence();
  check_class6();
  check_determinism();
  std::cout << (failures ? "acceptance: FAILED\n" : "acceptance: all passed\n");
  return failures ? 1 : 0;
}
