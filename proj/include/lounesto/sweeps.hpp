#pragma once

// Seeded property sweeps shared by the CLI and the acceptance suite.

#include "lounesto/classification.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace lounesto {

/// Phase subfamilies probed by the Dirac sweep.
enum class DiracFamily {
  C2Equal,   ///< single helicity, alpha = beta
  C2Unequal, ///< single helicity, alpha* beta real, alpha != beta
  C1,
  C3,
  C6Single,
  C4,
  C5,
  C6Dual,
};

inline constexpr std::array<DiracFamily, 8> kAllDiracFamilies = {
    DiracFamily::C2Equal, DiracFamily::C2Unequal, DiracFamily::C1,
    DiracFamily::C3,      DiracFamily::C6Single,  DiracFamily::C4,
    DiracFamily::C5,      DiracFamily::C6Dual};

std::string_view to_string(DiracFamily f);
std::optional<DiracFamily> parse_dirac_family(std::string_view s);

struct DiracFamilyStats {
  DiracFamily family = DiracFamily::C2Equal;
  bool expect_satisfy = false;
  std::uint64_t samples = 0;
  std::uint64_t boundary = 0;
  std::uint64_t satisfied = 0;
  std::uint64_t class_mismatch = 0; ///< drawn spinor not of the family's class
  double min_relative = 0;          ///< min residual / (m ||psi||)
  double max_relative = 0;
  /// Expected-to-fail draws whose relative residual is not above this gap.
  std::uint64_t below_gap = 0;

  bool ok() const;
};

struct DiracSweep {
  std::vector<DiracFamilyStats> families;
  std::uint64_t linearity_pairs = 0;
  std::uint64_t linearity_satisfied = 0;    ///< sum of two alpha=beta spinors
  std::uint64_t triangle_violations = 0;    ///< arbitrary same-family pairs
  double gap = 1e-3;

  bool ok() const;
};

struct DiracSweepConfig {
  std::uint64_t samples = 1000;
  std::uint64_t seed = 42;
  double max_boost = 1e3;
  double gap = 1e-3;
  std::vector<DiracFamily> families{kAllDiracFamilies.begin(),
                                    kAllDiracFamilies.end()};
};

DiracSweep dirac_sweep(const DiracSweepConfig &cfg,
                       const TolerancePolicy &tol = {});

struct FpkAudit {
  std::uint64_t samples = 0;
  std::uint64_t regular = 0;
  std::uint64_t singular = 0;
  double max_r1 = 0; ///< all residuals divided by (J^0)^2
  double max_r2 = 0;
  double max_r3 = 0;
  double max_singular_jj = 0; ///< |J.J| / (J^0)^2 over classes 4-6
  double min_regular_jj = 0;  ///< J.J / (J^0)^2 over classes 1-3
  std::uint64_t violations = 0;
  double bound = 1e-9;

  bool ok() const { return violations == 0; }
};

FpkAudit fpk_audit(std::uint64_t samples, std::uint64_t seed,
                   double max_boost = 1e3);

struct CoherenceSweep {
  std::uint64_t samples = 0; ///< non-boundary specs
  std::uint64_t boundary = 0;
  std::uint64_t agree = 0;
  std::uint64_t boost_invariant = 0;
  std::uint64_t scale_invariant = 0;
  std::array<std::uint64_t, 7> class_histogram{};

  bool ok() const {
    return agree == samples && boost_invariant == samples &&
           scale_invariant == samples;
  }
};

CoherenceSweep coherence_sweep(std::uint64_t samples, std::uint64_t seed,
                               const TolerancePolicy &tol = {},
                               const BoundaryPolicy &policy = {});

} // namespace lounesto
