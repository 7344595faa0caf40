#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "maass/maass_forms.hpp"
#include "maass/periods.hpp"

namespace maass {

/// One identity evaluated on a set of sample points.
struct IdentityCheck {
  std::string id;         ///< "<suite>.<name>"
  std::string statement;  ///< the identity in words
  std::size_t points = 0;
  double max_residual = 0.0;
  double tolerance = 0.0;
  bool pass = false;
  std::string note;  ///< error message when the evaluation threw
};

struct VerificationReport {
  std::string suite;
  std::vector<IdentityCheck> entries;  // sorted by id
  double wall_seconds = 0.0;
  bool pass() const;
};

struct VerifyConfig {
  double quad_rel_tol = 1e-10;
  double cusp_height = 12.0;
  std::size_t delta_terms = 50;
  std::size_t surrogate_terms = 12;
  /// Restricts the multiplier suite to one weight (default: 1/2, 3/2, 12).
  std::optional<double> multiplier_weight;
  std::uint64_t seed = 0;
  /// Per-identity tolerance overrides keyed by id.
  std::map<std::string, double> tolerances;

  QuadratureOptions quadrature() const;
};

/// branch, group, multiplier, kernel, ms, quad, periods, classical.
const std::vector<std::string>& suite_names();

/// Runs one suite, or every suite for "all". Throws UnsupportedParameter for
/// unknown names. Identity failures are recorded, never thrown.
VerificationReport run_suite(const std::string& name, const VerifyConfig& cfg = {});

/// k = 1/2, eta-power multiplier, nu = 0.35i, a_n = b_n = 1/n for n <= terms.
MaassForm default_surrogate(std::size_t terms = 12);

struct GrowthTable {
  GrowthReport delta;
  GrowthReport surrogate;
};

GrowthTable growth_table(const VerifyConfig& cfg = {});

}  // namespace maass
