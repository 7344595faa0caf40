// Prints one PASS/FAIL line per acceptance criterion; exits 1 if any fails.
#include <cmath>
#include <cstdio>
#include <map>
#include <string>
#include <vector>

#include "maass/verification.hpp"

using namespace maass;

namespace {

struct Criterion {
  int number;
  std::string title;
  std::vector<std::string> ids;
};

const std::vector<Criterion> kCriteria = {
    {1, "classical golden test: P_{12,11/2} = -22 p and P_{12,-11/2} = 0",
     {"classical.P_equals_minus_22p", "classical.P_vanishes"}},
    {2, "period polynomial relations",
     {"classical.period_poly_s_relation", "classical.period_poly_u_relation"}},
    {3, "periodicity, cocycle and surrogate near-periodicity",
     {"classical.eichler_periodicity", "classical.eichler_cocycle",
      "periods.near_periodicity_upper", "periods.near_periodicity_lower"}},
    {4, "three-term equation (Delta path and synthetic f)",
     {"classical.three_term_delta", "periods.three_term_synthetic_grid"}},
    {5, "bijection roundtrips and degenerate constants",
     {"periods.roundtrip_f", "periods.roundtrip_P", "periods.bijection_constants"}},
    {6, "compatibility P = f - f|S for the surrogate", {"periods.compatibility_surrogate"}},
    {7, "kernel closed form, transformation laws and Maass-Selberg form identities",
     {"kernel.closed_form", "kernel.transform_real_mu", "kernel.transform_vertical_ray",
      "kernel.transform_conjugate_ray", "ms.closedness", "ms.sum_identity", "ms.symmetry",
      "ms.combined_law"}},
    {8, "operator identities",
     {"kernel.delta_lower_vanishes", "kernel.operator_product", "kernel.operator_product_eigen",
      "kernel.h_power_eigen", "kernel.step_operators"}},
    {9, "multiplier consistency, v(-1) and v(S)^2",
     {"multiplier.consistency", "multiplier.minus_identity", "multiplier.v_S_squared"}},
};

}  // namespace

int main() {
  const VerifyConfig cfg;
  std::map<std::string, IdentityCheck> checks;
  double seconds = 0.0;
  for (const char* suite : {"classical", "periods", "kernel", "ms", "multiplier"}) {
    const VerificationReport r = run_suite(suite, cfg);
    seconds += r.wall_seconds;
    for (const IdentityCheck& c : r.entries) checks[c.id] = c;
  }

  int failures = 0;
  for (const Criterion& c : kCriteria) {
    bool pass = true;
    double worst = 0.0;
    std::string failed;
    for (const std::string& id : c.ids) {
      const auto it = checks.find(id);
      if (it == checks.end() || !it->second.pass) {
        pass = false;
        failed += " " + id;
      }
      if (it != checks.end() && it->second.tolerance > 0.0) {
        worst = std::max(worst, it->second.max_residual / it->second.tolerance);
      }
    }
    failures += !pass;
    std::printf("[%s] criterion %d: %s (worst residual/tolerance %.2e)%s%s\n",
                pass ? "PASS" : "FAIL", c.number, c.title.c_str(), worst,
                failed.empty() ? "" : "; failing:", failed.c_str());
  }

  const GrowthTable g = growth_table(cfg);
  const double s0 = g.surrogate.slope_at_zero, si = g.surrogate.slope_at_infinity;
  const double di = g.delta.slope_at_infinity;
  const bool growth = si <= -0.85 && s0 >= -0.15 && std::abs(di - 10.0) <= 0.1;
  failures += !growth;
  std::printf(
      "[%s] criterion 10: growth slopes, surrogate at inf %.4f (<= -0.85), surrogate at 0 %.4f "
      "(>= -0.15), Delta at inf %.4f (10 +- 0.1)\n",
      growth ? "PASS" : "FAIL", si, s0, di);

  std::printf("%d of 10 criteria failed; identity suites took %.1f s\n", failures, seconds);
  return failures == 0 ? 0 : 1;
}
