#include "maass/cli.hpp"

#include <cmath>
#include <fstream>
#include <iomanip>
#include <optional>
#include <ostream>
#include <sstream>
#include <stdexcept>

#include "CLI11.hpp"
#include "json.hpp"
#include "maass/errors.hpp"
#include "maass/maass_forms.hpp"
#include "maass/multiplier.hpp"
#include "maass/periods.hpp"
#include "maass/verification.hpp"

namespace maass::cli {

using nlohmann::json;

namespace {

// Raised for bad flags, configs and form files; maps to exit code 2.
struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

double parse_real(const std::string& s) {
  std::size_t used = 0;
  double v = 0.0;
  try {
    v = std::stod(s, &used);
  } catch (const std::exception&) {
    throw std::invalid_argument("not a number: '" + s + "'");
  }
  if (used != s.size()) throw std::invalid_argument("not a number: '" + s + "'");
  return v;
}

struct Settings {
  VerifyConfig verify;
  std::string grid = "list:0.5,1,2,1+0.5i,1-0.5i";
  std::size_t samples = 11;
};

void load_config(const std::string& path, Settings& s) {
  std::ifstream in(path);
  if (!in) throw UsageError("cannot read config '" + path + "'");
  json j;
  try {
    j = json::parse(in);
  } catch (const json::exception& e) {
    throw UsageError("malformed config '" + path + "': " + e.what());
  }
  if (!j.is_object()) throw UsageError("config must be a JSON object");
  try {
    for (const auto& [key, value] : j.items()) {
      if (key == "quadrature_rel_tol") {
        s.verify.quad_rel_tol = value.get<double>();
      } else if (key == "cusp_height") {
        s.verify.cusp_height = value.get<double>();
      } else if (key == "delta_terms") {
        s.verify.delta_terms = value.get<std::size_t>();
      } else if (key == "surrogate_terms") {
        s.verify.surrogate_terms = value.get<std::size_t>();
      } else if (key == "seed") {
        s.verify.seed = value.get<std::uint64_t>();
      } else if (key == "tolerances") {
        for (const auto& [id, tol] : value.items()) s.verify.tolerances[id] = tol.get<double>();
      } else if (key == "grid") {
        s.grid = value.get<std::string>();
      } else if (key == "samples") {
        s.samples = value.get<std::size_t>();
      } else {
        throw UsageError("unknown config key '" + key + "'");
      }
    }
  } catch (const json::exception& e) {
    throw UsageError("bad value in config '" + path + "': " + e.what());
  }
  if (!(s.verify.quad_rel_tol > 0.0)) throw UsageError("quadrature_rel_tol must be positive");
}

cplx json_complex(const json& v) {
  if (v.is_number()) return v.get<double>();
  if (v.is_string()) return parse_complex(v.get<std::string>());
  if (v.is_array() && v.size() == 2) return {v[0].get<double>(), v[1].get<double>()};
  throw UsageError("expected a number, \"a+bi\" or [re, im], got " + v.dump());
}

std::vector<cplx> json_coefficients(const json& j, const char* key) {
  std::vector<cplx> c;
  if (!j.contains(key)) return c;
  if (!j[key].is_array()) throw UsageError(std::string("'") + key + "' must be an array");
  for (const auto& v : j[key]) c.push_back(json_complex(v));
  return c;
}

struct FormFlags {
  std::optional<std::string> weight, nu, multiplier;
};

// Form file: {"backend": "delta" | "surrogate" | "holomorphic", ...}.
MaassForm load_form(const std::string& path, const FormFlags& flags, const Settings& s) {
  std::ifstream in(path);
  if (!in) throw UsageError("cannot read form file '" + path + "'");
  json j;
  try {
    j = json::parse(in);
  } catch (const json::exception& e) {
    throw UsageError("malformed form file '" + path + "': " + e.what());
  }
  try {
    const auto text = [&](const char* key, const std::optional<std::string>& fallback) {
      if (j.contains(key)) return j[key].is_string() ? j[key].get<std::string>() : j[key].dump();
      if (fallback) return *fallback;
      throw UsageError(std::string("form file lacks '") + key + "'");
    };
    const std::string backend = j.value("backend", "");
    if (backend == "delta") {
      return delta_embedding(parse_complex(text("nu", flags.nu)),
                             j.value("terms", s.verify.delta_terms));
    }
    const double k = parse_weight(text("weight", flags.weight));
    const cplx nu = parse_complex(text("nu", flags.nu));
    if (backend == "surrogate") {
      const auto v = make_multiplier(
          parse_multiplier_kind(text("multiplier", flags.multiplier.value_or("eta-power"))), k);
      return MaassForm::whittaker_surrogate(k, v, nu, json_coefficients(j, "a"),
                                            json_coefficients(j, "b"));
    }
    if (backend == "holomorphic") {
      return MaassForm::holomorphic_embedding(k, nu, json_coefficients(j, "coefficients"),
                                              j.value("reduce", true));
    }
    throw UsageError("form file backend must be delta, surrogate or holomorphic");
  } catch (const json::exception& e) {
    throw UsageError("bad value in form file '" + path + "': " + e.what());
  }
}

json report_json(const VerificationReport& r) {
  json entries = json::array();
  for (const IdentityCheck& c : r.entries) {
    json e = {{"identity", c.id},         {"statement", c.statement},
              {"points", c.points},       {"max_residual", c.max_residual},
              {"tolerance", c.tolerance}, {"pass", c.pass}};
    if (!c.note.empty()) e["note"] = c.note;
    entries.push_back(std::move(e));
  }
  return {{"suite", r.suite},
          {"pass", r.pass()},
          {"wall_seconds", r.wall_seconds},
          {"entries", std::move(entries)}};
}

json growth_json(const GrowthReport& g) {
  return {{"small_points", g.small_points},
          {"small_abs", g.small_abs},
          {"large_points", g.large_points},
          {"large_abs", g.large_abs},
          {"slope_at_zero", g.slope_at_zero},
          {"slope_at_infinity", g.slope_at_infinity},
          {"bound_at_zero", g.bound_at_zero},
          {"bound_at_infinity", g.bound_at_infinity},
          {"slack", g.slack},
          {"pass_zero", g.pass_zero},
          {"pass_infinity", g.pass_infinity}};
}

// Degree-10 fit of p from samples at the Chebyshev nodes of [-1, 1]. The
// discrete orthogonality of T_0..T_{n-1} gives the Chebyshev coefficients
// directly; the ones above degree 10 are returned to measure the fit.
struct PolyFit {
  std::vector<cplx> monomial;
  double dropped = 0.0;
};

PolyFit fit_degree_10(const std::vector<double>& x, const std::vector<cplx>& y) {
  const std::size_t n = x.size();
  std::vector<cplx> cheb(n, 0.0);
  for (std::size_t j = 0; j < n; ++j) {
    for (std::size_t i = 0; i < n; ++i) {
      cheb[j] += y[i] * std::cos(static_cast<double>(j) * std::acos(x[i]));
    }
    cheb[j] *= (j == 0 ? 1.0 : 2.0) / static_cast<double>(n);
  }
  PolyFit fit;
  fit.monomial.assign(11, 0.0);
  std::vector<double> prev(11, 0.0), cur(11, 0.0);
  prev[0] = 1.0;  // T_0
  cur[1] = 1.0;   // T_1
  for (std::size_t j = 0; j <= 10; ++j) {
    const std::vector<double>& t = j == 0 ? prev : cur;
    for (std::size_t m = 0; m <= 10; ++m) fit.monomial[m] += cheb[j] * t[m];
    if (j >= 1 && j < 10) {
      std::vector<double> next(11, 0.0);
      for (std::size_t m = 0; m < 10; ++m) next[m + 1] += 2.0 * cur[m];
      for (std::size_t m = 0; m <= 10; ++m) next[m] -= prev[m];
      prev = cur;
      cur = next;
    }
  }
  for (std::size_t j = 11; j < n; ++j) fit.dropped = std::max(fit.dropped, std::abs(cheb[j]));
  return fit;
}

class Output {
 public:
  Output(const std::string& path, std::ostream& fallback) : out_(&fallback) {
    if (path.empty()) return;
    file_.open(path);
    if (!file_) throw UsageError("cannot write '" + path + "'");
    out_ = &file_;
  }
  std::ostream& stream() { return *out_; }

 private:
  std::ofstream file_;
  std::ostream* out_;
};

}  // namespace

cplx parse_complex(const std::string& raw) {
  std::string s;
  for (char c : raw) {
    if (c != ' ') s += c;
  }
  if (s.empty()) throw std::invalid_argument("empty complex number");
  if (s.back() != 'i') return parse_real(s);
  s.pop_back();
  // split at the last sign that does not start the string or an exponent
  std::size_t split = std::string::npos;
  for (std::size_t i = s.size(); i-- > 1;) {
    if ((s[i] == '+' || s[i] == '-') && s[i - 1] != 'e' && s[i - 1] != 'E') {
      split = i;
      break;
    }
  }
  const std::string re = split == std::string::npos ? "" : s.substr(0, split);
  std::string im = split == std::string::npos ? s : s.substr(split);
  if (im.empty() || im == "+") im = "1";
  if (im == "-") im = "-1";
  return {re.empty() ? 0.0 : parse_real(re), parse_real(im)};
}

std::vector<cplx> parse_grid(const std::string& spec) {
  std::vector<cplx> points;
  const auto split = [](const std::string& s, char sep) {
    std::vector<std::string> parts;
    std::stringstream ss(s);
    for (std::string p; std::getline(ss, p, sep);) parts.push_back(p);
    return parts;
  };
  if (spec.rfind("list:", 0) == 0) {
    for (const std::string& p : split(spec.substr(5), ',')) points.push_back(parse_complex(p));
    if (points.empty()) throw std::invalid_argument("empty grid");
    return points;
  }
  const auto axis = [&](const std::string& s) {
    const auto f = split(s, ':');
    if (f.size() != 3) throw std::invalid_argument("grid axis must be a:b:n, got '" + s + "'");
    const double a = parse_real(f[0]), b = parse_real(f[1]);
    const double n = parse_real(f[2]);
    if (n < 1 || n != std::floor(n)) throw std::invalid_argument("grid count must be >= 1");
    std::vector<double> v;
    for (int i = 0; i < static_cast<int>(n); ++i) v.push_back(n == 1 ? a : a + (b - a) * i / (n - 1));
    return v;
  };
  const auto axes = split(spec, ',');
  if (axes.empty() || axes.size() > 2) throw std::invalid_argument("bad grid '" + spec + "'");
  const std::vector<double> xs = axis(axes[0]);
  const std::vector<double> ys = axes.size() == 2 ? axis(axes[1]) : std::vector<double>{0.0};
  for (double y : ys) {
    for (double x : xs) points.emplace_back(x, y);
  }
  return points;
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app("Period functions of Maass cusp forms", "maass");
  app.require_subcommand(1);
  std::string config_path, out_path;
  std::optional<std::uint64_t> seed;
  std::optional<double> tol;
  app.add_option("--config", config_path, "JSON config (tolerances, truncations, cusp height, grids)");
  app.add_option("--seed", seed, "seed for randomized suites");
  app.add_option("--out", out_path, "write the report to this path instead of stdout");
  app.add_option("--tol", tol, "relative tolerance of every quadrature")->check(CLI::PositiveNumber);

  auto* verify = app.add_subcommand("verify", "run identity suites, JSON report");
  std::string suite = "all";
  std::optional<std::string> verify_weight;
  verify->add_option("--suite", suite)->check(CLI::IsMember([] {
    auto names = suite_names();
    names.push_back("all");
    return names;
  }()));
  verify->add_option("--weight", verify_weight, "single weight for the multiplier suite");

  auto* poly = app.add_subcommand("period-poly", "period polynomial samples and fit, CSV");
  std::string poly_form = "delta";
  std::optional<std::size_t> samples;
  poly->add_option("--form", poly_form)->check(CLI::IsMember({"delta"}));
  poly->add_option("--samples", samples, "number of Chebyshev nodes in [-1, 1], at least 11");

  auto* pf = app.add_subcommand("period-function", "P on a grid, CSV");
  FormFlags flags;
  std::optional<std::string> grid, form_path;
  pf->add_option("--weight", flags.weight);
  pf->add_option("--nu", flags.nu);
  pf->add_option("--multiplier", flags.multiplier);
  pf->add_option("--grid", grid, "list:z1,z2,... or x0:x1:nx[,y0:y1:ny]");
  pf->add_option("--form", form_path, "JSON form definition");

  auto* table = app.add_subcommand("table", "growth report, JSON");
  std::string what;
  table->add_option("--what", what)->required()->check(CLI::IsMember({"growth"}));

  std::vector<const char*> argv = {"maass"};
  for (const std::string& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? 0 : 2;
  }

  try {
    Settings s;
    if (!config_path.empty()) load_config(config_path, s);
    if (seed) s.verify.seed = *seed;
    if (tol) s.verify.quad_rel_tol = *tol;
    if (samples) s.samples = *samples;
    if (grid) s.grid = *grid;
    Output sink(out_path, out);
    std::ostream& os = sink.stream();
    os << std::setprecision(17);

    if (*verify) {
      if (verify_weight) s.verify.multiplier_weight = parse_weight(*verify_weight);
      const VerificationReport r = run_suite(suite, s.verify);
      os << report_json(r).dump(2) << "\n";
      return r.pass() ? 0 : 1;
    }

    if (*poly) {
      if (s.samples < 11) throw UsageError("--samples must be at least 11 for a degree-10 fit");
      const HolomorphicCuspForm uh = delta_cusp_form(s.verify.delta_terms);
      std::vector<double> x;
      std::vector<cplx> y;
      os << "zeta_re,zeta_im,p_re,p_im\n";
      for (std::size_t i = 0; i < s.samples; ++i) {
        x.push_back(std::cos(kPi * (i + 0.5) / static_cast<double>(s.samples)));
        y.push_back(eichler_polynomial(uh, x.back(), s.verify.quadrature()).value);
        os << x.back() << ",0," << y.back().real() << "," << y.back().imag() << "\n";
      }
      const PolyFit fit = fit_degree_10(x, y);
      os << "# degree-10 fit p(zeta) = sum_n c_n zeta^n; largest dropped Chebyshev coefficient "
         << fit.dropped << "\n";
      os << "n,c_re,c_im\n";
      for (std::size_t n = 0; n < fit.monomial.size(); ++n) {
        os << n << "," << fit.monomial[n].real() << "," << fit.monomial[n].imag() << "\n";
      }
      return 0;
    }

    if (*pf) {
      MaassForm u = [&] {
        if (form_path) return load_form(*form_path, flags, s);
        if (!flags.weight || !flags.nu) throw UsageError("period-function needs --weight and --nu or --form");
        const double k = parse_weight(*flags.weight);
        const cplx nu = parse_complex(*flags.nu);
        const auto kind = parse_multiplier_kind(flags.multiplier.value_or("eta-power"));
        if (k == 12.0 && nu.imag() == 0.0 && std::abs(nu.real()) == 5.5) {
          return delta_embedding(nu, s.verify.delta_terms);
        }
        std::vector<cplx> c;
        for (std::size_t n = 1; n <= s.verify.surrogate_terms; ++n) c.push_back(1.0 / static_cast<double>(n));
        return MaassForm::whittaker_surrogate(k, make_multiplier(kind, k), nu, c, c);
      }();
      const PeriodFunction P(u, s.verify.quadrature());
      const std::vector<cplx> points = parse_grid(s.grid);
      os << "zeta_re,zeta_im,P_re,P_im,abs_error_estimate\n";
      for (cplx z : points) {
        const PeriodEvaluation e = P(z);
        os << z.real() << "," << z.imag() << "," << e.value.real() << "," << e.value.imag() << ","
           << e.abs_error_estimate << "\n";
      }
      return 0;
    }

    if (*table) {
      const GrowthTable g = growth_table(s.verify);
      os << json{{"delta", growth_json(g.delta)}, {"surrogate", growth_json(g.surrogate)}}.dump(2)
         << "\n";
      const bool pass = g.delta.pass_infinity && g.delta.pass_zero && g.surrogate.pass_infinity &&
                        g.surrogate.pass_zero;
      return pass ? 0 : 1;
    }
  } catch (const UsageError& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::invalid_argument& e) {
    // bad weights, spectral values, grids and unsupported parameters
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const DomainError& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    // numerical failure while producing output
    err << "error: " << e.what() << "\n";
    return 1;
  }
  return 2;
}

}  // namespace maass::cli
