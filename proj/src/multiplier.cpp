#include "maass/multiplier.hpp"

#include <cmath>

#include "maass/errors.hpp"

namespace maass {

namespace {

constexpr cplx kBase(0.0, 2.0);

bool is_half_integer(double k) {
  const double twice = 2.0 * k;
  return std::isfinite(k) && twice == std::round(twice);
}

cplx phase(double theta) { return std::polar(1.0, theta); }

}  // namespace

MultiplierSystem MultiplierSystem::trivial(double k) {
  if (!(std::fmod(k, 2.0) == 0.0)) {
    throw InvalidWeight("trivial multiplier needs an even integer weight");
  }
  return {k, MultiplierKind::trivial, 1.0, 1.0};
}

MultiplierSystem MultiplierSystem::eta_power(double k) {
  if (!is_half_integer(k)) {
    throw InvalidWeight("eta-power multiplier needs 2k to be an integer");
  }
  return {k, MultiplierKind::eta_power, phase(kPi * k / 6.0),
          phase(-kPi * k / 2.0)};
}

cplx MultiplierSystem::evaluate(const GroupElement& g) const {
  return evaluate_at(g, kBase);
}

cplx MultiplierSystem::evaluate_at(const GroupElement& g, cplx base) const {
  if (kind_ == MultiplierKind::trivial) return 1.0;
  return evaluate_word(decompose(g).word, base);
}

cplx MultiplierSystem::evaluate_word(const GeneratorWord& w, cplx base) const {
  // Fold from the right: suffix = L_j ... L_n.
  GroupElement suffix = GroupElement::identity();
  cplx v = 1.0;
  for (auto it = w.letters.rbegin(); it != w.letters.rend(); ++it) {
    GroupElement letter = GroupElement::S();
    cplx v_letter = v_S_;
    if (*it == Generator::T) {
      letter = GroupElement::T();
      v_letter = v_T_;
    } else if (*it == Generator::T_inverse) {
      letter = GroupElement::T_inverse();
      v_letter = 1.0 / v_T_;
    }
    const GroupElement prod = letter * suffix;
    const cplx hz = moebius(suffix, base);
    const double t = principal_arg(mu(letter, hz)) +
                     principal_arg(mu(suffix, base)) -
                     principal_arg(mu(prod, base));
    v = v_letter * v * phase(k_ * t);
    suffix = prod;
  }
  return v;
}

double MultiplierSystem::consistency_residual(const GroupElement& g,
                                              const GroupElement& h,
                                              cplx z) const {
  const GroupElement gh = g * h;
  const cplx lhs = evaluate(gh) * phase(k_ * principal_arg(mu(gh, z)));
  const cplx rhs = evaluate(g) * evaluate(h) *
                   phase(k_ * principal_arg(mu(g, moebius(h, z)))) *
                   phase(k_ * principal_arg(mu(h, z)));
  return std::abs(lhs - rhs);
}

std::string MultiplierSystem::name() const {
  return kind_ == MultiplierKind::trivial ? "trivial" : "eta-power";
}

MultiplierKind parse_multiplier_kind(const std::string& s) {
  if (s == "trivial") return MultiplierKind::trivial;
  if (s == "eta-power" || s == "eta_power") return MultiplierKind::eta_power;
  throw std::invalid_argument("unknown multiplier '" + s + "'");
}

MultiplierSystem make_multiplier(MultiplierKind kind, double k) {
  return kind == MultiplierKind::trivial ? MultiplierSystem::trivial(k)
                                         : MultiplierSystem::eta_power(k);
}

double parse_weight(const std::string& s) {
  double k = 0.0;
  try {
    const auto slash = s.find('/');
    std::size_t used = 0;
    if (slash == std::string::npos) {
      k = std::stod(s, &used);
      if (used != s.size()) throw std::invalid_argument(s);
    } else {
      const std::string num = s.substr(0, slash), den = s.substr(slash + 1);
      const double p = std::stod(num, &used);
      if (used != num.size()) throw std::invalid_argument(s);
      const double q = std::stod(den, &used);
      if (used != den.size() || q == 0.0) throw std::invalid_argument(s);
      k = p / q;
    }
  } catch (const std::logic_error&) {
    throw InvalidWeight("cannot parse weight '" + s + "'");
  }
  if (!is_half_integer(k)) throw InvalidWeight("weight " + s + " is not a half-integer");
  return k;
}

}  // namespace maass
