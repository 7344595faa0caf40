#pragma once

#include <string>

#include "maass/complex_branch.hpp"
#include "maass/modular_group.hpp"

namespace maass {

enum class MultiplierKind { trivial, eta_power };

/// Multiplier system of weight k, stored as its values on S and T. Values on
/// other elements come from folding the consistency relation
///   v(g h) e^{ik arg mu(gh,z)} = v(g) v(h) e^{ik arg mu(g,hz)} e^{ik arg mu(h,z)}
/// along a generator word at the base point z0 = 2i.
class MultiplierSystem {
 public:
  /// Constant system; k must be an even integer.
  static MultiplierSystem trivial(double k);
  /// System of eta^{2k}: v(T) = e^{pi i k/6}, v(S) = e^{-pi i k/2}. Needs 2k in Z.
  static MultiplierSystem eta_power(double k);

  double weight() const { return k_; }
  MultiplierKind kind() const { return kind_; }
  cplx v_T() const { return v_T_; }
  cplx v_S() const { return v_S_; }

  cplx evaluate(const GroupElement& g) const;
  /// Same fold, at an arbitrary base point in H.
  cplx evaluate_at(const GroupElement& g, cplx base) const;
  /// Fold an explicit word (used to check independence of the word).
  cplx evaluate_word(const GeneratorWord& w, cplx base) const;

  /// |v(gh) e^{ik arg mu(gh,z)} - v(g) v(h) e^{ik arg mu(g,hz)} e^{ik arg mu(h,z)}|
  double consistency_residual(const GroupElement& g, const GroupElement& h,
                              cplx z) const;

  std::string name() const;

 private:
  MultiplierSystem(double k, MultiplierKind kind, cplx vT, cplx vS)
      : k_(k), kind_(kind), v_T_(vT), v_S_(vS) {}

  double k_;
  MultiplierKind kind_;
  cplx v_T_, v_S_;
};

/// Parse "trivial" / "eta-power" (also "eta_power").
MultiplierKind parse_multiplier_kind(const std::string& s);
MultiplierSystem make_multiplier(MultiplierKind kind, double k);

/// Parse a weight like "12", "1/2", "-3/2", "0.5"; throws InvalidWeight if
/// the value is not a half-integer.
double parse_weight(const std::string& s);

}  // namespace maass
