#include "maass/modular_group.hpp"

#include <cstdlib>
#include <sstream>

#include "maass/errors.hpp"

namespace maass {

cplx ExtendedComplex::value() const {
  if (infinite_) throw DomainError("value() of the point at infinity");
  return value_;
}

bool ExtendedComplex::operator==(const ExtendedComplex& other) const {
  if (infinite_ || other.infinite_) return infinite_ == other.infinite_;
  return value_ == other.value_;
}

GroupElement::GroupElement(std::int64_t a, std::int64_t b, std::int64_t c,
                           std::int64_t d)
    : a_(a), b_(b), c_(c), d_(d) {
  if (a * d - b * c != 1) {
    throw InvalidElement("determinant of " + to_string() + " is not 1");
  }
}

GroupElement GroupElement::operator*(const GroupElement& r) const {
  return {a_ * r.a_ + b_ * r.c_, a_ * r.b_ + b_ * r.d_,
          c_ * r.a_ + d_ * r.c_, c_ * r.b_ + d_ * r.d_};
}

GroupElement GroupElement::inverse() const { return {d_, -b_, -c_, a_}; }

GroupElement GroupElement::operator-() const { return {-a_, -b_, -c_, -d_}; }

bool GroupElement::has_nonnegative_entries() const {
  return a_ >= 0 && b_ >= 0 && c_ >= 0 && d_ >= 0;
}

std::int64_t GroupElement::max_abs_entry() const {
  std::int64_t m = 0;
  for (auto e : entries()) m = std::max<std::int64_t>(m, std::llabs(e));
  return m;
}

std::string GroupElement::to_string() const {
  std::ostringstream os;
  os << "[" << a_ << "," << b_ << "," << c_ << "," << d_ << "]";
  return os.str();
}

ExtendedComplex moebius(const GroupElement& g, const ExtendedComplex& z) {
  const double a = static_cast<double>(g.a());
  const double b = static_cast<double>(g.b());
  const double c = static_cast<double>(g.c());
  const double d = static_cast<double>(g.d());
  if (z.is_infinite()) {
    if (g.c() == 0) return ExtendedComplex::infinity();
    return ExtendedComplex(cplx(a / c, 0.0));
  }
  const cplx w = z.value();
  const cplx den = c * w + d;
  if (den == cplx(0.0, 0.0)) return ExtendedComplex::infinity();
  return ExtendedComplex((a * w + b) / den);
}

cplx moebius(const GroupElement& g, cplx z) {
  const ExtendedComplex r = moebius(g, ExtendedComplex(z));
  if (r.is_infinite()) throw DomainError("moebius image is infinite");
  return r.value();
}

cplx mu(const GroupElement& g, cplx z) {
  return static_cast<double>(g.c()) * z + static_cast<double>(g.d());
}

namespace {

std::int64_t floor_div(std::int64_t a, std::int64_t c) {
  std::int64_t q = a / c;
  if ((a % c != 0) && ((a < 0) != (c < 0))) --q;
  return q;
}

void append_power_of_T(std::vector<Generator>& out, std::int64_t n) {
  const Generator g = n >= 0 ? Generator::T : Generator::T_inverse;
  for (std::int64_t i = 0; i < std::llabs(n); ++i) out.push_back(g);
}

}  // namespace

GroupElement GeneratorWord::product() const {
  GroupElement m = GroupElement::identity();
  for (Generator g : letters) {
    switch (g) {
      case Generator::S: m = m * GroupElement::S(); break;
      case Generator::T: m = m * GroupElement::T(); break;
      case Generator::T_inverse: m = m * GroupElement::T_inverse(); break;
    }
  }
  return m;
}

std::size_t GeneratorWord::syllable_count() const {
  std::size_t n = 0;
  for (std::size_t i = 0; i < letters.size(); ++i) {
    if (i == 0 || letters[i] != letters[i - 1]) ++n;
  }
  return n;
}

std::string GeneratorWord::to_string() const {
  std::string s = "[";
  for (std::size_t i = 0; i < letters.size(); ++i) {
    if (i) s += ",";
    switch (letters[i]) {
      case Generator::S: s += "S"; break;
      case Generator::T: s += "T"; break;
      case Generator::T_inverse: s += "T^-1"; break;
    }
  }
  return s + "]";
}

Decomposition decompose(const GroupElement& g) {
  // Left-multiply by S T^{-q} until the lower-left entry vanishes:
  //   g = T^{q1} S^{-1} T^{q2} S^{-1} ... (+-T^m),  S^{-1} = -S.
  std::vector<Generator> letters;
  int sign = 1;
  std::int64_t a = g.a(), b = g.b(), c = g.c(), d = g.d();
  while (c != 0) {
    const std::int64_t q = floor_div(a, c);
    append_power_of_T(letters, q);
    letters.push_back(Generator::S);
    sign = -sign;
    const std::int64_t na = -c, nb = -d;
    const std::int64_t nc = a - q * c, nd = b - q * d;
    a = na; b = nb; c = nc; d = nd;
  }
  // Remaining matrix is +-[[1, m], [0, 1]].
  if (a == -1) {
    sign = -sign;
    b = -b;
  }
  append_power_of_T(letters, b);
  Decomposition out;
  if (sign < 0) letters.insert(letters.begin(), {Generator::S, Generator::S});
  out.word.letters = std::move(letters);
  out.sign = 1;
  return out;
}

}  // namespace maass
