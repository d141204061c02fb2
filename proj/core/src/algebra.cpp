#include "slicecalc/algebra.hpp"

#include <array>
#include <bit>
#include <sstream>

#include "slicecalc/errors.hpp"
#include "slicecalc/random.hpp"

namespace slicecalc {

namespace {

void require_same(const Signature& a, const Signature& b) {
  if (!(a == b)) {
    throw SignatureMismatch("signature mismatch: " + a.name() + " vs " + b.name());
  }
}

struct QuaternionEntry {
  int sign;
  std::size_t index;
};

// Hamilton table over (1, i, j, k): row * column.
constexpr std::array<std::array<QuaternionEntry, 4>, 4> kQuaternionTable{{
    {{{1, 0}, {1, 1}, {1, 2}, {1, 3}}},
    {{{1, 1}, {-1, 0}, {1, 3}, {-1, 2}}},
    {{{1, 2}, {-1, 3}, {-1, 0}, {1, 1}}},
    {{{1, 3}, {1, 2}, {-1, 1}, {-1, 0}}},
}};

}  // namespace

Signature Signature::clifford(unsigned m) {
  if (m < 2) throw std::invalid_argument("Clifford signature requires m >= 2");
  if (m > 16) throw std::invalid_argument("Clifford signature supports m <= 16");
  return Signature(AlgebraKind::Clifford, m);
}

std::size_t Signature::coordinate_basis(std::size_t h) const {
  if (h >= coordinate_count()) throw std::out_of_range("coordinate index out of range");
  if (h == 0) return 0;
  return is_quaternion() ? h : (std::size_t{1} << (h - 1));
}

bool Signature::is_paravector_index(std::size_t index) const {
  if (is_quaternion()) return index < 4;
  return index == 0 || std::has_single_bit(index);
}

std::string Signature::basis_name(std::size_t index) const {
  if (is_quaternion()) {
    static constexpr std::array<const char*, 4> names{"1", "i", "j", "k"};
    return names.at(index);
  }
  if (index == 0) return "1";
  std::string out;
  for (unsigned j = 0; j < m_; ++j) {
    if (index & (std::size_t{1} << j)) out += "e" + std::to_string(j + 1);
  }
  return out;
}

std::string Signature::name() const {
  return is_quaternion() ? "quaternion" : "clifford(" + std::to_string(m_) + ")";
}

AlgebraElement::AlgebraElement(Signature sig) : sig_(sig), coeffs_(sig.dimension()) {}

AlgebraElement::AlgebraElement(Signature sig, std::vector<Rational> coeffs)
    : sig_(sig), coeffs_(std::move(coeffs)) {
  if (coeffs_.size() != sig_.dimension()) {
    throw ArityMismatch("coefficient count does not match " + sig_.name());
  }
}

AlgebraElement AlgebraElement::scalar(Signature sig, const Rational& r) {
  AlgebraElement e(sig);
  e.coeffs_[0] = r;
  return e;
}

AlgebraElement AlgebraElement::basis(Signature sig, std::size_t index, const Rational& r) {
  AlgebraElement e(sig);
  e.coeffs_.at(index) = r;
  return e;
}

AlgebraElement AlgebraElement::from_coordinates(Signature sig, std::span<const Rational> coords) {
  if (coords.size() != sig.coordinate_count()) {
    throw ArityMismatch("expected " + std::to_string(sig.coordinate_count()) + " coordinates");
  }
  AlgebraElement e(sig);
  for (std::size_t h = 0; h < coords.size(); ++h) e.coeffs_[sig.coordinate_basis(h)] = coords[h];
  return e;
}

bool AlgebraElement::is_zero() const {
  for (const auto& c : coeffs_) {
    if (sgn(c) != 0) return false;
  }
  return true;
}

bool AlgebraElement::is_real() const {
  for (std::size_t k = 1; k < coeffs_.size(); ++k) {
    if (sgn(coeffs_[k]) != 0) return false;
  }
  return true;
}

bool AlgebraElement::is_paravector() const {
  for (std::size_t k = 0; k < coeffs_.size(); ++k) {
    if (sgn(coeffs_[k]) != 0 && !sig_.is_paravector_index(k)) return false;
  }
  return true;
}

std::vector<Rational> AlgebraElement::coordinates() const {
  if (!is_paravector()) throw NonParavector("element " + to_string() + " is not a paravector");
  std::vector<Rational> out(sig_.coordinate_count());
  for (std::size_t h = 0; h < out.size(); ++h) out[h] = coeffs_[sig_.coordinate_basis(h)];
  return out;
}

AlgebraElement& AlgebraElement::operator+=(const AlgebraElement& other) {
  require_same(sig_, other.sig_);
  for (std::size_t k = 0; k < coeffs_.size(); ++k) {
    if (sgn(other.coeffs_[k]) != 0) coeffs_[k] += other.coeffs_[k];
  }
  return *this;
}

AlgebraElement& AlgebraElement::operator-=(const AlgebraElement& other) {
  require_same(sig_, other.sig_);
  for (std::size_t k = 0; k < coeffs_.size(); ++k) {
    if (sgn(other.coeffs_[k]) != 0) coeffs_[k] -= other.coeffs_[k];
  }
  return *this;
}

AlgebraElement& AlgebraElement::operator*=(const Rational& r) {
  for (auto& c : coeffs_) {
    if (sgn(c) != 0) c *= r;
  }
  return *this;
}

AlgebraElement AlgebraElement::operator-() const {
  AlgebraElement out(*this);
  for (auto& c : out.coeffs_) c = -c;
  return out;
}

bool operator==(const AlgebraElement& a, const AlgebraElement& b) {
  return a.sig_ == b.sig_ && a.coeffs_ == b.coeffs_;
}

std::string AlgebraElement::to_string() const {
  std::ostringstream out;
  bool first = true;
  for (std::size_t k = 0; k < coeffs_.size(); ++k) {
    const Rational& c = coeffs_[k];
    if (sgn(c) == 0) continue;
    Rational mag = abs(c);
    if (first) {
      if (sgn(c) < 0) out << "-";
    } else {
      out << (sgn(c) < 0 ? " - " : " + ");
    }
    first = false;
    if (k == 0) {
      out << to_display_string(mag);
    } else if (mag == 1) {
      out << sig_.basis_name(k);
    } else {
      out << to_display_string(mag) << "*" << sig_.basis_name(k);
    }
  }
  return first ? "0" : out.str();
}

int blade_sign(std::uint32_t a, std::uint32_t b) {
  // Moving each generator of b leftwards past the higher generators of a.
  int swaps = 0;
  for (std::uint32_t rest = b; rest != 0; rest &= rest - 1) {
    const unsigned j = static_cast<unsigned>(std::countr_zero(rest));
    swaps += std::popcount(a >> (j + 1));
  }
  // Each shared generator contracts with e_j^2 = -1.
  swaps += std::popcount(a & b);
  return (swaps & 1) ? -1 : 1;
}

void quaternion_product(std::span<const Rational> a, std::span<const Rational> b,
                        std::span<Rational> out) {
  out[0] = a[0] * b[0] - a[1] * b[1] - a[2] * b[2] - a[3] * b[3];
  out[1] = a[0] * b[1] + a[1] * b[0] + a[2] * b[3] - a[3] * b[2];
  out[2] = a[0] * b[2] - a[1] * b[3] + a[2] * b[0] + a[3] * b[1];
  out[3] = a[0] * b[3] + a[1] * b[2] - a[2] * b[1] + a[3] * b[0];
}

void blade_product(unsigned m, std::span<const Rational> a, std::span<const Rational> b,
                   std::span<Rational> out) {
  const std::size_t dim = std::size_t{1} << m;
  for (std::size_t k = 0; k < dim; ++k) out[k] = 0;
  Rational t;
  for (std::uint32_t x = 0; x < dim; ++x) {
    if (sgn(a[x]) == 0) continue;
    for (std::uint32_t y = 0; y < dim; ++y) {
      if (sgn(b[y]) == 0) continue;
      mpq_mul(t.get_mpq_t(), a[x].get_mpq_t(), b[y].get_mpq_t());
      if (blade_sign(x, y) > 0) {
        out[x ^ y] += t;
      } else {
        out[x ^ y] -= t;
      }
    }
  }
}

void mul_add(const AlgebraElement& a, const AlgebraElement& b, AlgebraElement& out) {
  require_same(a.signature(), b.signature());
  require_same(a.signature(), out.signature());
  const std::size_t dim = a.dimension();
  const bool quat = a.signature().is_quaternion();
  Rational t;
  for (std::size_t x = 0; x < dim; ++x) {
    if (sgn(a[x]) == 0) continue;
    for (std::size_t y = 0; y < dim; ++y) {
      if (sgn(b[y]) == 0) continue;
      mpq_mul(t.get_mpq_t(), a[x].get_mpq_t(), b[y].get_mpq_t());
      int s;
      std::size_t idx;
      if (quat) {
        s = kQuaternionTable[x][y].sign;
        idx = kQuaternionTable[x][y].index;
      } else {
        s = blade_sign(static_cast<std::uint32_t>(x), static_cast<std::uint32_t>(y));
        idx = x ^ y;
      }
      if (s > 0) {
        out[idx] += t;
      } else {
        out[idx] -= t;
      }
    }
  }
}

AlgebraElement mul(const AlgebraElement& a, const AlgebraElement& b) {
  AlgebraElement out(a.signature());
  mul_add(a, b, out);
  return out;
}

std::vector<double> float_mul(const Signature& sig, std::span<const double> a,
                              std::span<const double> b) {
  const std::size_t dim = sig.dimension();
  std::vector<double> out(dim, 0.0);
  for (std::size_t x = 0; x < dim; ++x) {
    for (std::size_t y = 0; y < dim; ++y) {
      if (sig.is_quaternion()) {
        const auto& e = kQuaternionTable[x][y];
        out[e.index] += e.sign * a[x] * b[y];
      } else {
        out[x ^ y] += blade_sign(static_cast<std::uint32_t>(x), static_cast<std::uint32_t>(y)) *
                      a[x] * b[y];
      }
    }
  }
  return out;
}

AlgebraElement conj(const AlgebraElement& a) {
  if (!a.is_paravector()) throw NonParavector("conj: " + a.to_string() + " is not a paravector");
  AlgebraElement out(a);
  for (std::size_t k = 1; k < out.dimension(); ++k) out[k] = -out[k];
  return out;
}

Rational re(const AlgebraElement& a) {
  if (!a.is_paravector()) throw NonParavector("re: " + a.to_string() + " is not a paravector");
  return a[0];
}

AlgebraElement im(const AlgebraElement& a) {
  if (!a.is_paravector()) throw NonParavector("im: " + a.to_string() + " is not a paravector");
  AlgebraElement out(a);
  out[0] = 0;
  return out;
}

Rational norm_sq(const AlgebraElement& a) {
  if (!a.is_paravector()) {
    throw NonParavector("norm_sq: " + a.to_string() + " is not a paravector");
  }
  Rational s;
  for (const auto& c : a.coefficients()) s += c * c;
  return s;
}

ImaginaryUnit ImaginaryUnit::make(const AlgebraElement& value) {
  if (!value.is_paravector() || sgn(value[0]) != 0) {
    throw InvalidImaginaryUnit("imaginary unit must be a purely imaginary paravector: " +
                               value.to_string());
  }
  if (norm_sq(value) != 1) {
    throw InvalidImaginaryUnit("imaginary unit must have unit norm: " + value.to_string());
  }
  return ImaginaryUnit(value);
}

ImaginaryUnit ImaginaryUnit::from_components(const Signature& sig, std::span<const Rational> imag) {
  if (imag.size() != sig.imaginary_count()) {
    throw ArityMismatch("expected " + std::to_string(sig.imaginary_count()) +
                        " imaginary components");
  }
  AlgebraElement e(sig);
  for (std::size_t h = 0; h < imag.size(); ++h) e[sig.coordinate_basis(h + 1)] = imag[h];
  return make(e);
}

ImaginaryUnit ImaginaryUnit::canonical(const Signature& sig, std::size_t h) {
  if (h < 1 || h > sig.imaginary_count()) throw std::out_of_range("canonical unit index");
  return ImaginaryUnit(AlgebraElement::basis(sig, sig.coordinate_basis(h)));
}

std::vector<Rational> ImaginaryUnit::components() const {
  const auto coords = value_.coordinates();
  return {coords.begin() + 1, coords.end()};
}

ImaginaryUnit unit_from_chart(const Signature& sig, std::span<const Rational> params) {
  const std::size_t n = sig.imaginary_count();
  if (params.size() + 1 != n) {
    throw ArityMismatch("chart expects " + std::to_string(n - 1) + " parameters");
  }
  Rational t2;
  for (const auto& t : params) t2 += t * t;
  const Rational denom = 1 + t2;
  std::vector<Rational> comps(n);
  comps[0] = (1 - t2) / denom;
  for (std::size_t h = 1; h < n; ++h) comps[h] = 2 * params[h - 1] / denom;
  return ImaginaryUnit::from_components(sig, comps);
}

std::vector<ImaginaryUnit> sample_units(const Signature& sig, std::uint64_t seed,
                                        std::size_t count) {
  std::vector<ImaginaryUnit> out;
  out.reserve(count);
  for (std::size_t h = 1; h <= sig.imaginary_count() && out.size() < count; ++h) {
    out.push_back(ImaginaryUnit::canonical(sig, h));
  }
  Rng rng(Rng::derive(seed, 0x756e697473ULL));
  std::vector<Rational> params(sig.imaginary_count() - 1);
  std::size_t attempts = 0;
  while (out.size() < count) {
    // Widen the parameter range as small fractions run out.
    const auto bound = static_cast<std::int64_t>(4 + attempts++ / 64);
    for (auto& p : params) p = rng.small_rational(bound, bound);
    auto unit = unit_from_chart(sig, params);
    if (rng.coin()) unit = unit.negated();
    bool duplicate = false;
    for (const auto& u : out) duplicate = duplicate || u == unit;
    if (!duplicate) out.push_back(std::move(unit));
  }
  return out;
}

}  // namespace slicecalc
