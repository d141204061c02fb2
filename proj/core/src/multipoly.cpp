#include "slicecalc/multipoly.hpp"

#include <algorithm>
#include <sstream>

#include "slicecalc/errors.hpp"

namespace slicecalc {

unsigned total_degree(const Exponents& e) {
  unsigned d = 0;
  for (auto x : e) d += x;
  return d;
}

namespace {

Exponents add_exponents(const Exponents& a, const Exponents& b) {
  Exponents out{};
  for (std::size_t h = 0; h < kMaxVariables; ++h) {
    const unsigned s = unsigned{a[h]} + unsigned{b[h]};
    if (s > 255) throw std::overflow_error("polynomial exponent exceeds 255");
    out[h] = static_cast<std::uint8_t>(s);
  }
  return out;
}

bool divides(const Exponents& a, const Exponents& b) {
  for (std::size_t h = 0; h < kMaxVariables; ++h) {
    if (a[h] > b[h]) return false;
  }
  return true;
}

Exponents subtract_exponents(const Exponents& b, const Exponents& a) {
  Exponents out{};
  for (std::size_t h = 0; h < kMaxVariables; ++h) out[h] = static_cast<std::uint8_t>(b[h] - a[h]);
  return out;
}

void accumulate(CoordPoly::TermMap& terms, const Exponents& e, const AlgebraElement& c) {
  auto [it, inserted] = terms.try_emplace(e, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms.erase(it);
  }
}

}  // namespace

CoordPoly::CoordPoly(Signature sig, std::size_t var_count) : sig_(sig), vars_(var_count) {
  if (var_count > kMaxVariables) throw ArityMismatch("too many polynomial variables");
}

CoordPoly CoordPoly::constant(Signature sig, std::size_t var_count, const AlgebraElement& c) {
  CoordPoly p(sig, var_count);
  p.add_term(Exponents{}, c);
  return p;
}

CoordPoly CoordPoly::scalar(Signature sig, std::size_t var_count, const Rational& r) {
  return constant(sig, var_count, AlgebraElement::scalar(sig, r));
}

CoordPoly CoordPoly::variable(Signature sig, std::size_t var_count, std::size_t h) {
  if (h >= var_count) throw ArityMismatch("variable index out of range");
  Exponents e{};
  e[h] = 1;
  return monomial(sig, var_count, e, AlgebraElement::scalar(sig, 1));
}

CoordPoly CoordPoly::monomial(Signature sig, std::size_t var_count, const Exponents& e,
                              const AlgebraElement& c) {
  CoordPoly p(sig, var_count);
  p.add_term(e, c);
  return p;
}

void CoordPoly::check_compatible(const CoordPoly& other) const {
  if (!(sig_ == other.sig_)) {
    throw SignatureMismatch("polynomial signatures differ: " + sig_.name() + " vs " +
                            other.sig_.name());
  }
  if (vars_ != other.vars_) throw ArityMismatch("polynomial variable counts differ");
}

bool CoordPoly::is_real() const {
  return std::all_of(terms_.begin(), terms_.end(),
                     [](const auto& t) { return t.second.is_real(); });
}

bool CoordPoly::is_constant() const {
  return terms_.empty() || (terms_.size() == 1 && total_degree(terms_.begin()->first) == 0);
}

unsigned CoordPoly::degree() const {
  unsigned d = 0;
  for (const auto& [e, c] : terms_) d = std::max(d, total_degree(e));
  return d;
}

unsigned CoordPoly::degree_in(std::size_t h) const {
  unsigned d = 0;
  for (const auto& [e, c] : terms_) d = std::max(d, unsigned{e[h]});
  return d;
}

const AlgebraElement& CoordPoly::leading_coefficient() const {
  if (terms_.empty()) throw PreconditionFailed("leading coefficient of zero polynomial");
  return terms_.rbegin()->second;
}

AlgebraElement CoordPoly::coefficient(const Exponents& e) const {
  auto it = terms_.find(e);
  return it == terms_.end() ? AlgebraElement(sig_) : it->second;
}

void CoordPoly::add_term(const Exponents& e, const AlgebraElement& c) {
  if (!(c.signature() == sig_)) throw SignatureMismatch("term signature differs from polynomial");
  for (std::size_t h = vars_; h < kMaxVariables; ++h) {
    if (e[h] != 0) throw ArityMismatch("exponent uses a variable beyond the variable count");
  }
  if (c.is_zero()) return;
  accumulate(terms_, e, c);
}

CoordPoly& CoordPoly::operator+=(const CoordPoly& other) {
  check_compatible(other);
  for (const auto& [e, c] : other.terms_) accumulate(terms_, e, c);
  return *this;
}

CoordPoly& CoordPoly::operator-=(const CoordPoly& other) {
  check_compatible(other);
  for (const auto& [e, c] : other.terms_) accumulate(terms_, e, -c);
  return *this;
}

CoordPoly& CoordPoly::operator*=(const Rational& r) {
  if (sgn(r) == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [e, c] : terms_) c *= r;
  return *this;
}

CoordPoly CoordPoly::operator-() const {
  CoordPoly out(*this);
  for (auto& [e, c] : out.terms_) c = -c;
  return out;
}

CoordPoly operator*(const CoordPoly& a, const CoordPoly& b) {
  a.check_compatible(b);
  CoordPoly out(a.sig_, a.vars_);
  AlgebraElement prod(a.sig_);
  for (const auto& [ea, ca] : a.terms_) {
    for (const auto& [eb, cb] : b.terms_) {
      const Exponents e = add_exponents(ea, eb);
      auto [it, inserted] = out.terms_.try_emplace(e, a.sig_);
      mul_add(ca, cb, it->second);
    }
  }
  std::erase_if(out.terms_, [](const auto& t) { return t.second.is_zero(); });
  return out;
}

bool operator==(const CoordPoly& a, const CoordPoly& b) {
  return a.sig_ == b.sig_ && a.vars_ == b.vars_ && a.terms_ == b.terms_;
}

CoordPoly CoordPoly::left_mul(const AlgebraElement& c) const {
  CoordPoly out(sig_, vars_);
  for (const auto& [e, coeff] : terms_) out.add_term(e, mul(c, coeff));
  return out;
}

CoordPoly CoordPoly::right_mul(const AlgebraElement& c) const {
  CoordPoly out(sig_, vars_);
  for (const auto& [e, coeff] : terms_) out.add_term(e, mul(coeff, c));
  return out;
}

CoordPoly CoordPoly::pow(unsigned k) const {
  CoordPoly result = scalar(sig_, vars_, 1);
  CoordPoly base = *this;
  while (k > 0) {
    if (k & 1U) result = result * base;
    k >>= 1U;
    if (k > 0) base = base * base;
  }
  return result;
}

CoordPoly CoordPoly::partial(std::size_t h) const {
  if (h >= vars_) throw ArityMismatch("partial: variable index out of range");
  CoordPoly out(sig_, vars_);
  for (const auto& [e, c] : terms_) {
    if (e[h] == 0) continue;
    Exponents d = e;
    d[h] = static_cast<std::uint8_t>(d[h] - 1);
    out.add_term(d, c * Rational(e[h]));
  }
  return out;
}

AlgebraElement CoordPoly::eval(std::span<const Rational> point) const {
  if (point.size() != vars_) throw ArityMismatch("eval: point has wrong dimension");
  std::vector<std::vector<Rational>> powers(vars_);
  for (std::size_t h = 0; h < vars_; ++h) {
    const unsigned d = degree_in(h);
    auto& row = powers[h];
    row.resize(d + 1);
    row[0] = 1;
    for (unsigned k = 1; k <= d; ++k) row[k] = row[k - 1] * point[h];
  }
  AlgebraElement out(sig_);
  Rational mono;
  Rational t;
  for (const auto& [e, c] : terms_) {
    mono = 1;
    for (std::size_t h = 0; h < vars_; ++h) {
      if (e[h] != 0) mono *= powers[h][e[h]];
    }
    if (sgn(mono) == 0) continue;
    for (std::size_t k = 0; k < c.dimension(); ++k) {
      if (sgn(c[k]) == 0) continue;
      mpq_mul(t.get_mpq_t(), mono.get_mpq_t(), c[k].get_mpq_t());
      out[k] += t;
    }
  }
  return out;
}

std::vector<double> CoordPoly::eval_float(std::span<const double> point) const {
  if (point.size() != vars_) throw ArityMismatch("eval_float: point has wrong dimension");
  std::vector<double> out(sig_.dimension(), 0.0);
  for (const auto& [e, c] : terms_) {
    double mono = 1.0;
    for (std::size_t h = 0; h < vars_; ++h) {
      for (unsigned k = 0; k < e[h]; ++k) mono *= point[h];
    }
    for (std::size_t k = 0; k < c.dimension(); ++k) {
      if (sgn(c[k]) != 0) out[k] += mono * c[k].get_d();
    }
  }
  return out;
}

CoordPoly CoordPoly::substitute(std::span<const CoordPoly> images) const {
  if (images.size() != vars_) throw ArityMismatch("substitute: one image per variable required");
  if (images.empty()) return *this;
  const std::size_t new_vars = images[0].var_count();
  for (const auto& img : images) {
    if (img.var_count() != new_vars) throw ArityMismatch("substitute: images disagree on arity");
    if (!(img.signature() == sig_)) throw SignatureMismatch("substitute: image signature");
    if (!img.is_real()) throw PreconditionFailed("substitute: images must be real polynomials");
  }
  // Cache of image powers, filled lazily.
  std::vector<std::vector<CoordPoly>> powers(vars_);
  auto power = [&](std::size_t h, unsigned k) -> const CoordPoly& {
    auto& row = powers[h];
    if (row.empty()) row.push_back(scalar(sig_, new_vars, 1));
    while (row.size() <= k) row.push_back(row.back() * images[h]);
    return row[k];
  };
  CoordPoly out(sig_, new_vars);
  for (const auto& [e, c] : terms_) {
    CoordPoly term = constant(sig_, new_vars, c);
    for (std::size_t h = 0; h < vars_; ++h) {
      if (e[h] != 0) term = power(h, e[h]) * term;
      if (term.is_zero()) break;
    }
    out += term;
  }
  return out;
}

std::optional<CoordPoly> CoordPoly::divide_exact(const CoordPoly& divisor) const {
  check_compatible(divisor);
  if (divisor.is_zero()) throw PreconditionFailed("division by the zero polynomial");
  if (!divisor.is_real()) throw PreconditionFailed("divide_exact: divisor must be real");
  // Single-divisor reduction: the remainder is zero exactly when divisor | *this.
  const auto& [lead_e, lead_c] = *divisor.terms_.rbegin();
  const Rational inv_lead = 1 / lead_c[0];
  CoordPoly remainder = *this;
  CoordPoly quotient(sig_, vars_);
  while (!remainder.is_zero()) {
    const auto& [re, rc] = *remainder.terms_.rbegin();
    if (!divides(lead_e, re)) return std::nullopt;
    const Exponents qe = subtract_exponents(re, lead_e);
    const AlgebraElement qc = rc * inv_lead;
    quotient.add_term(qe, qc);
    for (const auto& [de, dc] : divisor.terms_) {
      accumulate(remainder.terms_, add_exponents(qe, de), -(qc * dc[0]));
    }
  }
  return quotient;
}

std::string CoordPoly::to_string(std::span<const std::string> names) const {
  if (terms_.empty()) return "0";
  std::ostringstream out;
  bool first = true;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    const auto& [e, c] = *it;
    const bool bare = total_degree(e) == 0;
    std::string coeff = c.to_string();
    const bool single = std::count(coeff.begin(), coeff.end(), ' ') == 0;
    if (single && coeff.front() == '-') {
      out << (first ? "-" : " - ");
      coeff.erase(0, 1);
    } else if (!first) {
      out << " + ";
    }
    first = false;
    if (!bare && coeff == "1") {
      // monomial only
    } else if (single || bare) {
      out << coeff;
    } else {
      out << "(" << coeff << ")";
    }
    bool need_sep = !(coeff == "1" && !bare);
    for (std::size_t h = 0; h < vars_; ++h) {
      if (e[h] == 0) continue;
      if (need_sep) out << "*";
      need_sep = true;
      out << (h < names.size() ? names[h] : "x" + std::to_string(h));
      if (e[h] > 1) out << "^" << unsigned{e[h]};
    }
  }
  return out.str();
}

// ---------------------------------------------------------------------------

namespace {

CoordPoly expand(const std::vector<DenominatorFactor>& factors, const Signature& sig,
                 std::size_t vars) {
  CoordPoly out = CoordPoly::scalar(sig, vars, 1);
  for (const auto& f : factors) out = out * f.base.pow(f.exponent);
  return out;
}

auto find_base(std::vector<DenominatorFactor>& factors, const CoordPoly& base) {
  return std::find_if(factors.begin(), factors.end(),
                      [&](const DenominatorFactor& f) { return f.base == base; });
}

}  // namespace

RationalFn::RationalFn(CoordPoly numerator) : num_(std::move(numerator)) {}

RationalFn::RationalFn(CoordPoly numerator, const CoordPoly& denominator)
    : num_(std::move(numerator)) {
  if (denominator.is_zero()) throw PreconditionFailed("RationalFn: zero denominator");
  if (!denominator.is_real()) throw PreconditionFailed("RationalFn: denominator must be real");
  if (!(denominator.signature() == num_.signature()) ||
      denominator.var_count() != num_.var_count()) {
    throw ArityMismatch("RationalFn: numerator and denominator disagree");
  }
  den_.push_back({denominator, 1});
  normalize();
}

RationalFn::RationalFn(CoordPoly numerator, std::vector<DenominatorFactor> factors)
    : num_(std::move(numerator)), den_(std::move(factors)) {
  normalize();
}

void RationalFn::normalize() {
  std::vector<DenominatorFactor> merged;
  for (auto& f : den_) {
    if (f.exponent == 0) continue;
    if (f.base.is_zero()) throw DenominatorIdenticallyZero("denominator factor is zero");
    const Rational lead = f.base.leading_coefficient()[0];
    if (f.base.is_constant()) {
      Rational scale = 1;
      for (unsigned k = 0; k < f.exponent; ++k) scale /= lead;
      num_ *= scale;
      continue;
    }
    if (lead != 1) {
      Rational scale = 1;
      for (unsigned k = 0; k < f.exponent; ++k) scale /= lead;
      num_ *= scale;
      f.base *= 1 / lead;
    }
    auto it = find_base(merged, f.base);
    if (it == merged.end()) {
      merged.push_back(std::move(f));
    } else {
      it->exponent += f.exponent;
    }
  }
  den_ = std::move(merged);
  if (num_.is_zero()) {
    den_.clear();
    return;
  }
  for (auto& f : den_) {
    while (f.exponent > 0) {
      auto q = num_.divide_exact(f.base);
      if (!q) break;
      num_ = std::move(*q);
      --f.exponent;
    }
  }
  std::erase_if(den_, [](const DenominatorFactor& f) { return f.exponent == 0; });
}

CoordPoly RationalFn::denominator() const {
  return expand(den_, num_.signature(), num_.var_count());
}

std::vector<DenominatorFactor> common_denominator(const std::vector<DenominatorFactor>& a,
                                                  const std::vector<DenominatorFactor>& b) {
  std::vector<DenominatorFactor> out = a;
  for (const auto& f : b) {
    auto it = find_base(out, f.base);
    if (it == out.end()) {
      out.push_back(f);
    } else {
      it->exponent = std::max(it->exponent, f.exponent);
    }
  }
  return out;
}

CoordPoly numerator_over(const RationalFn& f, const std::vector<DenominatorFactor>& common) {
  CoordPoly out = f.numerator();
  for (const auto& c : common) {
    unsigned have = 0;
    for (const auto& g : f.factors()) {
      if (g.base == c.base) have = g.exponent;
    }
    if (have > c.exponent) throw PreconditionFailed("numerator_over: not a common multiple");
    if (c.exponent > have) out = c.base.pow(c.exponent - have) * out;
  }
  return out;
}

RationalFn RationalFn::operator-() const {
  RationalFn out(*this);
  out.num_ = -out.num_;
  return out;
}

RationalFn operator+(const RationalFn& a, const RationalFn& b) {
  if (a.is_zero()) return b;
  if (b.is_zero()) return a;
  auto common = common_denominator(a.den_, b.den_);
  CoordPoly num = numerator_over(a, common) + numerator_over(b, common);
  return RationalFn(std::move(num), std::move(common));
}

RationalFn operator-(const RationalFn& a, const RationalFn& b) { return a + (-b); }

RationalFn operator*(const RationalFn& a, const RationalFn& b) {
  std::vector<DenominatorFactor> factors = a.den_;
  factors.insert(factors.end(), b.den_.begin(), b.den_.end());
  return RationalFn(a.num_ * b.num_, std::move(factors));
}

RationalFn operator*(const RationalFn& a, const Rational& r) {
  RationalFn out(a);
  out.num_ *= r;
  if (out.num_.is_zero()) out.den_.clear();
  return out;
}

RationalFn RationalFn::left_mul(const AlgebraElement& c) const {
  return RationalFn(num_.left_mul(c), den_);
}

RationalFn RationalFn::right_mul(const AlgebraElement& c) const {
  return RationalFn(num_.right_mul(c), den_);
}

RationalFn RationalFn::divide_by(const CoordPoly& base, unsigned exponent) const {
  if (!base.is_real()) throw PreconditionFailed("divide_by: base must be real");
  auto factors = den_;
  factors.push_back({base, exponent});
  return RationalFn(num_, std::move(factors));
}

RationalFn RationalFn::partial(std::size_t h) const {
  // d(N / prod b_i^e_i) = (dN * prod' b_i - N * sum' e_i db_i prod'_{j != i} b_j)
  //                       / prod b_i^(e_i + [b_i depends on x_h])
  std::vector<std::size_t> touched;
  for (std::size_t i = 0; i < den_.size(); ++i) {
    if (den_[i].base.degree_in(h) > 0) touched.push_back(i);
  }
  if (touched.empty()) return RationalFn(num_.partial(h), den_);
  const auto& sig = num_.signature();
  const std::size_t vars = num_.var_count();
  CoordPoly all = CoordPoly::scalar(sig, vars, 1);
  for (auto i : touched) all = all * den_[i].base;
  CoordPoly numerator = all * num_.partial(h);
  for (auto i : touched) {
    CoordPoly others = CoordPoly::scalar(sig, vars, Rational(den_[i].exponent));
    for (auto j : touched) {
      if (j != i) others = others * den_[j].base;
    }
    numerator -= (others * den_[i].base.partial(h)) * num_;
  }
  auto factors = den_;
  for (auto i : touched) ++factors[i].exponent;
  return RationalFn(std::move(numerator), std::move(factors));
}

AlgebraElement RationalFn::eval(std::span<const Rational> point) const {
  Rational den = 1;
  for (const auto& f : den_) {
    const Rational b = f.base.eval(point)[0];
    if (sgn(b) == 0) {
      std::string where;
      for (const auto& x : point) where += (where.empty() ? "" : ", ") + to_display_string(x);
      throw DenominatorVanishes("denominator vanishes at (" + where + ")");
    }
    for (unsigned k = 0; k < f.exponent; ++k) den *= b;
  }
  AlgebraElement value = num_.eval(point);
  if (den != 1) value *= 1 / den;
  return value;
}

std::vector<double> RationalFn::eval_float(std::span<const double> point) const {
  double den = 1.0;
  for (const auto& f : den_) {
    const double b = f.base.eval_float(point)[0];
    for (unsigned k = 0; k < f.exponent; ++k) den *= b;
  }
  auto value = num_.eval_float(point);
  for (auto& v : value) v /= den;
  return value;
}

RationalFn RationalFn::substitute(std::span<const CoordPoly> images) const {
  std::vector<DenominatorFactor> factors;
  factors.reserve(den_.size());
  for (const auto& f : den_) {
    CoordPoly base = f.base.substitute(images);
    if (base.is_zero()) {
      throw DenominatorIdenticallyZero("substitution makes denominator factor " +
                                       f.base.to_string() + " identically zero");
    }
    factors.push_back({std::move(base), f.exponent});
  }
  return RationalFn(num_.substitute(images), std::move(factors));
}

bool equivalent(const RationalFn& a, const RationalFn& b) {
  if (!(a.signature() == b.signature()) || a.var_count() != b.var_count()) return false;
  auto common = common_denominator(a.den_, b.den_);
  return numerator_over(a, common) == numerator_over(b, common);
}

std::string RationalFn::to_string(std::span<const std::string> names) const {
  if (den_.empty()) return num_.to_string(names);
  std::string out = "(" + num_.to_string(names) + ") / (";
  for (std::size_t i = 0; i < den_.size(); ++i) {
    if (i > 0) out += " * ";
    out += "(" + den_[i].base.to_string(names) + ")";
    if (den_[i].exponent > 1) out += "^" + std::to_string(den_[i].exponent);
  }
  return out + ")";
}

}  // namespace slicecalc
