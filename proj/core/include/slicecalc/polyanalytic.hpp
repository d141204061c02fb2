#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "slicecalc/errors.hpp"
#include "slicecalc/operators.hpp"

namespace slicecalc {

/// The requested order is too small: the residual (d/dx^c)^n F is nonzero.
class NotPolyanalyticOfOrder : public Error {
 public:
  NotPolyanalyticOfOrder(unsigned order, StemFunction residual);
  unsigned order() const { return order_; }
  const StemFunction& residual() const { return residual_; }

 private:
  unsigned order_;
  StemFunction residual_;
};

/// f = sum_h conj(x)^h f_h with slice regular components f_0..f_(order-1).
struct Decomposition {
  unsigned order = 1;
  std::vector<SliceFunction> components;
};

/// Least n >= 1 with (d/dx^c)^n f = 0.
unsigned poly_order(const SliceFunction& f);

/// Throws NotPolyanalyticOfOrder. Trailing zero components are dropped, so the
/// reported order is minimal; the zero function keeps one component.
Decomposition decompose(const SliceFunction& f, unsigned n);

/// sum_h conj(x)^h f_h at the stem level.
SliceFunction recompose(const Decomposition& d);

struct UnitOrder {
  ImaginaryUnit unit;
  /// Least n with dbar_I^n g_I = 0, absent when above the search limit.
  std::optional<unsigned> order;
};

struct ClassificationReport {
  std::optional<unsigned> sbs_order;
  std::vector<UnitOrder> unit_orders;
  SliceTest slice;
  std::optional<unsigned> global_order;
  std::optional<Decomposition> decomposition;
  std::string note;
};

ClassificationReport classify(const PointFunction& g, unsigned max_order,
                              std::span<const ImaginaryUnit> units,
                              std::span<const PlanePoint> points);

/// (f_0I, f_1I) with g_I = f_0I + conj(x_I) f_1I on the slice; requires
/// dbar_I^2 g_I = 0, otherwise throws NotPolyanalyticOfOrder.
std::pair<SlicePlanePoly, SlicePlanePoly> per_slice_decomposition(const PointFunction& g,
                                                                  const ImaginaryUnit& unit);

/// x and conj(x) as slice functions on a domain.
SliceFunction identity_function(const Signature& sig,
                                const CircularDomain& domain = CircularDomain::entire());
SliceFunction conjugate_function(const Signature& sig,
                                 const CircularDomain& domain = CircularDomain::entire());
/// -u x u for the first coordinate unit u (i, or e_1).
PointFunction conjugation_by_unit(const Signature& sig,
                                  const CircularDomain& domain = CircularDomain::entire());
/// u x for the first coordinate unit u.
PointFunction left_unit_multiple(const Signature& sig,
                                 const CircularDomain& domain = CircularDomain::entire());
/// x_1^2 x_2 / (x_1^4 + x_2^2 + .. + x_n^2), equal to 0 on the real axis.
PointFunction axis_discontinuous(const Signature& sig,
                                 const CircularDomain& domain = CircularDomain::entire());

struct SuiteCheck {
  std::string id;
  bool pass = false;
  std::size_t cases = 0;
  std::map<std::string, std::string> evidence;
};

/// Exact checks of the named non-slice and discontinuous examples under one
/// signature, over unit_count sampled units.
std::vector<SuiteCheck> counterexample_suite(const Signature& sig, std::uint64_t seed,
                                             std::size_t unit_count = 100);

}  // namespace slicecalc
