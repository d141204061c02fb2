#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "slicecalc/slicefn.hpp"

namespace slicecalc {

/// A function of (alpha, beta) obtained by restricting to the slice C_I.
struct SlicePlanePoly {
  RationalFn fn;
  ImaginaryUnit unit;

  AlgebraElement eval(const PlanePoint& z) const;
};

/// Substitutes x_0 = alpha and x_h = i_h beta; throws DenominatorIdenticallyZero.
SlicePlanePoly restrict_to_slice(const PointFunction& g, const ImaginaryUnit& unit);
/// F1 + I F2 as a polynomial in (alpha, beta).
SlicePlanePoly restrict_to_slice(const SliceFunction& f, const ImaginaryUnit& unit);

/// (1/2^n) (d/dalpha + I d/dbeta)^n, with I multiplying on the left.
SlicePlanePoly dbar_slice(const SlicePlanePoly& p, unsigned n);
SlicePlanePoly dbar_slice(const PointFunction& g, const ImaginaryUnit& unit, unsigned n);
SlicePlanePoly dbar_slice(const SliceFunction& f, const ImaginaryUnit& unit, unsigned n);

/// s = x_1^2 + .. + x_n^2 in the coordinate variables of sig.
CoordPoly imaginary_norm_sq(const Signature& sig);
/// Im(x) = x_1 u_1 + .. + x_n u_n.
CoordPoly imaginary_part(const Signature& sig);
/// conj(x) = x_0 - Im(x).
CoordPoly conjugate_variable(const Signature& sig);

/// thetabar g = 1/2 (dg/dx_0 + (Im(x) / s) sum_h x_h dg/dx_h), iterated n times.
PointFunction thetabar(const PointFunction& g, unsigned n = 1);
/// All iterates thetabar^1 g .. thetabar^n g.
std::vector<PointFunction> thetabar_powers(const PointFunction& g, unsigned n);

/// G g = s dg/dx_0 + Im(x) sum_h x_h dg/dx_h.
PointFunction g_operator(const PointFunction& g);

enum class OperatorKind { DbarSlice, Thetabar, G };

struct OperatorDescriptor {
  OperatorKind kind = OperatorKind::Thetabar;
  /// Imaginary coordinates of I, used by DbarSlice.
  std::vector<double> unit;
  double step = 1e-5;
};

/// Central-difference value of the operator at x (coordinates x_0..x_n).
/// Throws PointTooCloseToAxis unless |Im x| > 10 step.
std::vector<double> finite_diff_oracle(const PointFunction& g, std::span<const double> x,
                                       const OperatorDescriptor& op);

}  // namespace slicecalc
