#pragma once

#include <complex>
#include <vector>

namespace swanson::ops {

using Complex = std::complex<double>;

/// Default tolerance for hermiticity predicates.
inline constexpr double kHermitianTol = 1e-12;

/// Quadratic bosonic operator in the ladder basis:
///   c_num (a+a + 1/2) + c_low a^2 + c_raise (a+)^2 + c_const.
/// Coefficients are complex so that non-Hermitian intermediates of a
/// similarity chain live in the same type.
struct QuadraticOperator {
  Complex c_num{};
  Complex c_low{};
  Complex c_raise{};
  Complex c_const{};
};

/// Same operator content in the phase-space basis:
///   g_pp p^2 + g_xx x^2 + g_cross (xp + px) + g_const.
struct PhaseQuadratic {
  Complex g_pp{};
  Complex g_xx{};
  Complex g_cross{};
  Complex g_const{};
};

/// Rewrites under a = (x+ip)/sqrt(2). Exact linear coefficient map.
PhaseQuadratic to_phase_basis(const QuadraticOperator& op);

/// Inverse of to_phase_basis.
QuadraticOperator to_ladder_basis(const PhaseQuadratic& op);

/// exp(mu (a+)^2) H exp(-mu (a+)^2), computed exactly: the adjoint action on
/// the ladder pair is the terminating substitution a -> a - 2 mu a+, a+ -> a+,
/// renormal-ordered back into the four-coefficient form.
QuadraticOperator conjugate_by_ladder_squeeze(const QuadraticOperator& op,
                                              Complex mu);

/// exp(lambda x^2) H exp(-lambda x^2) via p -> p + 2 i lambda x, x -> x.
PhaseQuadratic conjugate_by_gaussian(const PhaseQuadratic& op, Complex lambda);

/// Hermitian iff c_num, c_const real and c_raise = conj(c_low).
bool is_hermitian(const QuadraticOperator& op, double tol = kHermitianTol);

/// Hermitian iff all four phase coefficients are real.
bool is_hermitian(const PhaseQuadratic& op, double tol = kHermitianTol);

/// c_num^2 - 4 c_low c_raise. Invariant under both conjugation families.
Complex formal_omega_squared(const QuadraticOperator& op);

/// Phase-basis value of the same invariant: 4 (g_pp g_xx - g_cross^2).
Complex formal_omega_squared(const PhaseQuadratic& op);

/// The unique root of g_cross + 2 i lambda g_pp = 0, i.e. the Gaussian
/// parameter that cancels the cross term. Requires g_pp != 0.
Complex hermitizing_gaussian_parameter(const PhaseQuadratic& op);

/// Energies E_n = 2 sqrt(g_pp g_xx - g_cross^2) (n + 1/2) + g_const for
/// n = 0..n_max. Requires a Hermitian operator (within 1e-12) that is
/// bounded below: g_pp > 0 and g_pp g_xx - g_cross^2 > 0.
/// Throws NotHermitian / UnboundedBelow otherwise.
std::vector<double> exact_spectrum(const PhaseQuadratic& op, int n_max);

}  // namespace swanson::ops
