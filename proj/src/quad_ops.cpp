#include "swanson/quad_ops.hpp"

#include <cmath>

#include "swanson/errors.hpp"

namespace swanson::ops {

namespace {
constexpr Complex kImag{0.0, 1.0};
}

PhaseQuadratic to_phase_basis(const QuadraticOperator& op) {
  // a+a + 1/2 = (x^2 + p^2)/2
  // a^2       = (x^2 - p^2 + i(xp+px))/2
  // (a+)^2    = (x^2 - p^2 - i(xp+px))/2
  PhaseQuadratic out;
  out.g_pp = (op.c_num - op.c_low - op.c_raise) / 2.0;
  out.g_xx = (op.c_num + op.c_low + op.c_raise) / 2.0;
  out.g_cross = kImag * (op.c_low - op.c_raise) / 2.0;
  out.g_const = op.c_const;
  return out;
}

QuadraticOperator to_ladder_basis(const PhaseQuadratic& op) {
  QuadraticOperator out;
  out.c_num = op.g_pp + op.g_xx;
  out.c_low = (op.g_xx - op.g_pp) / 2.0 - kImag * op.g_cross;
  out.c_raise = (op.g_xx - op.g_pp) / 2.0 + kImag * op.g_cross;
  out.c_const = op.g_const;
  return out;
}

QuadraticOperator conjugate_by_ladder_squeeze(const QuadraticOperator& op,
                                              Complex mu) {
  // Substituting a -> a - 2 mu a+ and normal-ordering leaves the number term
  // aligned with (a+a + 1/2): the scalar produced by reordering cancels
  // against the shift of the 1/2.
  QuadraticOperator out;
  out.c_num = op.c_num - 4.0 * mu * op.c_low;
  out.c_low = op.c_low;
  out.c_raise = op.c_raise - 2.0 * mu * op.c_num + 4.0 * mu * mu * op.c_low;
  out.c_const = op.c_const;
  return out;
}

PhaseQuadratic conjugate_by_gaussian(const PhaseQuadratic& op, Complex lambda) {
  PhaseQuadratic out;
  out.g_pp = op.g_pp;
  out.g_cross = op.g_cross + 2.0 * kImag * lambda * op.g_pp;
  out.g_xx = op.g_xx - 4.0 * lambda * lambda * op.g_pp +
             4.0 * kImag * lambda * op.g_cross;
  out.g_const = op.g_const;
  return out;
}

bool is_hermitian(const QuadraticOperator& op, double tol) {
  return std::abs(op.c_num.imag()) <= tol &&
         std::abs(op.c_const.imag()) <= tol &&
         std::abs(op.c_raise - std::conj(op.c_low)) <= tol;
}

bool is_hermitian(const PhaseQuadratic& op, double tol) {
  return std::abs(op.g_pp.imag()) <= tol && std::abs(op.g_xx.imag()) <= tol &&
         std::abs(op.g_cross.imag()) <= tol &&
         std::abs(op.g_const.imag()) <= tol;
}

Complex formal_omega_squared(const QuadraticOperator& op) {
  return op.c_num * op.c_num - 4.0 * op.c_low * op.c_raise;
}

Complex formal_omega_squared(const PhaseQuadratic& op) {
  return 4.0 * (op.g_pp * op.g_xx - op.g_cross * op.g_cross);
}

Complex hermitizing_gaussian_parameter(const PhaseQuadratic& op) {
  if (std::abs(op.g_pp) == 0.0) {
    raise(ErrorCode::InvalidArgument,
          "hermitizing Gaussian parameter undefined for g_pp = 0");
  }
  return kImag * op.g_cross / (2.0 * op.g_pp);
}

std::vector<double> exact_spectrum(const PhaseQuadratic& op, int n_max) {
  if (n_max < 0) {
    raise(ErrorCode::InvalidArgument, "n_max must be >= 0");
  }
  if (!is_hermitian(op, 1e-12)) {
    raise(ErrorCode::NotHermitian,
          "exact_spectrum requires a Hermitian phase-space operator");
  }
  const double gpp = op.g_pp.real();
  const double gxx = op.g_xx.real();
  const double gcr = op.g_cross.real();
  const double disc = gpp * gxx - gcr * gcr;
  if (gpp <= 0.0 || disc <= 0.0) {
    raise(ErrorCode::UnboundedBelow,
          "oscillator not bounded below (g_pp <= 0 or g_pp g_xx - g_cross^2 "
          "<= 0)");
  }
  const double slope = 2.0 * std::sqrt(disc);
  std::vector<double> energies;
  energies.reserve(static_cast<std::size_t>(n_max) + 1);
  for (int n = 0; n <= n_max; ++n) {
    energies.push_back(slope * (n + 0.5) + op.g_const.real());
  }
  return energies;
}

}  // namespace swanson::ops
