#pragma once

#include <cstdint>

#include "swanson/quad_ops.hpp"

namespace swanson::model {

/// Default absolute tolerance for the boundary bands of classify().
inline constexpr double kClassifyTol = 1e-10;

/// The real parameter triple of the Swanson oscillator
///   w (a+a + 1/2) + alpha a^2 + beta (a+)^2.
struct SwansonParams {
  double w{};
  double alpha{};
  double beta{};
};

/// Spectral character of a parameter point. Tag values are fixed: they are
/// the wire encoding used by the batch scan kernels.
enum class SpectrumClass : std::uint8_t {
  RealCaseI = 0,              // Omega^2 > 0, w - alpha - beta > 0
  RealCaseII = 1,             // Omega^2 > 0, w = alpha + beta
  HermitianLimit = 2,         // alpha = beta with Omega^2 > 0
  ComplexPair = 3,            // Omega^2 < 0
  DegenerateBoundary = 4,     // Omega^2 = 0
  RealOmegaNegativeMass = 5,  // Omega^2 > 0, w - alpha - beta < 0 (flagged)
};

const char* to_string(SpectrumClass cls);

ops::QuadraticOperator build_swanson(const SwansonParams& params);

double omega_squared(const SwansonParams& params);  // w^2 - 4 alpha beta
double mass_term(const SwansonParams& params);      // w - alpha - beta

/// Deterministic classification with absolute tolerance bands. Spectral
/// character is decided first (degenerate, then complex), so a Hermitian
/// point with Omega^2 <= 0 reports its spectral tag rather than
/// HermitianLimit; the HermitianLimit tag is reserved for alpha = beta
/// points that actually carry the discrete real spectrum.
SpectrumClass classify(const SwansonParams& params, double tol = kClassifyTol);

bool has_real_spectrum(SpectrumClass cls);

/// E_n = (n + 1/2) sqrt(w^2 - 4 alpha beta). Only defined where classify
/// reports one of the real-spectrum tags; throws NotRealSpectrum otherwise.
double exact_energy(const SwansonParams& params, int n,
                    double tol = kClassifyTol);

/// The Hermitian oscillator equivalent to a case-I point:
///   1/2 (w-alpha-beta) p^2 + 1/2 (w^2-4 alpha beta)/(w-alpha-beta) x^2.
/// Requires w - alpha - beta > 0 and Omega^2 > 0.
ops::PhaseQuadratic hermitian_equivalent_case1(const SwansonParams& params);

/// The Hermitian oscillator reached by the case-II chain:
///   1/2 (beta-2alpha) p^2 + 1/2 (beta-alpha)^2/(beta-2alpha) x^2.
/// Requires w = alpha + beta (within tol), beta - 2 alpha > 0 and
/// beta - alpha > 0; the beta = 2 alpha denominator is rejected.
ops::PhaseQuadratic case2_hermitian(const SwansonParams& params,
                                    double tol = kClassifyTol);

}  // namespace swanson::model
