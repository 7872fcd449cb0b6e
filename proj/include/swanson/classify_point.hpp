#pragma once

#include <cmath>
#include <cstdint>

#include "swanson/model.hpp"

namespace swanson::model {

/// Single-point classification shared by model::classify and the batch scan
/// kernels. The SIMD variants replicate this decision chain lane-wise and are
/// tested for exact agreement, so any change here must keep the operation
/// order of omega_sq and mass intact.
inline SpectrumClass classify_point(double w, double alpha, double beta,
                                    double tol, double& omega_sq,
                                    double& mass) {
  omega_sq = w * w - 4.0 * (alpha * beta);
  mass = w - alpha - beta;
  if (std::fabs(omega_sq) <= tol) return SpectrumClass::DegenerateBoundary;
  if (omega_sq < -tol) return SpectrumClass::ComplexPair;
  if (std::fabs(alpha - beta) <= tol) return SpectrumClass::HermitianLimit;
  if (std::fabs(mass) <= tol) return SpectrumClass::RealCaseII;
  if (mass > tol) return SpectrumClass::RealCaseI;
  return SpectrumClass::RealOmegaNegativeMass;
}

}  // namespace swanson::model
