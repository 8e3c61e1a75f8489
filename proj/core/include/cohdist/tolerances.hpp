#pragma once

// Numerical tolerances shared across the library. Golden values in the test
// suites assume exactly these; change with care.

namespace cohdist {

inline constexpr double kHermitianTol = 1e-9;   // max |M(i,j) - conj(M(j,i))|
inline constexpr double kTraceTol = 1e-9;       // |tr(rho) - 1|
inline constexpr double kPsdTol = 1e-9;         // min eigenvalue >= -kPsdTol
inline constexpr double kEigClamp = 1e-12;      // eigenvalues <= this are treated as 0
inline constexpr double kBranchDrop = 1e-12;    // measurement outcomes below this are dropped
inline constexpr double kMixtureTol = 1e-10;    // ensemble mixture residual (max-abs)
inline constexpr double kOrthoTol = 1e-10;      // isometry column orthonormality
inline constexpr double kProbSumTol = 1e-9;     // |sum p_i - 1|
inline constexpr double kPartitionTol = 1e-7;   // |residual| above this is a fault
inline constexpr double kPureEigTol = 1e-10;    // largest eigenvalue >= 1 - this => pure
inline constexpr double kSweepGainTol = 1e-8;   // optimizer per-sweep gain threshold

}  // namespace cohdist
