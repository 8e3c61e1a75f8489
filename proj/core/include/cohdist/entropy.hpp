#pragma once

#include <span>

#include "cohdist/states.hpp"

namespace cohdist {

// All entropic quantities are in bits (base-2 logarithms). Multiply by
// std::numbers::ln2 for nats; every quantity in this library is a linear
// combination of entropies, so the conversion is exact.

// -sum lambda log2 lambda over entries above the 1e-12 clamp.
double entropy_bits(std::span<const double> eigenvalues);

double von_neumann_entropy(const DensityMatrix& rho);

// S(rho||sigma) = tr(rho log2 rho) - tr(rho log2 sigma) on the support of
// sigma; +infinity when rho has weight outside that support.
double relative_entropy(const DensityMatrix& rho, const DensityMatrix& sigma);

}  // namespace cohdist
