///////////////////////////////////////////////////////////////////////////////
// gauss.hpp
//
// Gauss-Legendre abscissae and weights, cached per order
///////////////////////////////////////////////////////////////////////////////
#pragma once

#include <memory>
#include <vector>

namespace qd {

struct GaussRule {
    std::vector<double> x; // nodes on [-1, 1]
    std::vector<double> w;
};

/// n-point Gauss-Legendre rule on [-1,1]; result is cached and immutable.
std::shared_ptr<const GaussRule> gauss_legendre(int n);

} // namespace qd
