#pragma once

#include <cstddef>
#include <vector>

namespace qpswf {

struct QuadratureRule {
  std::vector<double> nodes;
  std::vector<double> weights;
};

// n-point Gauss-Legendre rule on [a, b], nodes ascending.
QuadratureRule gauss_legendre(std::size_t n, double a = -1.0, double b = 1.0);

}  // namespace qpswf
