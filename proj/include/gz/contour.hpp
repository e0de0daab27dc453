#pragma once

#include <functional>

#include "gz/types.hpp"

namespace gz {

struct ZeroCount {
    long long count = 0;      // zeros minus poles enclosed
    double diagnostic = 0.0;  // |contour integral/(2 pi i) - count|, floored at 1e-12
    long long work = 1;       // integrand evaluations
};

// Argument principle on the rectangle boundary: count = round of
// (1/(2 pi i)) \oint f'/f dz, with f' by central differences stepped at
// 1e-5 of the edge length. Composite 8-point Gauss-Legendre panels per edge.
//
// Throws ContourError when |f| on the contour dips below 1e-13 of its
// contour maximum (contour through or near a zero), UnreliableCountError
// when the integral sits more than 0.25 from any integer.
ZeroCount zero_count_argument_principle(const std::function<cplx(cplx)>& f,
                                        const Rectangle& rect,
                                        int nodes_per_edge = 64);

}  // namespace gz
