#include "gz/contour.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <vector>

namespace gz {
namespace {

// 8-point Gauss-Legendre on [-1,1].
constexpr double kGlX[4] = {0.1834346424956498, 0.5255324099163290,
                            0.7966664774136267, 0.9602898564975363};
constexpr double kGlW[4] = {0.3626837833783620, 0.3137066458778873,
                            0.2223810344533745, 0.1012285362903763};

}  // namespace

ZeroCount zero_count_argument_principle(const std::function<cplx(cplx)>& f,
                                        const Rectangle& rect,
                                        int nodes_per_edge) {
    if (!rect.valid()) throw DomainError("zero_count: invalid rectangle");
    if (nodes_per_edge < 8) nodes_per_edge = 8;

    const cplx corners[5] = {
        {rect.re_min, rect.im_min}, {rect.re_max, rect.im_min},
        {rect.re_max, rect.im_max}, {rect.re_min, rect.im_max},
        {rect.re_min, rect.im_min}};

    cplx integral = 0.0;
    long long evals = 0;
    double fmin = std::numeric_limits<double>::infinity();
    double fmax = 0.0;

    for (int e = 0; e < 4; ++e) {
        const cplx z0 = corners[e], z1 = corners[e + 1];
        const cplx dz = z1 - z0;
        const double len = std::abs(dz);
        const cplx dir = dz / len;
        const double hstep = 1e-5 * len;
        const int panels = std::max(1, nodes_per_edge / 8);

        cplx edge_sum = 0.0;
        for (int p = 0; p < panels; ++p) {
            const double ta = static_cast<double>(p) / panels;
            const double tb = static_cast<double>(p + 1) / panels;
            const double tc = 0.5 * (ta + tb), th = 0.5 * (tb - ta);
            for (int q = 0; q < 8; ++q) {
                const double xi = (q < 4) ? -kGlX[3 - q] : kGlX[q - 4];
                const double wq = (q < 4) ? kGlW[3 - q] : kGlW[q - 4];
                const cplx z = z0 + (tc + th * xi) * dz;
                const cplx fz = f(z);
                const cplx fp = f(z + hstep * dir);
                const cplx fm = f(z - hstep * dir);
                evals += 3;
                const double az = std::abs(fz);
                fmin = std::min(fmin, az);
                fmax = std::max(fmax, az);
                if (az < 1e-280)
                    throw ContourError("zero_count: contour passes through a zero of f");
                const cplx deriv = (fp - fm) / (2.0 * hstep * dir);
                edge_sum += wq * th * (deriv / fz);
            }
        }
        integral += edge_sum * dz;
    }

    if (fmin < 1e-13 * fmax)
        throw ContourError("zero_count: |f| nearly vanishes on the contour");

    const cplx winding = integral / cplx(0.0, 2.0 * std::numbers::pi);
    const double nearest = std::round(winding.real());
    const double diag = std::max(std::abs(winding - nearest), 1e-12);
    if (diag > 0.25)
        throw UnreliableCountError("zero_count: contour integral too far from an integer", diag);
    return {static_cast<long long>(nearest), diag, evals};
}

}  // namespace gz
