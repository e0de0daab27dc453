#include "gz/sequences.hpp"

#include <cmath>
#include <limits>

namespace gz {

cplx binomial_general(cplx s, long long k) {
    if (k < 0) throw DomainError("binomial_general: k must be non-negative");
    cplx acc = 1.0;
    for (long long j = 0; j < k; ++j) acc *= (s - static_cast<double>(j)) / static_cast<double>(j + 1);
    return acc;
}

std::vector<double> forward_differences(const std::vector<double>& values) {
    if (values.empty()) throw DomainError("forward_differences: empty input");
    std::vector<double> out;
    out.reserve(values.size());
    std::vector<double> row = values;
    out.push_back(row[0]);
    for (std::size_t n = 1; n < values.size(); ++n) {
        for (std::size_t i = 0; i + n < values.size(); ++i) row[i] = row[i + 1] - row[i];
        out.push_back(row[0]);
    }
    return out;
}

EvalResult richardson_extrapolate(const std::vector<std::pair<long long, double>>& seq) {
    const std::size_t m = seq.size();
    if (m < 2) throw DomainError("richardson_extrapolate: need at least 2 entries");
    for (std::size_t i = 1; i < m; ++i)
        if (seq[i].first <= seq[i - 1].first)
            throw DomainError("richardson_extrapolate: n must be strictly increasing");

    std::vector<double> x(m), t(m);
    double scale = 0.0;
    for (std::size_t i = 0; i < m; ++i) {
        x[i] = 1.0 / static_cast<double>(seq[i].first);
        t[i] = seq[i].second;
        scale = std::max(scale, std::abs(t[i]));
    }
    // Neville toward x = 0; t[0] holds the current best after each column.
    // Corrections need not shrink monotonically while genuine expansion
    // coefficients of mixed sign are being eliminated, so a growing
    // correction aborts only once the previous one sat at the rounding
    // floor of the inputs; beyond that point higher columns amplify noise.
    const double floor = 1e3 * std::numeric_limits<double>::epsilon() * scale;
    double best = t[0];
    double last_corr = std::abs(t[1] - t[0]);
    for (std::size_t j = 1; j < m; ++j) {
        for (std::size_t i = 0; i + j < m; ++i)
            t[i] = (x[i] * t[i + 1] - x[i + j] * t[i]) / (x[i] - x[i + j]);
        const double corr = std::abs(t[0] - best);
        if (j >= 2 && corr > last_corr && last_corr <= floor) {
            return {best, last_corr, static_cast<long long>(m)};
        }
        best = t[0];
        last_corr = corr;
    }
    return {best, last_corr, static_cast<long long>(m)};
}

}  // namespace gz
