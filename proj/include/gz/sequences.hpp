#pragma once

#include <utility>
#include <vector>

#include "gz/types.hpp"

namespace gz {

// Generalized binomial coefficient binom(s,k) = s(s-1)...(s-k+1)/k! for
// complex s; binom(s,0) = 1.
cplx binomial_general(cplx s, long long k);

// Forward differences at the head: returns Delta^n v_0 for n = 0..len-1,
// where (Delta v)_k = v_{k+1} - v_k. Throws DomainError on empty input.
std::vector<double> forward_differences(const std::vector<double>& values);

// Polynomial (Neville) extrapolation of value(n) ~ L + c1/n + c2/n^2 + ...
// to n = infinity, from (n, value) samples with strictly increasing n.
// Columns are added while the correction to the leading entry shrinks;
// err_estimate is the magnitude of the last correction applied.
EvalResult richardson_extrapolate(const std::vector<std::pair<long long, double>>& seq);

}  // namespace gz
