#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>
#include <utility>
#include <vector>

#include "gz/sequences.hpp"

using gz::cplx;

TEST_CASE("binomial_general: integer, fractional, and terminating cases") {
    CHECK(std::abs(gz::binomial_general(5.0, 2) - cplx(10.0)) < 1e-14);
    CHECK(std::abs(gz::binomial_general(0.5, 2) - cplx(-0.125)) < 1e-16);
    CHECK(gz::binomial_general(cplx(2.0, -3.0), 0) == cplx(1.0));
    // binom(3,5) contains the factor (3-3): exactly zero.
    CHECK(gz::binomial_general(3.0, 5) == cplx(0.0));
}

TEST_CASE("binomial_general: complex argument against the product definition") {
    const cplx s(1.5, 0.5);
    cplx prod = 1.0;
    for (int j = 0; j < 4; ++j) prod *= (s - static_cast<double>(j)) / (j + 1.0);
    CHECK(std::abs(gz::binomial_general(s, 4) - prod) < 1e-15);
}

TEST_CASE("forward_differences: head differences of a geometric sequence") {
    const auto d = gz::forward_differences({1.0, 2.0, 4.0, 8.0});
    REQUIRE(d.size() == 4);
    CHECK(d[0] == 1.0);
    CHECK(d[1] == 1.0);
    CHECK(d[2] == 1.0);
    CHECK(d[3] == 1.0);

    CHECK_THROWS_AS(gz::forward_differences({}), gz::DomainError);
}

TEST_CASE("richardson_extrapolate: removes inverse-power error terms") {
    std::vector<std::pair<long long, double>> seq;
    for (long long n : {16, 32, 64, 128, 256}) {
        const double nd = static_cast<double>(n);
        seq.emplace_back(n, 5.0 + 3.0 / nd + 7.0 / (nd * nd));
    }
    const auto r = gz::richardson_extrapolate(seq);
    CHECK(std::abs(r.value.real() - 5.0) < 1e-10);
    CHECK(r.err_estimate < 1e-6);
    // The raw sequence is still 3/256 away; extrapolation must beat it.
    CHECK(std::abs(r.value.real() - 5.0) < 1e-4 * std::abs(seq.back().second - 5.0));
}
