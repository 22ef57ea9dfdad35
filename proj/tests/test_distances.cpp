#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "fixtures.hpp"
#include "orbicular/distances.hpp"
#include "test_util.hpp"

using namespace orbicular;
using doctest::Approx;

TEST_CASE("pointwise distances") {
    const auto p = fixtures::make_set(fixtures::kSetP);
    const auto q = fixtures::make_set(fixtures::kSetQ);
    const double expect = 0.5 * (0.5 * (std::abs(0.0324 - 0.2401) + std::abs(0.1156 - 0.0784) +
                                        std::abs(0.0576 - 0.1849)) +
                                 0.02);
    CHECK(hamming_point(p, q, "k1") == Approx(expect));
    CHECK(hamming_point(p, q, "k1") == Approx(0.10305));
    CHECK(hamming_point(p, p, "k1") == 0.0);
    CHECK(euclidean_point(p, p, "k2") == 0.0);

    const auto hi = fixtures::make_set({{1, 0, 0, 1}});
    const auto lo = fixtures::make_set({{0, 0, 1, 0}});
    CHECK(hamming_point(hi, lo, "k1") == Approx(1));
    CHECK(euclidean_point(hi, lo, "k1") == Approx(1));
}

TEST_CASE("normalized distances") {
    const auto p = fixtures::make_set(fixtures::kSetP);
    const auto q = fixtures::make_set(fixtures::kSetQ);

    double ham = 0.0;
    double sq = 0.0;
    double dr = 0.0;
    for (std::size_t i = 0; i < fixtures::kSetP.size(); ++i) {
        const auto& a = fixtures::kSetP[i];
        const auto& b = fixtures::kSetQ[i];
        double grades = 0.0;
        for (int g = 0; g < 3; ++g) {
            const double d = a[g] * a[g] - b[g] * b[g];
            grades += std::abs(d);
            sq += d * d;
        }
        ham += 0.5 * (0.5 * grades + std::abs(a[3] - b[3]));
        dr += std::abs(a[3] - b[3]);
    }
    const double n = static_cast<double>(fixtures::kSetP.size());
    CHECK(hamming_norm(p, q) == Approx(ham / n));
    CHECK(euclidean_norm(p, q) == Approx(0.5 * (std::sqrt(sq / (2 * n)) + dr / n)));
    CHECK(hamming_norm(p, q) == Approx(hamming_norm(q, p)));
    CHECK(euclidean_norm(p, p) == 0.0);

    const auto one_a = fixtures::make_set({fixtures::kSetP[0]});
    const auto one_b = fixtures::make_set({fixtures::kSetQ[0]});
    CHECK(hamming_norm(one_a, one_b) == Approx(hamming_point(one_a, one_b, "k1")));
    CHECK(euclidean_norm(one_a, one_b) == Approx(euclidean_point(one_a, one_b, "k1")));
}
