#include <catch2/catch_amalgamated.hpp>

#include <cmath>

#include "wkbound/airy.hpp"

using namespace wkbound;
using Catch::Approx;

namespace {

// Reference grid from an independent high-precision evaluation.
const struct {
    double x, ai;
} kAiTable[] = {
    {-10.0, 0.040241238486443191}, {-9.0, -0.022133721547341404},
    {-8.0, -0.052705050356386203}, {-7.5, 0.32177571638064788},
    {-7.0, 0.18428083525050564},   {-6.0, -0.32914517362982311},
    {-5.0, 0.35076100902411432},   {-4.0, -0.070265532949289515},
    {-3.0, -0.37881429367765807},  {-2.5, -0.11232506769296609},
    {-2.0, 0.22740742820168558},   {-1.0, 0.53556088329235212},
    {-0.5, 0.47572809161053959},   {0.5, 0.23169360648083349},
    {1.0, 0.13529241631288141},    {2.0, 0.034924130423274379},
    {3.0, 0.0065911393574607191},  {4.0, 0.00095156385120480187},
    {5.0, 0.00010834442813607442},
};

// First five negative zeros, from independent series bisection.
const double kAiZeros[] = {-2.3381074104597670, -4.0879494441309706, -5.5205598280955511,
                           -6.7867080900717590, -7.9441335871208531};

}  // namespace

TEST_CASE("Ai at the origin") {
    CHECK(airy_ai(0.0) == Approx(0.35502805388781724).epsilon(1e-14));
}

TEST_CASE("Ai meets 1e-10 absolute accuracy on [-10, 5]") {
    for (const auto& row : kAiTable)
        CHECK(airy_ai(row.x) == Approx(row.ai).margin(1e-10));
}

TEST_CASE("Ai decays on the positive side") {
    CHECK(airy_ai(5.0) < airy_ai(4.0));
    CHECK(airy_ai(12.0) < 1e-12);
    CHECK(airy_ai(20.0) < 1e-26);
    CHECK(airy_ai(20.0) > 0.0);
}

TEST_CASE("Ai outside [-8, 8] (asymptotic branch) stays accurate") {
    CHECK(airy_ai(-12.0) == Approx(-0.066555175054373129).margin(1e-10));
    CHECK(airy_ai(-15.0) == Approx(0.27821749087082893).margin(1e-10));
    CHECK(airy_ai(-18.0) == Approx(0.27120454080441422).margin(1e-9));
    CHECK(airy_ai(8.0) == Approx(4.6922076160992316e-8).epsilon(1e-10));
    CHECK(airy_ai(12.0) == Approx(1.3931846888753608e-13).epsilon(1e-10));
    CHECK(airy_ai(16.0) == Approx(4.1568888289170244e-20).epsilon(1e-10));
}

TEST_CASE("Ai range guard") {
    CHECK_THROWS_AS(airy_ai(20.5), range_error);
    CHECK_THROWS_AS(airy_ai(-25.0), range_error);
    CHECK_THROWS_AS(airy_ai(std::nan("")), range_error);
}

TEST_CASE("series terms follow the defining recurrences") {
    // y1 terms: t_k = x^(3k) / prod_j (3j-1)(3j); y2: u_k = x^(3k+1) / prod_j (3j)(3j+1)
    const double x = 2.0;
    double t = 1.0, u = x;
    for (int k = 1; k <= 8; ++k) {
        t *= x * x * x / ((3.0 * k - 1.0) * (3.0 * k));
        u *= x * x * x / ((3.0 * k) * (3.0 * k + 1.0));
        double t_direct = std::pow(x, 3.0 * k);
        double u_direct = std::pow(x, 3.0 * k + 1.0);
        for (int j = 1; j <= k; ++j) {
            t_direct /= (3.0 * j - 1.0) * (3.0 * j);
            u_direct /= (3.0 * j) * (3.0 * j + 1.0);
        }
        CHECK(t == Approx(t_direct).epsilon(1e-13));
        CHECK(u == Approx(u_direct).epsilon(1e-13));
    }
}

TEST_CASE("Ai satisfies y'' = x y by finite differences") {
    const double h = 1e-4;
    for (double x = -5.0; x <= 2.0; x += 0.25) {
        const double d2 = (airy_ai(x + h) - 2.0 * airy_ai(x) + airy_ai(x - h)) / (h * h);
        CHECK(d2 == Approx(x * airy_ai(x)).margin(1e-6));
    }
}

TEST_CASE("negative zeros by bisection") {
    for (int k = 1; k <= 5; ++k) {
        CHECK(airy_ai_zero(k) == Approx(kAiZeros[k - 1]).epsilon(1e-12));
        CHECK(std::abs(airy_ai(airy_ai_zero(k))) < 1e-12);
    }
    // deeper zeros stay ordered and within range
    double prev = 0.0;
    for (int k = 1; k <= 18; ++k) {
        const double z = airy_ai_zero(k);
        CHECK(z < prev);
        prev = z;
    }
    CHECK_THROWS_AS(airy_ai_zero(0), range_error);
    CHECK_THROWS_AS(airy_ai_zero(25), range_error);
}
