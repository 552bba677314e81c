#include "check.hpp"
#include "vgp/errors.hpp"
#include "vgp/meijer.hpp"

using namespace vgp;

// mpmath meijerg at 40 digits
TEST_CASE("G40 against frozen values, including double and triple poles")
{
    CHECK_REL(g40_04(0.05, {0, 0, 0.5, 0.5}).value, 1.6363113920554476, 1e-12);
    CHECK_REL(g40_04(1.3, {0, 0.5, 1, 1.5}).value, 0.1796797891665105, 1e-12);
    CHECK_REL(g40_04(4, {0, 0, -0.25, 2}).value, 0.066506626851523228, 1e-12);
    CHECK_REL(g40_04(20, {0, 1, 0.3, 1.7}).value, 0.0069670286438317647, 1e-12);
}

TEST_CASE("G31 against frozen values")
{
    CHECK_REL(g31_13(0.4, 0.5, {0, 0, 0.5}).value, 3.9885804532646383, 1e-12);
    CHECK_REL(g31_13(3, 0.3, {0, 0.5, 1.2}).value, 0.39826796271897632, 1e-12);
    CHECK_REL(g31_13(25, 0.5, {0, 0, 0.5}).value, 0.62250078548733594, 1e-11);
}

TEST_CASE("residue series agrees with the contour integral")
{
    const MeijerOrders g40{MeijerKind::G40_04, {}, {0.0, 0.3, 0.8, 1.9}};
    const MeijerOrders g41{MeijerKind::G41_15, {1.0}, {0.25, 0.5, 0.2, 1.7, 0.0}};
    for (double x : {0.2, 3.0, 40.0}) {
        CAPTURE(x);
        CHECK_REL(meijer_g(g40, x).value, g_contour_oracle(g40, x).value, 1e-9);
        CHECK_REL(meijer_g(g41, x).value, g_contour_oracle(g41, x).value, 1e-9);
    }
}

TEST_CASE("log_scale multiplies inside the extended range")
{
    MeijerOptions o;
    o.log_scale = -3.0;
    CHECK_REL(g40_04(2.0, {0, 0, 0.5, 1}, o).value, std::exp(-3.0) * g40_04(2.0, {0, 0, 0.5, 1}).value, 1e-14);
}

TEST_CASE("pole groups collect integer-spaced parameters")
{
    const std::vector<double> b = {0.0, 0.5, 2.0, 1.5, 0.3};
    const auto groups = pole_groups(b);
    CHECK(groups.size() == 3);
    int maxo = 0;
    for (const auto& g : groups) maxo = std::max(maxo, g.max_order());
    CHECK(maxo == 2);
}

TEST_CASE("regime guard and parameter validation")
{
    CHECK_THROWS_AS(g40_04(1e5, {0, 0, 0.5, 0.5}), RegimeError);
    MeijerOptions o;
    o.check_regime = false;
    CHECK_NOTHROW(g40_04(1e5, {0, 0, 0.5, 0.5}, o));
    CHECK(residue_scale(to_params({MeijerKind::G40_04, {}, {0, 0, 0, 0}}), 16.0) == doctest::Approx(8.0));
    CHECK_THROWS_AS(meijer_g({MeijerKind::G40_04, {}, {0, 0, 0}}, 1.0), DomainError);
    CHECK_THROWS_AS(meijer_g({MeijerKind::G40_04, {}, {0, 0, NAN, 0}}, 1.0), DomainError);
}

TEST_CASE("reduction identity suite")
{
    const auto res = reduction_residuals({0.1, 0.5, 1.0, 5.0, 20.0});
    CHECK(res.size() >= 9);
    for (const auto& r : res) {
        CAPTURE(r.name);
        CHECK(r.points > 0);
        CHECK(r.max_rel <= 1e-9);
    }
}
