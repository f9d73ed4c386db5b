#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "virateich/diffeo.hpp"
#include "virateich/rng.hpp"
#include "virateich/spectral.hpp"

using namespace virateich;

namespace {

// Lift-level distance, stable against the canonical (φ, winding) split.
double lift_diff(const DiffeoLift& A, const DiffeoLift& B) {
    const double dw = static_cast<double>(A.winding() - B.winding());
    double r = 0.0;
    for (int k = 0; k < A.size(); ++k)
        r = std::max(r, std::abs(A.periodic_part()[k] - B.periodic_part()[k] + dw));
    return r;
}

DiffeoLift bump(int n, double amp) {
    return DiffeoLift::from_periodic_part(
        PeriodicFn::sample(n, [amp](double x) { return amp * std::sin(kTwoPi * x); }));
}

} // namespace

TEST_CASE("normalization of the periodic part") {
    const int n = 64;
    const DiffeoLift F = DiffeoLift::from_periodic_part(
        PeriodicFn::sample(n, [](double x) { return 0.1 * std::cos(kTwoPi * x) - 0.5; }), 2);
    CHECK(F.periodic_part()[0] >= 0.0);
    CHECK(F.periodic_part()[0] < 1.0);
    // F̃(0) = φ_raw(0) + 2 must be preserved.
    CHECK(F.periodic_part()[0] + F.winding() == doctest::Approx(-0.4 + 2.0));
}

TEST_CASE("monotonicity is rejected") {
    const int n = 64;
    // amplitude 0.4 gives φ' up to 0.8π > 1: not orientation preserving
    CHECK_THROWS_AS(DiffeoLift::from_periodic_part(PeriodicFn::sample(
                        n, [](double x) { return 0.4 * std::sin(kTwoPi * x); })),
                    PreconditionError);
}

TEST_CASE("composition basics") {
    const int n = 128;
    const DiffeoLift id = DiffeoLift::identity(n);
    const DiffeoLift F = bump(n, 0.1);
    CHECK(lift_diff(compose(F, id), F) < 1e-14);
    CHECK(lift_diff(compose(id, F), F) < 1e-14);
    CHECK(lift_diff(compose(DiffeoLift::rotation(n, 0.7), DiffeoLift::rotation(n, 0.6)),
                    DiffeoLift::rotation(n, 1.3)) < 1e-14);
}

TEST_CASE("newton inverse") {
    const int n = 256;
    const DiffeoLift F = bump(n, 0.1);
    CHECK(lift_diff(compose(F, invert(F)), DiffeoLift::identity(n)) < 1e-8);
    CHECK(lift_diff(invert(DiffeoLift::identity(n)), DiffeoLift::identity(n)) < 1e-14);
    CHECK(lift_diff(invert(DiffeoLift::rotation(n, 0.3)), DiffeoLift::rotation(n, -0.3)) < 1e-12);
    CHECK(lift_diff(invert(invert(F)), F) < 1e-8);
}

TEST_CASE("schwarzian closed form") {
    const int n = 256;
    const DiffeoLift F = bump(n, 0.1);
    const PeriodicFn S = schwarzian(F);
    CHECK(S.weight() == 2);
    double e = 0.0;
    for (int k = 0; k < n; ++k) {
        const double x = static_cast<double>(k) / n;
        const double d1 = 1.0 + 0.1 * kTwoPi * std::cos(kTwoPi * x);
        const double d2 = -0.1 * kTwoPi * kTwoPi * std::sin(kTwoPi * x);
        const double d3 = -0.1 * kTwoPi * kTwoPi * kTwoPi * std::cos(kTwoPi * x);
        const double exact = d3 / d1 - 1.5 * (d2 / d1) * (d2 / d1);
        e = std::max(e, std::abs(S[k] - exact));
    }
    CHECK(e < 1e-8);

    CHECK(schwarzian(DiffeoLift::identity(n)).max_abs() < 1e-10);
    CHECK(schwarzian(DiffeoLift::rotation(n, 0.4)).max_abs() < 1e-10);
}

TEST_CASE("hill action on constants") {
    const int n = 128;
    const HillPotential T{PeriodicFn::constant(n, -1.0, 2)};
    CHECK((act_on_hill(DiffeoLift::identity(n), T).T - (-1.0)).max_abs() < 1e-12);
    CHECK((act_on_hill(DiffeoLift::rotation(n, 0.3), T).T - (-1.0)).max_abs() < 1e-12);
}

TEST_CASE("hill action composition law") {
    const int n = 256;
    Rng rng(21);
    const DiffeoLift F = random_diffeo(rng, n), G = random_diffeo(rng, n);
    const HillPotential T{random_trig_poly(rng, n, 4, 0.5, 0.5, 2)};
    const HillPotential lhs = act_on_hill(G, act_on_hill(F, T));
    const HillPotential rhs = act_on_hill(compose(F, G), T);
    CHECK((lhs.T - rhs.T).max_abs() < 1e-7);
}

TEST_CASE("left-invariant variation") {
    const int n = 64;
    const DiffeoLift id = DiffeoLift::identity(n);
    CHECK(left_invariant_vector(id, PeriodicFn::constant(n, 0.0)).max_abs() < 1e-14);
    CHECK((left_invariant_vector(id, PeriodicFn::constant(n, 1.0)) + 1.0).max_abs() < 1e-12);
}
