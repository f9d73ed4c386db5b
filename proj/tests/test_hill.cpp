#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "virateich/hill.hpp"
#include "virateich/rng.hpp"
#include "virateich/spectral.hpp"

using namespace virateich;

namespace {

BoundaryConnection slice(int n, double u) {
    return BoundaryConnection(PeriodicFn::constant(n, 1.0), PeriodicFn::constant(n, 0.0),
                              PeriodicFn::constant(n, u));
}

double conn_diff(const BoundaryConnection& A, const BoundaryConnection& B) {
    return std::max({(A.a - B.a).max_abs(), (A.s - B.s).max_abs(), (A.u - B.u).max_abs()});
}

} // namespace

TEST_CASE("gauge by the identity is trivial") {
    const int n = 64;
    Rng rng(1);
    const BoundaryConnection A(random_smooth_positive(rng, n, 0.4),
                               random_trig_poly(rng, n, 4, 0.5),
                               random_trig_poly(rng, n, 4, 0.5));
    CHECK(conn_diff(gauge_transform(GaugeMap::identity(n), A), A) < 1e-12);
}

TEST_CASE("constant diagonal gauge scales the off-diagonal entries") {
    const int n = 64;
    Rng rng(2);
    const BoundaryConnection A(random_smooth_positive(rng, n, 0.4),
                               random_trig_poly(rng, n, 4, 0.5),
                               random_trig_poly(rng, n, 4, 0.5));
    const double lam = 1.4;
    const GaugeMap h(PeriodicFn::constant(n, lam), PeriodicFn::constant(n, 0.0),
                     PeriodicFn::constant(n, 0.0), PeriodicFn::constant(n, 1.0 / lam));
    const BoundaryConnection B = gauge_transform(h, A);
    CHECK((B.a - lam * lam * A.a).max_abs() < 1e-12);
    CHECK((B.u - (1.0 / (lam * lam)) * A.u).max_abs() < 1e-12);
    CHECK((B.s - A.s).max_abs() < 1e-12);
}

TEST_CASE("gauge map determinant is validated") {
    const int n = 64;
    CHECK_THROWS_AS(GaugeMap(PeriodicFn::constant(n, 2.0), PeriodicFn::constant(n, 0.0),
                             PeriodicFn::constant(n, 0.0), PeriodicFn::constant(n, 1.0)),
                    PreconditionError);
}

TEST_CASE("normal form of a slice connection") {
    const int n = 64;
    auto [h, T] = ds_normalize(slice(n, -0.75));
    CHECK((h.g11 - 1.0).max_abs() < 1e-12);
    CHECK(h.g21.max_abs() < 1e-12);
    CHECK((T.T - 0.75).max_abs() < 1e-12);
}

TEST_CASE("model potentials") {
    const int n = 64;
    CHECK((hill_from_asu(slice(n, -0.25)).T - 0.25).max_abs() < 1e-12);
    CHECK((ds_normalize(slice(n, -0.25)).second.T - 0.25).max_abs() < 1e-12);
    for (double ell : {0.5, 1.0, 2.0}) {
        CHECK((hill_from_asu(slice(n, 0.25 * ell * ell)).T + 0.25 * ell * ell).max_abs() < 1e-12);
        CHECK((ds_normalize(slice(n, 0.25 * ell * ell)).second.T + 0.25 * ell * ell).max_abs() <
              1e-12);
    }
    // Fefferman-Graham data (a=1, s=0, u=T0) carries the potential -T0.
    Rng rng(3);
    const PeriodicFn T0 = random_trig_poly(rng, 256, 4, 0.5, 0.5);
    const BoundaryConnection A(PeriodicFn::constant(256, 1.0), PeriodicFn::constant(256, 0.0),
                               T0);
    CHECK((hill_from_asu(A).T + T0).max_abs() < 1e-10);
}

TEST_CASE("positivity precondition names the failing point") {
    const int n = 64;
    PeriodicFn a = PeriodicFn::sample(n, [](double x) { return std::cos(kTwoPi * x); });
    const BoundaryConnection A(a, PeriodicFn::constant(n, 0.0), PeriodicFn::constant(n, 0.0));
    CHECK(!A.is_positive());
    CHECK(A.first_nonpositive() == 17); // cos(2pi k/64) first negative at k = 17
    CHECK_THROWS_WITH_AS(static_cast<void>(ds_normalize(A)), doctest::Contains("17"),
                         PreconditionError);
    CHECK_THROWS_AS(static_cast<void>(hill_from_asu(A)), PreconditionError);
}

TEST_CASE("normal form against the direct formula") {
    const int n = 256;
    Rng rng(17);
    const BoundaryConnection A(random_smooth_positive(rng, n, 0.4),
                               random_trig_poly(rng, n, 4, 0.5, 0.3),
                               random_trig_poly(rng, n, 4, 0.5, 0.3));
    CHECK((ds_normalize(A).second.T - hill_from_asu(A).T).max_abs() < 1e-8);
}

TEST_CASE("hat moment") {
    const int n = 64;
    Rng rng(4);
    const PeriodicFn T = random_trig_poly(rng, n, 4, 0.5, 0.5, 2);
    CHECK((hat_moment(ds_connection(HillPotential{T})) + T).max_abs() < 1e-12);
    CHECK(hat_moment(slice(n, 0.0)).max_abs() < 1e-12);
    CHECK(hat_moment(slice(n, -0.3)).weight() == 2);
}

TEST_CASE("monodromy closed forms and classes") {
    const int n = 256;
    for (double ell : {0.5, 1.0, 2.0}) {
        const Monodromy m = monodromy(HillPotential{PeriodicFn::constant(n, -0.25 * ell * ell, 2)});
        CHECK(m.trace == doctest::Approx(2.0 * std::cosh(0.5 * ell)).epsilon(1e-10));
        CHECK(m.orbit_class == Monodromy::OrbitClass::hyperbolic);
        const double det = m.matrix[0][0] * m.matrix[1][1] - m.matrix[0][1] * m.matrix[1][0];
        CHECK(det == doctest::Approx(1.0).epsilon(1e-8));
    }
    const Monodromy flat = monodromy(HillPotential{PeriodicFn::constant(n, 0.0, 2)});
    CHECK(flat.trace == doctest::Approx(2.0).epsilon(1e-12));
    CHECK(flat.orbit_class == Monodromy::OrbitClass::parabolic);

    const Monodromy disk = monodromy(HillPotential{PeriodicFn::constant(n, 0.25, 2)});
    CHECK(disk.trace == doctest::Approx(2.0 * std::cos(0.5)).epsilon(1e-10));
    CHECK(disk.orbit_class == Monodromy::OrbitClass::elliptic);
}

TEST_CASE("monodromy trace is an invariant of the action") {
    const int n = 256;
    Rng rng(5);
    const HillPotential T{random_trig_poly(rng, n, 4, 0.5, 0.5, 2)};
    const DiffeoLift F = random_diffeo(rng, n);
    CHECK(std::abs(monodromy(T).trace - monodromy(act_on_hill(F, T)).trace) < 1e-6);
}

TEST_CASE("splitting gauge") {
    const int n = 256;
    const GaugeMap hid = ds_splitting_gauge(DiffeoLift::identity(n));
    CHECK((hid.g11 - 1.0).max_abs() < 1e-12);
    CHECK(hid.g21.max_abs() < 1e-12);
    const GaugeMap hrot = ds_splitting_gauge(DiffeoLift::rotation(n, 0.37));
    CHECK((hrot.g22 - 1.0).max_abs() < 1e-12);

    // Defining property: h • F*A_T lands in the slice with the acted potential.
    Rng rng(6);
    const DiffeoLift F = random_diffeo(rng, n);
    const HillPotential T{random_trig_poly(rng, n, 4, 0.5, 0.5, 2)};
    const BoundaryConnection lhs =
        gauge_transform(ds_splitting_gauge(F), pullback(F, ds_connection(T)));
    const BoundaryConnection rhs = ds_connection(act_on_hill(F, T));
    CHECK(conn_diff(lhs, rhs) < 1e-7);
}
