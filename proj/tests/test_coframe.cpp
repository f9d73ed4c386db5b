#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "virateich/coframe.hpp"
#include "virateich/hill.hpp"
#include "virateich/rng.hpp"
#include "virateich/spectral.hpp"

using namespace virateich;

namespace {

double max_K_err(const StructureResiduals& sr, double expected) {
    double e = 0.0;
    for (int j = 2; j < sr.K.ny() - 2; ++j)
        for (int i = 0; i < sr.K.nx; ++i) e = std::max(e, std::abs(sr.K.at(j, i) - expected));
    return e;
}

} // namespace

TEST_CASE("model coframe sample values") {
    const int nx = 32;
    {
        const CoframeGrid C = make_example_coframe(ExampleCoframe::half_plane, nx, {0.25, 0.5, 0.75, 1.0, 1.25});
        CHECK(C.a1x.at(1, 8) == doctest::Approx(2.0)); // α₁ₓ = 1/y at y = 0.5
        CHECK(C.orientation() == 1);
    }
    {
        const CoframeGrid C = make_example_coframe(ExampleCoframe::cylinder, nx,
                                                   {0.5, 0.75, 1.0, 1.25, 1.5}, 2.0);
        CHECK(C.a1x.at(2, 0) == doctest::Approx(2.0)); // neck circle y = e^{-u} = 1
    }
    {
        const PeriodicFn T0 = PeriodicFn::constant(nx, 0.0);
        const CoframeGrid fg = make_example_coframe(ExampleCoframe::fefferman_graham, nx,
                                                    {0.25, 0.5, 0.75, 1.0, 1.25}, 1.0, &T0);
        const CoframeGrid hp = make_example_coframe(ExampleCoframe::half_plane, nx,
                                                    {0.25, 0.5, 0.75, 1.0, 1.25});
        CHECK((fg.a1x.data == hp.a1x.data));
        CHECK((fg.kx.data == hp.kx.data));
    }
}

TEST_CASE("fefferman-graham domain") {
    const int nx = 32;
    const PeriodicFn T = PeriodicFn::constant(nx, 2.0);
    CHECK_THROWS_AS(make_example_coframe(ExampleCoframe::fefferman_graham, nx,
                                         {0.1, 0.5, 0.6, 0.7, 0.8}, 1.0, &T),
                    PreconditionError);
}

TEST_CASE("structure equations on the models") {
    const int nx = 64;
    const auto y = geometric_heights(0.05, 1.15, 20);
    {
        const auto sr = structure_residuals(make_example_coframe(ExampleCoframe::half_plane, nx, y));
        CHECK(sr.r1.max_abs_interior() < 1e-8);
        CHECK(sr.r2.max_abs_interior() < 1e-8);
        CHECK(max_K_err(sr, -1.0) < 1e-8);
    }
    {
        // disk on an annulus away from the chart center
        const auto ann = geometric_heights(0.05, 1.15, 20); // up to ~0.71 < 0.9
        const auto sr = structure_residuals(make_example_coframe(ExampleCoframe::disk, nx, ann));
        CHECK(sr.r1.max_abs_interior() < 1e-8);
        CHECK(max_K_err(sr, -1.0) < 1e-8);
    }
    {
        Rng rng(12);
        const PeriodicFn T = random_trig_poly(rng, nx, 2, 0.1, 0.0);
        const auto sr = structure_residuals(
            make_example_coframe(ExampleCoframe::fefferman_graham, nx, geometric_heights(0.05, 1.1, 18), 1.0, &T));
        CHECK(sr.r1.max_abs_interior() < 1e-7);
        CHECK(max_K_err(sr, -1.0) < 1e-6);
    }
}

TEST_CASE("cylinder coframe in the (x,u) chart") {
    // α₁ = cosh(u) ℓ dx, α₂ = -du, κ = -sinh(u) ℓ dx on a uniform u-grid.
    // Orientation is reversed (α₁∧α₂ < 0); curvature is chart-independent.
    const int nx = 32;
    const double ell = 1.0;
    const int ny = 96;
    std::vector<double> u(ny);
    for (int j = 0; j < ny; ++j) u[static_cast<std::size_t>(j)] = 0.1 + 1.9 * j / (ny - 1.0);
    Grid2D a1x(nx, u), a2y(nx, u), kx(nx, u), zero(nx, u);
    for (int j = 0; j < ny; ++j)
        for (int i = 0; i < nx; ++i) {
            a1x.at(j, i) = ell * std::cosh(u[static_cast<std::size_t>(j)]);
            a2y.at(j, i) = -1.0;
            kx.at(j, i) = -ell * std::sinh(u[static_cast<std::size_t>(j)]);
        }
    const CoframeGrid C(a1x, zero, zero, a2y, kx, zero);
    CHECK(C.orientation() == -1);
    const auto sr = structure_residuals(C);
    CHECK(max_K_err(sr, -1.0) < 1e-6);
    CHECK(sr.r1.max_abs_interior() < 1e-6);
    CHECK(sr.r2.max_abs_interior() < 1e-6);
}

TEST_CASE("orientation degeneracy is rejected") {
    const int nx = 32;
    const std::vector<double> y{0.2, 0.4, 0.6, 0.8, 1.0};
    Grid2D a1x(nx, y), a2y(nx, y), zero(nx, y);
    for (int j = 0; j < 5; ++j)
        for (int i = 0; i < nx; ++i) {
            a1x.at(j, i) = std::cos(kTwoPi * i / nx); // wedge changes sign
            a2y.at(j, i) = 1.0;
        }
    CHECK_THROWS_AS(CoframeGrid(a1x, zero, zero, a2y, zero, zero), PreconditionError);
}

TEST_CASE("connection curvature normalization") {
    // Euclidean coframe: K = 0, multiplier = K + 1 = 1.
    const int nx = 32;
    const std::vector<double> y{0.2, 0.4, 0.6, 0.8, 1.0};
    Grid2D one(nx, y), zero(nx, y);
    for (auto& v : one.data) v = 1.0;
    const CoframeGrid C(one, zero, zero, one, zero, zero);
    const Grid2D mult = connection_curvature(C);
    double e = 0.0;
    for (double v : mult.data) e = std::max(e, std::abs(v - 1.0));
    CHECK(e < 1e-12);
    // Hyperbolic models are flat.
    const CoframeGrid hp = make_example_coframe(ExampleCoframe::half_plane, nx,
                                                geometric_heights(0.05, 1.2, 12));
    CHECK(connection_curvature(hp).max_abs() < 1e-10);
}

TEST_CASE("boundary asymptotics of the models") {
    const int nx = 64;
    const auto y = geometric_heights(0.01, 1.15, 24);
    {
        const BoundaryAsymptotics b =
            boundary_asymptotics(make_example_coframe(ExampleCoframe::half_plane, nx, y));
        CHECK((b.a - 1.0).max_abs() < 1e-10);
        CHECK(b.s.max_abs() < 1e-10);
        CHECK(b.u.max_abs() < 1e-10);
    }
    {
        // Printed disk coframe: a = 1/2, s = 0, u = -1/2, so T = 1/4.
        const BoundaryAsymptotics b =
            boundary_asymptotics(make_example_coframe(ExampleCoframe::disk, nx, y));
        CHECK((b.a - 0.5).max_abs() < 1e-10);
        CHECK((b.u + 0.5).max_abs() < 1e-10);
        CHECK((hill_from_asu(BoundaryConnection(b.a, b.s, b.u)).T - 0.25).max_abs() < 1e-9);
    }
    {
        // Printed cylinder coframe: a = ℓ/2, s = 0, u = ℓ/2, so T = -ℓ²/4.
        const double ell = 2.0;
        const BoundaryAsymptotics b =
            boundary_asymptotics(make_example_coframe(ExampleCoframe::cylinder, nx, y, ell));
        CHECK((b.a - 0.5 * ell).max_abs() < 1e-10);
        CHECK((b.u - 0.5 * ell).max_abs() < 1e-10);
        CHECK((hill_from_asu(BoundaryConnection(b.a, b.s, b.u)).T + 0.25 * ell * ell).max_abs() <
              1e-9);
    }
    {
        Rng rng(9);
        const PeriodicFn T = random_trig_poly(rng, nx, 4, 0.3, 0.3);
        const BoundaryAsymptotics b = boundary_asymptotics(
            make_example_coframe(ExampleCoframe::fefferman_graham, nx, y, 1.0, &T));
        CHECK((b.a - 1.0).max_abs() < 1e-6);
        CHECK(b.s.max_abs() < 1e-6);
        CHECK((b.u + T).max_abs() < 1e-6);
    }
}

TEST_CASE("asymptotics preconditions") {
    const int nx = 32;
    // not adapted: α₂ᵧ = 2/y
    const auto y = geometric_heights(0.01, 1.15, 24);
    Grid2D a1x(nx, y), a2y(nx, y), kx(nx, y), zero(nx, y);
    for (int j = 0; j < a1x.ny(); ++j)
        for (int i = 0; i < nx; ++i) {
            a1x.at(j, i) = 1.0 / y[static_cast<std::size_t>(j)];
            a2y.at(j, i) = 2.0 / y[static_cast<std::size_t>(j)];
            kx.at(j, i) = -a1x.at(j, i);
        }
    CHECK_THROWS_AS(boundary_asymptotics(CoframeGrid(a1x, zero, zero, a2y, kx, zero)),
                    PreconditionError);
    // too few heights near the boundary
    CHECK_THROWS_AS(
        boundary_asymptotics(make_example_coframe(ExampleCoframe::half_plane, nx,
                                                  {0.2, 0.3, 0.4, 0.5, 0.6})),
        PreconditionError);
}

TEST_CASE("geodesic curvature of the identity chart is one") {
    const int nx = 64;
    const auto y = geometric_heights(0.05, 1.2, 10);
    Grid2D f(nx, y), g(nx, y);
    for (int j = 0; j < f.ny(); ++j)
        for (int i = 0; i < nx; ++i) {
            f.at(j, i) = static_cast<double>(i) / nx;
            g.at(j, i) = y[static_cast<std::size_t>(j)];
        }
    const Grid2D k = geodesic_curvature(f, g);
    double e = 0.0;
    for (double v : k.data) e = std::max(e, std::abs(v - 1.0));
    CHECK(e < 1e-12);
    CHECK_THROWS_AS(geodesic_curvature(f, exterior::d_x(g)), PreconditionError); // g = 0
}

TEST_CASE("curvature expansion coefficient matches the Taylor closed form") {
    // chart f = x + f0p + f2 y², g = g1 y with known generators
    const int nx = 256;
    const auto y = geometric_heights(0.002, 1.2, 8);
    const auto f0p_fn = [](double x) { return 0.05 * std::sin(kTwoPi * x); };
    const auto g1_fn = [](double x) { return 1.0 + 0.2 * std::cos(kTwoPi * x); };
    Grid2D f(nx, y), g(nx, y);
    for (int j = 0; j < f.ny(); ++j)
        for (int i = 0; i < nx; ++i) {
            const double x = static_cast<double>(i) / nx;
            f.at(j, i) = x + f0p_fn(x);
            g.at(j, i) = g1_fn(x) * y[static_cast<std::size_t>(j)];
        }
    const PeriodicFn c = curvature_limit(geodesic_curvature(f, g, 1));
    double e = 0.0;
    for (int i = 0; i < nx; ++i) {
        const double x = static_cast<double>(i) / nx;
        const double fp = 1.0 + 0.05 * kTwoPi * std::cos(kTwoPi * x);
        const double fpp = -0.05 * kTwoPi * kTwoPi * std::sin(kTwoPi * x);
        const double g1 = g1_fn(x);
        const double g1p = -0.2 * kTwoPi * std::sin(kTwoPi * x);
        const double g1pp = -0.2 * kTwoPi * kTwoPi * std::cos(kTwoPi * x);
        const double exact =
            g1 * g1pp / (fp * fp) - g1 * g1p * fpp / (fp * fp * fp) - 0.5 * g1p * g1p / (fp * fp);
        e = std::max(e, std::abs(c[i] - exact));
    }
    CHECK(e < 1e-6);
}

TEST_CASE("hill potential from curvature data") {
    const int n = 64;
    CHECK((hill_from_curvature(PeriodicFn::constant(n, 1.0), PeriodicFn::constant(n, 0.5)).T -
           0.25)
              .max_abs() < 1e-12);
    for (double ell : {0.5, 1.0, 2.0})
        CHECK((hill_from_curvature(PeriodicFn::constant(n, ell), PeriodicFn::constant(n, -0.5)).T +
               0.25 * ell * ell)
                  .max_abs() < 1e-12);
    CHECK_THROWS_AS(
        hill_from_curvature(PeriodicFn::constant(n, -1.0), PeriodicFn::constant(n, 0.5)),
        PreconditionError);
}

TEST_CASE("spin connection solver closes the structure equations") {
    const int nx = 64;
    const auto y = geometric_heights(0.05, 1.15, 16);
    const CoframeGrid hp = make_example_coframe(ExampleCoframe::half_plane, nx, y);
    auto [kx, ky] = solve_spin_connection(hp.a1x, hp.a1y, hp.a2x, hp.a2y);
    CHECK((kx.data == hp.kx.data ||
           [&] {
               double e = 0.0;
               for (std::size_t i = 0; i < kx.data.size(); ++i)
                   e = std::max(e, std::abs(kx.data[i] - hp.kx.data[i]));
               return e < 1e-10;
           }()));
}
