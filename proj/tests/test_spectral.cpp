#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "virateich/rng.hpp"
#include "virateich/diffeo.hpp"
#include "virateich/spectral.hpp"

using namespace virateich;

namespace {

double max_err(const PeriodicFn& f, double (*g)(double)) {
    double e = 0.0;
    for (int k = 0; k < f.size(); ++k)
        e = std::max(e, std::abs(f[k] - g(static_cast<double>(k) / f.size())));
    return e;
}

} // namespace

TEST_CASE("sample count invariant") {
    CHECK_THROWS_AS(PeriodicFn::constant(8, 1.0), PreconditionError);
    CHECK_THROWS_AS(PeriodicFn::constant(100, 1.0), PreconditionError);
    CHECK_THROWS_AS(PeriodicFn(std::vector<double>(32, std::nan(""))), PreconditionError);
    CHECK_NOTHROW(PeriodicFn::constant(16, 0.0));
}

TEST_CASE("derivative of band-limited input is exact") {
    const int n = 64;
    const auto f = PeriodicFn::sample(n, [](double x) { return std::sin(kTwoPi * x); });
    const PeriodicFn df = derivative(f, 1);
    CHECK(max_err(df, [](double x) { return kTwoPi * std::cos(kTwoPi * x); }) < 1e-12);
    CHECK(df.weight() == 1);

    const PeriodicFn dc = derivative(PeriodicFn::constant(n, 3.7), 4);
    CHECK(dc.max_abs() < 1e-12);
}

TEST_CASE("second derivative against symbolic differentiation") {
    // f = sin(2πx) + 0.3 cos(4πx) -> f'' = -(2π)² sin(2πx) - 0.3 (4π)² cos(4πx)
    const int n = 64;
    const auto f = PeriodicFn::sample(
        n, [](double x) { return std::sin(kTwoPi * x) + 0.3 * std::cos(2.0 * kTwoPi * x); });
    const PeriodicFn d2 = derivative(f, 2);
    CHECK(max_err(d2, [](double x) {
              return -kTwoPi * kTwoPi * std::sin(kTwoPi * x) -
                     0.3 * 4.0 * kTwoPi * kTwoPi * std::cos(2.0 * kTwoPi * x);
          }) < 1e-11);
}

TEST_CASE("repeated differentiation agrees with the higher order") {
    Rng rng(11);
    const PeriodicFn f = random_trig_poly(rng, 256, 4, 0.5, 0.5);
    CHECK((derivative(derivative(f, 1), 1) - derivative(f, 2)).max_abs() < 1e-10);
}

TEST_CASE("integral") {
    const int n = 64;
    CHECK(integral(PeriodicFn::constant(n, 1.0)) == doctest::Approx(1.0).epsilon(1e-15));
    const auto s = PeriodicFn::sample(n, [](double x) { return std::sin(kTwoPi * x); });
    CHECK(std::abs(integral(s)) < 1e-12);

    // F' integrates to one for any lift.
    Rng rng(5);
    const DiffeoLift F = random_diffeo(rng, 256);
    CHECK(std::abs(integral(F.dlift()) - 1.0) < 1e-12);
    CHECK(std::abs(integral(derivative(random_trig_poly(rng, 256, 4, 0.5, 0.5), 1))) < 1e-12);
}

TEST_CASE("interpolation") {
    const int n = 64;
    const auto c = PeriodicFn::sample(n, [](double x) { return std::cos(kTwoPi * x); });
    CHECK(std::abs(interpolate(c, 0.25)) < 1e-12);

    const auto s = PeriodicFn::sample(n, [](double x) { return std::sin(kTwoPi * x); });
    CHECK(interpolate(s, 1.0 / 12.0) == doctest::Approx(0.5).epsilon(1e-12));

    Rng rng(2);
    const PeriodicFn f = random_trig_poly(rng, n, 4, 0.5, 0.5);
    double e = 0.0;
    for (int k = 0; k < n; ++k)
        e = std::max(e, std::abs(interpolate(f, static_cast<double>(k) / n) - f[k]));
    CHECK(e < 1e-12);

    // mod-1 reduction
    CHECK(interpolate(s, 7.0 + 1.0 / 12.0) == doctest::Approx(0.5).epsilon(1e-11));
}

TEST_CASE("fourier coefficients and reconstruction") {
    const int n = 64;
    const FourierCoeffs one = fourier(PeriodicFn::constant(n, 1.0), 10);
    CHECK(one.mode(0).real() == doctest::Approx(1.0).epsilon(1e-15));
    for (int m = 1; m <= 10; ++m) CHECK(std::abs(one.mode(m)) < 1e-14);

    const auto c = PeriodicFn::sample(n, [](double x) { return std::cos(kTwoPi * x); });
    const FourierCoeffs fc = fourier(c, 4);
    CHECK(fc.mode(1).real() == doctest::Approx(0.5).epsilon(1e-13));
    CHECK(std::abs(fc.mode(1).imag()) < 1e-13);
    CHECK(fc.mode(-1) == std::conj(fc.mode(1)));

    Rng rng(8);
    const PeriodicFn f = random_trig_poly(rng, n, 4, 0.5, 0.5);
    const PeriodicFn back = inverse_fourier(fourier(f, 8), n);
    CHECK((back - f).max_abs() < 1e-12);

    CHECK_THROWS_AS(fourier(f, n / 2), PreconditionError);
}

TEST_CASE("parseval pairing") {
    const int n = 128;
    Rng rng(4);
    const PeriodicFn f = random_trig_poly(rng, n, 4, 0.5, 0.5);
    const PeriodicFn g = random_trig_poly(rng, n, 4, 0.5, 0.5);
    const FourierCoeffs cf = fourier(f, 8), cg = fourier(g, 8);
    std::complex<double> acc = 0.0;
    for (int m = -8; m <= 8; ++m) acc += cf.mode(m) * std::conj(cg.mode(m));
    CHECK(std::abs(integral(f * g) - acc.real()) < 1e-10);
    CHECK(std::abs(acc.imag()) < 1e-12);
}

TEST_CASE("mean-zero antiderivative") {
    const int n = 64;
    const auto c = PeriodicFn::sample(n, [](double x) { return std::cos(kTwoPi * x); });
    const PeriodicFn F = antiderivative_meanzero(c);
    CHECK(max_err(F, [](double x) { return std::sin(kTwoPi * x) / kTwoPi; }) < 1e-13);
    CHECK(antiderivative_meanzero(PeriodicFn::constant(n, 0.0)).max_abs() < 1e-14);

    Rng rng(9);
    PeriodicFn f = random_trig_poly(rng, 256, 4, 0.5);
    f = f - f.mean();
    CHECK((derivative(antiderivative_meanzero(f), 1) - f).max_abs() < 1e-10);

    CHECK_THROWS_WITH_AS(static_cast<void>(antiderivative_meanzero(PeriodicFn::constant(n, 0.5))),
                         doctest::Contains("0.5"), PreconditionError);
}

TEST_CASE("band-limited resampling") {
    const int n = 64;
    Rng rng(3);
    const PeriodicFn f = random_trig_poly(rng, n, 4, 0.5, 0.5);
    const PeriodicFn up = resample(f, 4 * n);
    const TrigInterpolant ip(f);
    double e = 0.0;
    for (int k = 0; k < 4 * n; ++k)
        e = std::max(e, std::abs(up[k] - ip(static_cast<double>(k) / (4 * n))));
    CHECK(e < 1e-12);
}
