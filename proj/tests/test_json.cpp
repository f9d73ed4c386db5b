#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "virateich/json_io.hpp"
#include "virateich/rng.hpp"
#include "virateich/spectral.hpp"

using namespace virateich;
using io::json;

TEST_CASE("periodic function roundtrip") {
    Rng rng(1);
    const PeriodicFn f = random_trig_poly(rng, 64, 4, 0.5, 0.5, 2);
    const PeriodicFn g = io::decode_periodic_fn(io::encode(f), "f");
    CHECK(g.size() == f.size());
    CHECK(g.weight() == 2);
    CHECK((f - g).max_abs() == 0.0);
}

TEST_CASE("diffeo and trumpet point roundtrip") {
    Rng rng(2);
    const DiffeoLift F = random_diffeo(rng, 64);
    const DiffeoLift G = io::decode_diffeo(io::encode(F), "F");
    CHECK(G.winding() == F.winding());
    CHECK((G.periodic_part() - F.periodic_part()).max_abs() == 0.0);

    const TrumpetPoint p(1.25, F);
    const TrumpetPoint q = io::decode_trumpet_point(io::encode(p), "p");
    CHECK(q.ell == 1.25);
}

TEST_CASE("fn point roundtrip") {
    const int n = 64;
    std::vector<TrumpetPoint> b;
    b.emplace_back(1.0, DiffeoLift::identity(n));
    b.emplace_back(2.0, DiffeoLift::rotation(n, 0.25));
    const FNPoint p(1, {{1.5, -0.5}, {0.7, 0.1}}, b);
    const FNPoint q = io::decode_fn_point(io::encode(p), "p");
    CHECK(q.genus == 1);
    CHECK(q.boundary_count() == 2);
    CHECK(q.interior[0][0] == 1.5);
    CHECK(q.boundary[1].ell == 2.0);
}

TEST_CASE("schema errors carry the field path") {
    json j = io::encode(PeriodicFn::constant(64, 1.0));
    j.erase("values");
    try {
        io::decode_periodic_fn(j, "input");
        FAIL("expected SchemaError");
    } catch (const SchemaError& e) {
        CHECK(e.path == "input.values");
    }

    json bad = io::encode(PeriodicFn::constant(64, 1.0));
    bad["values"][3] = "oops";
    try {
        io::decode_periodic_fn(bad, "input");
        FAIL("expected SchemaError");
    } catch (const SchemaError& e) {
        CHECK(e.path == "input.values[3]");
    }

    json short_values = io::encode(PeriodicFn::constant(64, 1.0));
    short_values["n"] = 128;
    CHECK_THROWS_AS(io::decode_periodic_fn(short_values, "input"), SchemaError);

    // invariant violations surface as schema errors with the input path
    json tiny = json{{"n", 8}, {"weight", 0}, {"values", std::vector<double>(8, 0.0)}};
    CHECK_THROWS_AS(io::decode_periodic_fn(tiny, "input"), SchemaError);
}

TEST_CASE("monodromy record fields") {
    const Monodromy m = monodromy(HillPotential{PeriodicFn::constant(256, -1.0, 2)});
    const json j = io::encode(m);
    CHECK(j["class"] == "hyperbolic");
    CHECK(j["trace"].get<double>() == doctest::Approx(2.0 * std::cosh(1.0)).epsilon(1e-9));
    CHECK(j["det"].get<double>() == doctest::Approx(1.0).epsilon(1e-9));
    CHECK(j["matrix"].size() == 2);
}

TEST_CASE("grid roundtrip") {
    Grid2D g(32, {0.1, 0.2, 0.4});
    for (std::size_t k = 0; k < g.data.size(); ++k) g.data[k] = static_cast<double>(k);
    const Grid2D h = io::decode_grid(io::encode(g), "g");
    CHECK(h.nx == 32);
    CHECK(h.y == g.y);
    CHECK(h.data == g.data);
}
