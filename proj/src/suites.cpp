// Seeded verification suites.  Each check reports the maximum residual over
// its trials against a fixed gate; gates scale uniformly with
// SuiteOptions::tol_scale.  Trials run under OpenMP with a max-reduction and
// per-trial RNG streams, so report content does not depend on the thread
// count.

#include "virateich/suites.hpp"

#include <Eigen/Dense>
#include <Eigen/SVD>

#include <chrono>
#include <cmath>
#include <functional>
#include <limits>
#include <ostream>

#include "virateich/coframe.hpp"
#include "virateich/groupoid.hpp"
#include "virateich/hill.hpp"
#include "virateich/rng.hpp"
#include "virateich/spectral.hpp"
#include "virateich/teich.hpp"
#include "virateich/trumpet.hpp"

namespace virateich {

bool SuiteReport::passed() const {
    for (const CheckResult& c : checks)
        if (!c.pass) return false;
    return true;
}

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

struct Ctx {
    int n;
    int trials; // 0 = per-check default
    std::uint64_t seed;
    double tol_scale;
    std::vector<CheckResult>* out;
};

void run_check(const Ctx& ctx, const std::string& name, double tol, int default_trials,
               const std::function<double(Rng&, int)>& residual) {
    const int trials = ctx.trials > 0 ? ctx.trials : default_trials;
    const auto t0 = std::chrono::steady_clock::now();
    double worst = 0.0;
    std::string note;
#pragma omp parallel for schedule(dynamic) reduction(max : worst)
    for (int t = 0; t < trials; ++t) {
        double r;
        try {
            Rng rng = Rng::for_trial(ctx.seed, static_cast<std::uint64_t>(t));
            r = residual(rng, t);
        } catch (const std::exception& e) {
            r = kInf;
#pragma omp critical(virateich_suite_note)
            if (note.empty()) note = e.what();
        }
        worst = std::max(worst, r);
    }
    const auto t1 = std::chrono::steady_clock::now();
    CheckResult res;
    res.name = name;
    res.max_residual = worst;
    res.tolerance = tol * ctx.tol_scale;
    res.trials = trials;
    res.pass = worst <= res.tolerance;
    res.wall_ms = std::chrono::duration<double, std::milli>(t1 - t0).count();
    res.note = std::move(note);
    ctx.out->push_back(std::move(res));
}

PeriodicFn random_potential(Rng& rng, int n) { return random_trig_poly(rng, n, 4, 0.5, 0.5, 2); }

BoundaryConnection random_positive_connection(Rng& rng, int n) {
    PeriodicFn a = random_smooth_positive(rng, n, 0.4);
    PeriodicFn s = random_trig_poly(rng, n, 4, 0.5, 0.3);
    PeriodicFn u = random_trig_poly(rng, n, 4, 0.5, 0.3);
    return BoundaryConnection(std::move(a), std::move(s), std::move(u));
}

GaugeMap random_gauge(Rng& rng, int n) {
    // [[1,0],[p,1]]·diag(e^q, e^-q)·[[1,r],[0,1]]: unit determinant by construction.
    const PeriodicFn p = random_trig_poly(rng, n, 3, 0.3);
    const PeriodicFn q = random_trig_poly(rng, n, 3, 0.3);
    const PeriodicFn r = random_trig_poly(rng, n, 3, 0.3);
    std::vector<double> g11(static_cast<std::size_t>(n)), g12(static_cast<std::size_t>(n)),
        g21(static_cast<std::size_t>(n)), g22(static_cast<std::size_t>(n));
    for (int k = 0; k < n; ++k) {
        const double eq = std::exp(q[k]);
        g11[static_cast<std::size_t>(k)] = eq;
        g12[static_cast<std::size_t>(k)] = eq * r[k];
        g21[static_cast<std::size_t>(k)] = p[k] * eq;
        g22[static_cast<std::size_t>(k)] = p[k] * eq * r[k] + 1.0 / eq;
    }
    return GaugeMap(PeriodicFn(std::move(g11)), PeriodicFn(std::move(g12)),
                    PeriodicFn(std::move(g21)), PeriodicFn(std::move(g22)));
}

TrumpetTangent random_tangent(Rng& rng, int n, double amp = 0.5, int modes = 4) {
    return TrumpetTangent{rng.uniform(-1.0, 1.0), random_trig_poly(rng, n, modes, amp, amp)};
}

double max_diff(const PeriodicFn& a, const PeriodicFn& b) { return (a - b).max_abs(); }

// Lift-level comparison: the canonical (φ, winding) split is unstable when
// φ(0) sits at an integer, so compare F̃ = x + φ + winding directly.
double diffeo_diff(const DiffeoLift& A, const DiffeoLift& B) {
    const double dw = static_cast<double>(A.winding() - B.winding());
    double r = 0.0;
    for (int k = 0; k < A.size(); ++k)
        r = std::max(r, std::abs(A.periodic_part()[k] - B.periodic_part()[k] + dw));
    return r;
}

// ---------------------------------------------------------------- diffeo ---

void suite_diffeo(const Ctx& ctx) {
    const int n = ctx.n;

    run_check(ctx, "group laws (assoc, unit, inverse)", 1e-8, 50, [n](Rng& rng, int) {
        const DiffeoLift F = random_diffeo(rng, n), G = random_diffeo(rng, n),
                         H = random_diffeo(rng, n);
        const DiffeoLift id = DiffeoLift::identity(n);
        double r = diffeo_diff(compose(compose(F, G), H), compose(F, compose(G, H)));
        r = std::max(r, diffeo_diff(compose(F, id), F));
        r = std::max(r, diffeo_diff(compose(id, F), F));
        const DiffeoLift Fi = invert(F);
        r = std::max(r, diffeo_diff(compose(F, Fi), id));
        r = std::max(r, diffeo_diff(compose(Fi, F), id));
        return r;
    });

    run_check(ctx, "invert is an involution", 1e-8, 50, [n](Rng& rng, int) {
        const DiffeoLift F = random_diffeo(rng, n);
        return diffeo_diff(invert(invert(F)), F);
    });

    run_check(ctx, "rotation subgroup", 1e-12, 20, [n](Rng& rng, int) {
        const double t = rng.uniform(0.0, 1.0), s = rng.uniform(0.0, 1.0);
        double r = diffeo_diff(compose(DiffeoLift::rotation(n, t), DiffeoLift::rotation(n, s)),
                               DiffeoLift::rotation(n, t + s));
        r = std::max(r,
                     diffeo_diff(invert(DiffeoLift::rotation(n, t)), DiffeoLift::rotation(n, -t)));
        return r;
    });

    run_check(ctx, "schwarzian cocycle", 1e-7, 100, [n](Rng& rng, int) {
        const DiffeoLift F = random_diffeo(rng, n), G = random_diffeo(rng, n);
        const PeriodicFn lhs = schwarzian(compose(F, G));
        const PeriodicFn Gp = G.dlift();
        const std::vector<double> SFoG = interpolate(schwarzian(F), G.lift_values());
        PeriodicFn SG = schwarzian(G);
        std::vector<double> v(SG.values());
        for (int k = 0; k < n; ++k)
            v[static_cast<std::size_t>(k)] += Gp[k] * Gp[k] * SFoG[static_cast<std::size_t>(k)];
        return max_diff(lhs, PeriodicFn(std::move(v), 2));
    });

    run_check(ctx, "schwarzian kernel = rotations", 1e-8, 20, [n](Rng& rng, int) {
        double r = schwarzian(DiffeoLift::rotation(n, rng.uniform(0.0, 1.0))).max_abs();
        // Converse: a flat Schwarzian must mean a rotation.
        const DiffeoLift F = random_diffeo(rng, n);
        if (schwarzian(F).max_abs() < 1e-8) {
            const PeriodicFn& phi = F.periodic_part();
            if ((phi - phi.mean()).max_abs() >= 1e-6) r = std::max(r, 1.0);
        }
        return r;
    });

    run_check(ctx, "hill action composition law", 1e-7, 100, [n](Rng& rng, int) {
        const DiffeoLift F = random_diffeo(rng, n), G = random_diffeo(rng, n);
        const HillPotential T{random_potential(rng, n)};
        return max_diff(act_on_hill(G, act_on_hill(F, T)).T, act_on_hill(compose(F, G), T).T);
    });

    run_check(ctx, "hill action affine in T", 1e-8, 50, [n](Rng& rng, int) {
        const DiffeoLift F = random_diffeo(rng, n);
        const HillPotential T1{random_potential(rng, n)}, T2{random_potential(rng, n)};
        const PeriodicFn lhs = act_on_hill(F, T1).T - act_on_hill(F, T2).T;
        const PeriodicFn Fp = F.dlift();
        const std::vector<double> dT = interpolate(T1.T - T2.T, F.lift_values());
        std::vector<double> rhs(static_cast<std::size_t>(n));
        for (int k = 0; k < n; ++k)
            rhs[static_cast<std::size_t>(k)] = Fp[k] * Fp[k] * dT[static_cast<std::size_t>(k)];
        return max_diff(lhs, PeriodicFn(std::move(rhs), 2));
    });

    run_check(ctx, "left-invariant variation vs flow", 1e-6, 25, [n](Rng& rng, int) {
        const DiffeoLift F = random_diffeo(rng, n);
        const PeriodicFn f = random_trig_poly(rng, n, 4, 0.4);
        const PeriodicFn expected = left_invariant_vector(F, f);
        const TrigInterpolant fi(f);
        const auto flow = [&](double t) {
            const int steps = 16;
            const double h = t / steps;
            return DiffeoLift::from_periodic_part(PeriodicFn::sample(n, [&](double x0) {
                double x = x0;
                for (int s = 0; s < steps; ++s) {
                    const double k1 = -fi(x);
                    const double k2 = -fi(x + 0.5 * h * k1);
                    const double k3 = -fi(x + 0.5 * h * k2);
                    const double k4 = -fi(x + h * k3);
                    x += h / 6.0 * (k1 + 2.0 * k2 + 2.0 * k3 + k4);
                }
                return x - x0;
            }));
        };
        const double h = 1e-4;
        const DiffeoLift Fp = compose(F, flow(h));
        const DiffeoLift Fm = compose(F, flow(-h));
        double r = 0.0;
        for (int k = 0; k < n; ++k) {
            const double d = ((Fp.periodic_part()[k] + Fp.winding()) -
                              (Fm.periodic_part()[k] + Fm.winding())) /
                             (2.0 * h);
            r = std::max(r, std::abs(d - expected[k]));
        }
        return r;
    });
}

// ------------------------------------------------------------------ hill ---

void suite_hill(const Ctx& ctx) {
    const int n = ctx.n;

    run_check(ctx, "model potentials (disk 1/4, trumpet -l^2/4)", 1e-10, 1, [n](Rng&, int) {
        double r = 0.0;
        const auto probe = [&](double u, double expected) {
            const BoundaryConnection A(PeriodicFn::constant(n, 1.0), PeriodicFn::constant(n, 0.0),
                                       PeriodicFn::constant(n, u));
            r = std::max(r, (hill_from_asu(A).T - expected).max_abs());
            r = std::max(r, (ds_normalize(A).second.T - expected).max_abs());
        };
        probe(-0.25, 0.25);
        for (double ell : {0.5, 1.0, 2.0}) probe(0.25 * ell * ell, -0.25 * ell * ell);
        return r;
    });

    run_check(ctx, "normal form vs direct formula", 1e-8, 100, [n](Rng& rng, int) {
        const BoundaryConnection A = random_positive_connection(rng, n);
        return max_diff(ds_normalize(A).second.T, hill_from_asu(A).T);
    });

    run_check(ctx, "normalization is idempotent", 1e-9, 50, [n](Rng& rng, int) {
        const BoundaryConnection A = random_positive_connection(rng, n);
        const HillPotential T = ds_normalize(A).second;
        const GaugeMap h = ds_normalize(ds_connection(T)).first;
        double r = 0.0;
        for (int k = 0; k < n; ++k) {
            r = std::max(r, std::abs(h.g11[k] - 1.0));
            r = std::max(r, std::abs(h.g12[k]));
            r = std::max(r, std::abs(h.g21[k]));
            r = std::max(r, std::abs(h.g22[k] - 1.0));
        }
        return r;
    });

    run_check(ctx, "gauge action is a left action", 1e-8, 50, [n](Rng& rng, int) {
        const BoundaryConnection A = random_positive_connection(rng, n);
        const GaugeMap h1 = random_gauge(rng, n), h2 = random_gauge(rng, n);
        std::vector<double> g11(static_cast<std::size_t>(n)), g12(static_cast<std::size_t>(n)),
            g21(static_cast<std::size_t>(n)), g22(static_cast<std::size_t>(n));
        for (int k = 0; k < n; ++k) {
            g11[static_cast<std::size_t>(k)] = h1.g11[k] * h2.g11[k] + h1.g12[k] * h2.g21[k];
            g12[static_cast<std::size_t>(k)] = h1.g11[k] * h2.g12[k] + h1.g12[k] * h2.g22[k];
            g21[static_cast<std::size_t>(k)] = h1.g21[k] * h2.g11[k] + h1.g22[k] * h2.g21[k];
            g22[static_cast<std::size_t>(k)] = h1.g21[k] * h2.g12[k] + h1.g22[k] * h2.g22[k];
        }
        const GaugeMap h12(PeriodicFn(std::move(g11)), PeriodicFn(std::move(g12)),
                           PeriodicFn(std::move(g21)), PeriodicFn(std::move(g22)));
        const BoundaryConnection lhs = gauge_transform(h12, A);
        const BoundaryConnection rhs = gauge_transform(h1, gauge_transform(h2, A));
        return std::max({max_diff(lhs.a, rhs.a), max_diff(lhs.s, rhs.s), max_diff(lhs.u, rhs.u)});
    });

    run_check(ctx, "constant diagonal gauge scaling", 1e-10, 20, [n](Rng& rng, int) {
        const BoundaryConnection A = random_positive_connection(rng, n);
        const double lam = std::exp(rng.uniform(-0.5, 0.5));
        const GaugeMap h(PeriodicFn::constant(n, lam), PeriodicFn::constant(n, 0.0),
                         PeriodicFn::constant(n, 0.0), PeriodicFn::constant(n, 1.0 / lam));
        const BoundaryConnection B = gauge_transform(h, A);
        double r = max_diff(B.a, lam * lam * A.a);
        r = std::max(r, max_diff(B.u, (1.0 / (lam * lam)) * A.u));
        r = std::max(r, max_diff(B.s, A.s));
        return r;
    });

    run_check(ctx, "splitting gauge equivariance", 1e-7, 50, [n](Rng& rng, int) {
        const DiffeoLift F = random_diffeo(rng, n);
        const HillPotential T{random_potential(rng, n)};
        const BoundaryConnection lhs =
            gauge_transform(ds_splitting_gauge(F), pullback(F, ds_connection(T)));
        const BoundaryConnection rhs = ds_connection(act_on_hill(F, T));
        return std::max({max_diff(lhs.a, rhs.a), max_diff(lhs.s, rhs.s), max_diff(lhs.u, rhs.u)});
    });

    run_check(ctx, "hat moment weak pairing", 1e-8, 50, [n](Rng& rng, int) {
        const BoundaryConnection A = random_positive_connection(rng, n);
        const PeriodicFn f = random_trig_poly(rng, n, 4, 0.5);
        const PeriodicFn fp = derivative(f, 1), fpp = derivative(f, 2);
        const double lhs = integral(hat_moment(A) * f);
        const PeriodicFn weak =
            0.5 * (A.s * fp) - 0.5 * (A.a * fpp) + 0.25 * (A.s * A.s * f) + A.a * A.u * f;
        return std::abs(lhs - integral(weak));
    });

    run_check(ctx, "hat moment on the normal-form slice", 1e-10, 20, [n](Rng& rng, int) {
        const HillPotential T{random_potential(rng, n)};
        return max_diff(hat_moment(ds_connection(T)), (-1.0 * T.T).with_weight(2));
    });

    run_check(ctx, "monodromy closed forms", 1e-8, 1, [n](Rng&, int) {
        double r = 0.0;
        for (double ell : {0.5, 1.0, 2.0}) {
            const Monodromy m =
                monodromy(HillPotential{PeriodicFn::constant(n, -0.25 * ell * ell, 2)});
            r = std::max(r, std::abs(m.trace - 2.0 * std::cosh(0.5 * ell)));
            if (m.orbit_class != Monodromy::OrbitClass::hyperbolic) r = std::max(r, 1.0);
        }
        const Monodromy flat = monodromy(HillPotential{PeriodicFn::constant(n, 0.0, 2)});
        r = std::max(r, std::abs(flat.trace - 2.0));
        if (flat.orbit_class != Monodromy::OrbitClass::parabolic) r = std::max(r, 1.0);
        return r;
    });

    run_check(ctx, "monodromy trace invariance", 1e-6, 50, [n](Rng& rng, int) {
        const HillPotential T{random_potential(rng, n)};
        const DiffeoLift F = random_diffeo(rng, n);
        return std::abs(monodromy(T).trace - monodromy(act_on_hill(F, T)).trace);
    });

    run_check(ctx, "neck length recovery", 1e-5, 50, [n](Rng& rng, int) {
        const double ell = rng.uniform(0.5, 2.5);
        const DiffeoLift F = random_diffeo(rng, n);
        const HillPotential T =
            act_on_hill(F, HillPotential{PeriodicFn::constant(n, -0.25 * ell * ell, 2)});
        return std::abs(2.0 * std::acosh(0.5 * monodromy(T).trace) - ell);
    });
}

// --------------------------------------------------------------- coframe ---

CoframeGrid chart_coframe(const Grid2D& g, const Grid2D& fx, const Grid2D& fy, const Grid2D& gx,
                          const Grid2D& gy) {
    // α₁ = df/g, α₂ = dg/g, κ = -α₁ (isometry charts have vanishing u-part).
    const int nx = g.nx;
    Grid2D a1x(nx, g.y), a1y(nx, g.y), a2x(nx, g.y), a2y(nx, g.y), kx(nx, g.y), ky(nx, g.y);
    for (std::size_t k = 0; k < g.data.size(); ++k) {
        a1x.data[k] = fx.data[k] / g.data[k];
        a1y.data[k] = fy.data[k] / g.data[k];
        a2x.data[k] = gx.data[k] / g.data[k];
        a2y.data[k] = gy.data[k] / g.data[k];
        kx.data[k] = -a1x.data[k];
        ky.data[k] = -a1y.data[k];
    }
    return CoframeGrid(std::move(a1x), std::move(a1y), std::move(a2x), std::move(a2y),
                       std::move(kx), std::move(ky));
}

std::vector<CoframeGrid> model_coframes(int n, const std::vector<double>& y,
                                        const PeriodicFn& T) {
    std::vector<CoframeGrid> frames;
    frames.push_back(make_example_coframe(ExampleCoframe::half_plane, n, y));
    frames.push_back(make_example_coframe(ExampleCoframe::disk, n, y));
    frames.push_back(make_example_coframe(ExampleCoframe::cylinder, n, y, 1.0));
    frames.push_back(make_example_coframe(ExampleCoframe::fefferman_graham, n, y, 1.0, &T));
    return frames;
}

void suite_coframe(const Ctx& ctx) {
    const int n = ctx.n;
    const std::vector<double> deep = geometric_heights(0.05, 1.15, 20); // up to ~0.71
    const std::vector<double> near = geometric_heights(0.01, 1.15, 24); // up to ~0.25
    const std::uint64_t seed = ctx.seed;

    run_check(ctx, "model coframes: structure equations", 1e-7, 1, [=](Rng&, int) {
        Rng prng(seed);
        const PeriodicFn T = random_trig_poly(prng, n, 4, 0.3, 0.3);
        double r = 0.0;
        for (const CoframeGrid& C : model_coframes(n, deep, T)) {
            const StructureResiduals sr = structure_residuals(C);
            r = std::max({r, sr.r1.max_abs_interior(), sr.r2.max_abs_interior()});
        }
        return r;
    });

    run_check(ctx, "model coframes: Gauss curvature -1", 1e-6, 1, [=](Rng&, int) {
        Rng prng(seed);
        const PeriodicFn T = random_trig_poly(prng, n, 4, 0.3, 0.3);
        double r = 0.0;
        for (const CoframeGrid& C : model_coframes(n, deep, T)) {
            const Grid2D K = structure_residuals(C).K;
            for (int j = 2; j < K.ny() - 2; ++j)
                for (int i = 0; i < K.nx; ++i) r = std::max(r, std::abs(K.at(j, i) + 1.0));
        }
        return r;
    });

    run_check(ctx, "model coframes: flat connection", 1e-7, 1, [=](Rng&, int) {
        Rng prng(seed);
        const PeriodicFn T = random_trig_poly(prng, n, 4, 0.3, 0.3);
        double r = 0.0;
        for (const CoframeGrid& C : model_coframes(n, deep, T))
            r = std::max(r, connection_curvature(C).max_abs_interior());
        return r;
    });

    run_check(ctx, "curvature multiplier equals K+1", 1e-7, 25, [=](Rng& rng, int) {
        // Regular random perturbation of the half-plane coframe; the spin
        // connection is solved from the first two structure equations, so the
        // off-pattern components stay at roundoff.
        const double eps = 0.05;
        const auto poly = [&](Rng& r2) {
            const PeriodicFn p0 = random_trig_poly(r2, n, 3, 0.5, 0.5);
            const PeriodicFn p1 = random_trig_poly(r2, n, 3, 0.5, 0.5);
            const PeriodicFn p2 = random_trig_poly(r2, n, 3, 0.5, 0.5);
            Grid2D out(n, deep);
            for (int j = 0; j < out.ny(); ++j) {
                const double yj = deep[static_cast<std::size_t>(j)];
                for (int i = 0; i < n; ++i) out.at(j, i) = p0[i] + p1[i] * yj + p2[i] * yj * yj;
            }
            return out;
        };
        Grid2D a1x = poly(rng), a1y = poly(rng), a2x = poly(rng), a2y = poly(rng);
        for (int j = 0; j < a1x.ny(); ++j) {
            const double yj = deep[static_cast<std::size_t>(j)];
            for (int i = 0; i < n; ++i) {
                a1x.at(j, i) = 1.0 / yj + eps * a1x.at(j, i);
                a1y.at(j, i) = eps * a1y.at(j, i);
                a2x.at(j, i) = eps * a2x.at(j, i);
                a2y.at(j, i) = 1.0 / yj + eps * a2y.at(j, i);
            }
        }
        auto [kx, ky] = solve_spin_connection(a1x, a1y, a2x, a2y);
        const CoframeGrid C(std::move(a1x), std::move(a1y), std::move(a2x), std::move(a2y),
                            std::move(kx), std::move(ky));
        const Grid2D K = structure_residuals(C).K;
        const Grid2D mult = connection_curvature(C);
        double r = 0.0;
        for (std::size_t k = 0; k < K.data.size(); ++k)
            r = std::max(r, std::abs(mult.data[k] - (K.data[k] + 1.0)));
        return r;
    });

    run_check(ctx, "boundary pipeline: model potentials", 1e-5, 1, [=](Rng&, int) {
        double r = 0.0;
        {
            const CoframeGrid C = make_example_coframe(ExampleCoframe::disk, n, near);
            const BoundaryAsymptotics b = boundary_asymptotics(C);
            r = std::max(r, (hill_from_asu(BoundaryConnection(b.a, b.s, b.u)).T - 0.25).max_abs());
        }
        for (double ell : {0.5, 1.0, 2.0}) {
            const CoframeGrid C = make_example_coframe(ExampleCoframe::cylinder, n, near, ell);
            const BoundaryAsymptotics b = boundary_asymptotics(C);
            r = std::max(r, (hill_from_asu(BoundaryConnection(b.a, b.s, b.u)).T +
                             0.25 * ell * ell)
                                .max_abs());
        }
        return r;
    });

    run_check(ctx, "boundary pipeline: Fefferman-Graham expansion", 1e-6, 25,
              [=](Rng& rng, int) {
                  const PeriodicFn T = random_trig_poly(rng, n, 4, 0.3, 0.3);
                  const CoframeGrid C =
                      make_example_coframe(ExampleCoframe::fefferman_graham, n, near, 1.0, &T);
                  const BoundaryAsymptotics b = boundary_asymptotics(C);
                  double r = (b.a - 1.0).max_abs();
                  r = std::max(r, b.s.max_abs());
                  r = std::max(r, max_diff(b.u, -1.0 * T));
                  r = std::max(r,
                               max_diff(hill_from_asu(BoundaryConnection(b.a, b.s, b.u)).T, T));
                  return r;
              });

    run_check(ctx, "two Hill routes on u=0 data", 1e-6, 50, [n](Rng& rng, int) {
        const PeriodicFn a = random_smooth_positive(rng, n, 0.4);
        const PeriodicFn s = random_trig_poly(rng, n, 4, 0.5, 0.3);
        const HillPotential t1 =
            hill_from_asu(BoundaryConnection(a, s, PeriodicFn::constant(n, 0.0)));
        const PeriodicFn da = derivative(a, 1), ds = derivative(s, 1);
        std::vector<double> cv(static_cast<std::size_t>(n));
        for (int k = 0; k < n; ++k)
            cv[static_cast<std::size_t>(k)] =
                (ds[k] - da[k] / a[k] * s[k] - 0.5 * s[k] * s[k]) / (a[k] * a[k]);
        const HillPotential t2 = hill_from_curvature(a, PeriodicFn(std::move(cv)));
        return max_diff(t1.T, t2.T);
    });

    run_check(ctx, "geodesic curvature: identity chart", 1e-12, 1, [=](Rng&, int) {
        Grid2D f(n, deep), g(n, deep);
        for (int j = 0; j < f.ny(); ++j)
            for (int i = 0; i < n; ++i) {
                f.at(j, i) = static_cast<double>(i) / n;
                g.at(j, i) = deep[static_cast<std::size_t>(j)];
            }
        const Grid2D k = geodesic_curvature(f, g);
        double r = 0.0;
        for (double v : k.data) r = std::max(r, std::abs(v - 1.0));
        return r;
    });

    run_check(ctx, "geodesic curvature: semicircles", 1e-9, 10, [=](Rng& rng, int) {
        // Row curves trace a circle centered on the axis (a geodesic), so
        // k = 0 wherever the parametrization θ(x) is immersive; the turning
        // points θ' = 0 are excluded from the residual.
        const double R = rng.uniform(0.5, 2.0);
        const double A = rng.uniform(0.6, 1.3);
        Grid2D f(n, deep), g(n, deep);
        for (int j = 0; j < f.ny(); ++j)
            for (int i = 0; i < n; ++i) {
                const double th = 0.5 * kPi + A * std::sin(kTwoPi * i / n);
                f.at(j, i) = R * std::cos(th);
                g.at(j, i) = R * std::sin(th);
            }
        const Grid2D k = geodesic_curvature(f, g, 0);
        double r = 0.0;
        for (int j = 0; j < k.ny(); ++j)
            for (int i = 0; i < n; ++i)
                if (std::abs(std::cos(kTwoPi * i / n)) > 0.3)
                    r = std::max(r, std::abs(k.at(j, i)));
        return r;
    });

    run_check(ctx, "two Hill routes on random charts", 1e-5, 50, [=](Rng& rng, int) {
        const std::vector<double> tiny = geometric_heights(0.0015, 1.2, 8);
        const PeriodicFn f0p = 0.5 * random_diffeo(rng, n).periodic_part(); // f0 = x + f0p
        const PeriodicFn g1 = random_smooth_positive(rng, n, 0.1);
        const PeriodicFn f2 = random_trig_poly(rng, n, 3, 0.05, 0.05);
        const PeriodicFn g2 = random_trig_poly(rng, n, 3, 0.05, 0.05);
        const PeriodicFn g3 = random_trig_poly(rng, n, 3, 0.05, 0.05);

        Grid2D f(n, tiny), g(n, tiny), fx(n, tiny), fy(n, tiny), gx(n, tiny), gy(n, tiny);
        const PeriodicFn df0p = derivative(f0p, 1);
        const PeriodicFn df2 = derivative(f2, 1), dg1 = derivative(g1, 1),
                         dg2 = derivative(g2, 1), dg3 = derivative(g3, 1);
        for (int j = 0; j < f.ny(); ++j) {
            const double y = tiny[static_cast<std::size_t>(j)];
            for (int i = 0; i < n; ++i) {
                f.at(j, i) = static_cast<double>(i) / n + f0p[i] + f2[i] * y * y;
                g.at(j, i) = g1[i] * y + g2[i] * y * y + g3[i] * y * y * y;
                fx.at(j, i) = 1.0 + df0p[i] + df2[i] * y * y;
                gx.at(j, i) = dg1[i] * y + dg2[i] * y * y + dg3[i] * y * y * y;
                fy.at(j, i) = 2.0 * f2[i] * y;
                gy.at(j, i) = g1[i] + 2.0 * g2[i] * y + 3.0 * g3[i] * y * y;
            }
        }
        const CoframeGrid C = chart_coframe(g, fx, fy, gx, gy);
        const BoundaryAsymptotics b = boundary_asymptotics(C);
        const HillPotential t1 = hill_from_asu(BoundaryConnection(b.a, b.s, b.u));

        const PeriodicFn climit = curvature_limit(geodesic_curvature(f, g, 1));
        const HillPotential t2 = hill_from_curvature(b.a, climit);
        double r = max_diff(t1.T, t2.T);

        // Curvature limit against the Taylor-coefficient closed form.
        const PeriodicFn ddf0p = derivative(f0p, 2);
        const PeriodicFn dg1pp = derivative(g1, 2);
        std::vector<double> ckx(static_cast<std::size_t>(n));
        for (int i = 0; i < n; ++i) {
            const double fp = 1.0 + df0p[i];
            ckx[static_cast<std::size_t>(i)] = g1[i] * dg1pp[i] / (fp * fp) -
                                               g1[i] * dg1[i] * ddf0p[i] / (fp * fp * fp) -
                                               0.5 * dg1[i] * dg1[i] / (fp * fp);
        }
        r = std::max(r, max_diff(climit, PeriodicFn(std::move(ckx))));
        return r;
    });
}

// --------------------------------------------------------------- trumpet ---

void suite_trumpet(const Ctx& ctx) {
    const int n = ctx.n;

    run_check(ctx, "antisymmetry and bilinearity", 1e-10, 50, [n](Rng& rng, int) {
        const TrumpetPoint p(rng.uniform(0.5, 2.5), random_diffeo(rng, n));
        const TrumpetTangent v = random_tangent(rng, n), w = random_tangent(rng, n),
                             u = random_tangent(rng, n);
        double r = std::abs(omega_N(p, v, v));
        r = std::max(r, std::abs(omega_N(p, v, w) + omega_N(p, w, v)));
        const double al = rng.uniform(-2.0, 2.0), be = rng.uniform(-2.0, 2.0);
        const TrumpetTangent lin{al * v.d_ell + be * u.d_ell, al * v.dF + be * u.dF};
        const double lhs = omega_N(p, lin, w);
        const double rhs = al * omega_N(p, v, w) + be * omega_N(p, u, w);
        r = std::max(r, std::abs(lhs - rhs) / (1.0 + std::abs(lhs)));
        return r;
    });

    run_check(ctx, "contraction value at the identity", 1e-12, 10, [n](Rng& rng, int) {
        const double ell = rng.uniform(0.5, 2.5);
        const TrumpetPoint p(ell, DiffeoLift::identity(n));
        const TrumpetTangent v{1.0, PeriodicFn::constant(n, 0.0)};
        const TrumpetTangent w{0.0, PeriodicFn::constant(n, 1.0)};
        return std::abs(omega_N(p, v, w) + 0.5 * ell);
    });

    // The two finite-difference identities use moderate tangents: the h=1e-4
    // central-difference error grows cubically with the tangent amplitude.
    run_check(ctx, "exactness", 1e-6, 50, [n](Rng& rng, int) {
        const TrumpetPoint p(rng.uniform(0.5, 2.5), random_diffeo(rng, n));
        return exactness_residual(p, random_tangent(rng, n, 0.1, 2),
                                  random_tangent(rng, n, 0.1, 2));
    });

    run_check(ctx, "diffeomorphism moment map", 1e-6, 50, [n](Rng& rng, int) {
        const TrumpetPoint p(rng.uniform(0.5, 2.5), random_diffeo(rng, n));
        const PeriodicFn f = random_trig_poly(rng, n, 4, 0.4);
        return verify_moment_diff(p, f, random_tangent(rng, n, 0.1, 2));
    });

    run_check(ctx, "circle moment map", 1e-8, 50, [n](Rng& rng, int) {
        const TrumpetPoint p(rng.uniform(0.5, 2.5), random_diffeo(rng, n));
        double r = verify_moment_circle(p, random_tangent(rng, n));
        // Hand value: contraction with the pure length direction is ℓ/2.
        const TrumpetTangent z{0.0, PeriodicFn::constant(n, 1.0)};
        const TrumpetTangent dl{1.0, PeriodicFn::constant(n, 0.0)};
        r = std::max(r, std::abs(omega_N(p, z, dl) - 0.5 * p.ell));
        return r;
    });

    run_check(ctx, "moment potential has neck monodromy", 1e-6, 25, [n](Rng& rng, int) {
        const TrumpetPoint p(rng.uniform(0.5, 2.5), random_diffeo(rng, n));
        const HillPotential T{(-1.0 * moment_diff(p).T).with_weight(2)};
        return std::abs(monodromy(T).trace - 2.0 * std::cosh(0.5 * p.ell));
    });

    run_check(ctx, "circle reduction shadow (orbit check)", 1e-6, 25, [&](Rng& rng, int t) {
        return virasoro_orbit_check(rng.uniform(0.5, 2.5), 1,
                                    ctx.seed + 0x9e37UL * static_cast<std::uint64_t>(t));
    });

    run_check(ctx, "circle direction pairs only with length", 1e-10, 25, [n](Rng& rng, int) {
        const TrumpetPoint p(rng.uniform(0.5, 2.5), random_diffeo(rng, n));
        const TrumpetTangent z{0.0, PeriodicFn::constant(n, 1.0)};
        double r = std::abs(omega_N(p, z, z));
        TrumpetTangent w = random_tangent(rng, n);
        w.d_ell = 0.0;
        r = std::max(r, std::abs(omega_N(p, z, w)));
        return r;
    });

    run_check(ctx, "darboux scalar pushforward", 1e-7, 25, [n](Rng& rng, int) {
        const TrumpetPoint p(rng.uniform(0.5, 2.5), random_diffeo(rng, n));
        const TrumpetTangent t{rng.uniform(-1.0, 1.0), random_trig_poly(rng, n, 3, 0.05, 0.05)};
        const PeriodicFn expected = darboux_du(p, t);
        const double h = fd_step(t);
        const PeriodicFn fd =
            (1.0 / (2.0 * h)) * (darboux_u(shifted(p, t, h)) - darboux_u(shifted(p, t, -h)));
        return max_diff(expected, fd);
    });

    run_check(ctx, "darboux and Fourier forms agree", 1e-6, 50, [n](Rng& rng, int) {
        const TrumpetPoint p(rng.uniform(0.5, 2.5), random_diffeo(rng, n));
        const TrumpetTangent v = random_tangent(rng, n), w = random_tangent(rng, n);
        const double w0 = omega_N(p, v, w);
        const double w1 = omega_N_darboux(p, v, w);
        const double w2 = omega_N_fourier(p, v, w);
        return std::max(std::abs(w0 - w1), std::abs(w1 - w2));
    });

    run_check(ctx, "truncated form is nondegenerate", 1.0, 1, [n](Rng&, int) {
        // Basis (dℓ, const, cos(2πmx)/m, sin(2πmx)/m), m <= 8, at (ℓ, id);
        // residual is 1e-8 / (smallest singular value), so pass means
        // σ_min > 1e-8.
        const int M = 8;
        const TrumpetPoint p(1.0, DiffeoLift::identity(n));
        std::vector<TrumpetTangent> basis;
        basis.push_back({1.0, PeriodicFn::constant(n, 0.0)});
        basis.push_back({0.0, PeriodicFn::constant(n, 1.0)});
        for (int m = 1; m <= M; ++m) {
            basis.push_back({0.0, PeriodicFn::sample(n, [m](double x) {
                                 return std::cos(kTwoPi * m * x) / m;
                             })});
            basis.push_back({0.0, PeriodicFn::sample(n, [m](double x) {
                                 return std::sin(kTwoPi * m * x) / m;
                             })});
        }
        const int dim = static_cast<int>(basis.size());
        Eigen::MatrixXd G(dim, dim);
        for (int i = 0; i < dim; ++i)
            for (int j = 0; j < dim; ++j)
                G(i, j) = omega_N(p, basis[static_cast<std::size_t>(i)],
                                  basis[static_cast<std::size_t>(j)]);
        const Eigen::JacobiSVD<Eigen::MatrixXd> svd(G);
        const double smin = svd.singularValues().minCoeff();
        return 1e-8 / std::max(smin, 1e-300);
    });
}

// --------------------------------------------------------------- wolpert ---

FNPoint random_fn_point(Rng& rng, int n, int variant) {
    const int g = variant % 3 == 2 ? 0 : 1;
    const int r = variant % 3 == 2 ? 3 : (variant % 3 == 0 ? 2 : 1);
    const int ni = 3 * g - 3 + r;
    std::vector<std::array<double, 2>> interior;
    for (int i = 0; i < ni; ++i)
        interior.push_back({rng.uniform(0.5, 2.5), rng.uniform(-1.0, 1.0)});
    std::vector<TrumpetPoint> boundary;
    for (int j = 0; j < r; ++j)
        boundary.emplace_back(rng.uniform(0.5, 2.5), random_diffeo(rng, n));
    return FNPoint(g, std::move(interior), std::move(boundary));
}

FNTangent random_fn_tangent(Rng& rng, int n, const FNPoint& p) {
    FNTangent t;
    for (std::size_t i = 0; i < p.interior.size(); ++i)
        t.interior.push_back({rng.uniform(-1.0, 1.0), rng.uniform(-1.0, 1.0)});
    for (int j = 0; j < p.boundary_count(); ++j) t.boundary.push_back(random_tangent(rng, n));
    return t;
}

FNTangent zero_fn_tangent(int n, const FNPoint& p) {
    FNTangent t;
    t.interior.assign(p.interior.size(), {0.0, 0.0});
    for (int j = 0; j < p.boundary_count(); ++j)
        t.boundary.push_back(TrumpetTangent{0.0, PeriodicFn::constant(n, 0.0)});
    return t;
}

void suite_wolpert(const Ctx& ctx) {
    const int n = ctx.n;

    run_check(ctx, "interior Darboux block is exactly 1/2", 0.0, 10, [n](Rng& rng, int trial) {
        const FNPoint p = random_fn_point(rng, n, trial % 3 == 1 ? 0 : trial);
        if (p.interior.empty()) return 0.0;
        FNTangent v = zero_fn_tangent(n, p), w = zero_fn_tangent(n, p);
        v.interior[0][0] = 1.0; // ∂/∂ℓ₁
        w.interior[0][1] = 1.0; // ∂/∂τ₁
        return std::abs(omega_teich(p, v, w) - 0.5);
    });

    run_check(ctx, "disjoint curves pair to zero", 0.0, 10, [n](Rng& rng, int) {
        const FNPoint p = random_fn_point(rng, n, 0); // g=1, r=2: two interior curves
        FNTangent v = zero_fn_tangent(n, p), w = zero_fn_tangent(n, p);
        v.interior[0] = {1.0, 0.7};
        w.interior[1] = {-0.3, 1.1};
        return std::abs(omega_teich(p, v, w));
    });

    run_check(ctx, "pure boundary tangents reduce to the trumpet form", 0.0, 10,
              [n](Rng& rng, int trial) {
                  const FNPoint p = random_fn_point(rng, n, trial);
                  FNTangent v = zero_fn_tangent(n, p), w = zero_fn_tangent(n, p);
                  v.boundary[0] = random_tangent(rng, n);
                  w.boundary[0] = random_tangent(rng, n);
                  const double expected = omega_N(p.boundary[0], v.boundary[0], w.boundary[0]);
                  return std::abs(omega_teich(p, v, w) - expected);
              });

    run_check(ctx, "boundary action is a right group action", 1e-8, 25, [n](Rng& rng, int trial) {
        const FNPoint p = random_fn_point(rng, n, trial);
        const DiffeoLift F = random_diffeo(rng, n), G = random_diffeo(rng, n);
        const int j = 0;
        const FNPoint lhs = boundary_action(boundary_action(p, j, F), j, G);
        const FNPoint rhs = boundary_action(p, j, compose(G, F));
        return diffeo_diff(lhs.boundary[0].F, rhs.boundary[0].F);
    });

    run_check(ctx, "identity trumpets give constant moments", 1e-12, 10, [n](Rng& rng, int) {
        const double ell = rng.uniform(0.5, 2.5);
        std::vector<TrumpetPoint> boundary;
        boundary.emplace_back(ell, DiffeoLift::identity(n));
        boundary.emplace_back(ell, DiffeoLift::rotation(n, rng.uniform(0.0, 1.0)));
        boundary.emplace_back(1.0, DiffeoLift::identity(n));
        const FNPoint p(0, {}, std::move(boundary));
        const std::vector<HillPotential> mom = boundary_moment(p);
        double r = (mom[0].T - 0.25 * ell * ell).max_abs();
        r = std::max(r, (mom[1].T - 0.25 * ell * ell).max_abs());
        r = std::max(r, (mom[2].T - 0.25).max_abs());
        return r;
    });

    run_check(ctx, "omega invariance under the boundary action", 1e-6, 25,
              [n](Rng& rng, int trial) {
                  const FNPoint p = random_fn_point(rng, n, trial);
                  const FNTangent v = random_fn_tangent(rng, n, p);
                  const FNTangent w = random_fn_tangent(rng, n, p);
                  const DiffeoLift F = random_diffeo(rng, n);
                  const int j = 0;
                  const FNPoint pF = boundary_action(p, j, F);
                  const FNTangent vF = transport_tangent(p, v, j, F);
                  const FNTangent wF = transport_tangent(p, w, j, F);
                  return std::abs(omega_teich(pF, vF, wF) - omega_teich(p, v, w));
              });

    run_check(ctx, "boundary action preserves monodromy traces", 1e-6, 10,
              [n](Rng& rng, int trial) {
                  const FNPoint p = random_fn_point(rng, n, trial);
                  const DiffeoLift F = random_diffeo(rng, n);
                  const FNPoint q = boundary_action(p, 0, F);
                  const HillPotential Tp{(-1.0 * boundary_moment(p)[0].T).with_weight(2)};
                  const HillPotential Tq{(-1.0 * boundary_moment(q)[0].T).with_weight(2)};
                  return std::abs(monodromy(Tp).trace - monodromy(Tq).trace);
              });

    run_check(ctx, "moment equivariance under the boundary action", 1e-7, 25,
              [n](Rng& rng, int trial) {
                  const FNPoint p = random_fn_point(rng, n, trial);
                  const DiffeoLift F = random_diffeo(rng, n);
                  const int j = 0;
                  const PeriodicFn after =
                      boundary_moment(boundary_action(p, j, F))[static_cast<std::size_t>(j)].T;
                  // Level -(1) affine transport of the moment by F:
                  // Φ ↦ G'²·(Φ∘G) - ½S(G) with G = F⁻¹.
                  const DiffeoLift G = invert(F);
                  const PeriodicFn before = boundary_moment(p)[static_cast<std::size_t>(j)].T;
                  const std::vector<double> moved = interpolate(before, G.lift_values());
                  const PeriodicFn Gp = G.dlift();
                  const PeriodicFn SG = schwarzian(G);
                  std::vector<double> expected(static_cast<std::size_t>(n));
                  for (int k = 0; k < n; ++k)
                      expected[static_cast<std::size_t>(k)] =
                          Gp[k] * Gp[k] * moved[static_cast<std::size_t>(k)] - 0.5 * SG[k];
                  return max_diff(after, PeriodicFn(std::move(expected), 2));
              });
}

// -------------------------------------------------------------- groupoid ---

void suite_groupoid(const Ctx& ctx) {
    const int n = ctx.n;

    run_check(ctx, "left form: antisymmetry, pure-dT degeneracy", 1e-12, 25, [n](Rng& rng, int) {
        const GroupoidPoint p{HillPotential{random_potential(rng, n)}, random_diffeo(rng, n)};
        const GroupoidTangent v{random_trig_poly(rng, n, 4, 0.5, 0.5, 2),
                                random_trig_poly(rng, n, 4, 0.5, 0.5)};
        const GroupoidTangent w{random_trig_poly(rng, n, 4, 0.5, 0.5, 2),
                                random_trig_poly(rng, n, 4, 0.5, 0.5)};
        double r = std::abs(omega_G_left(p, v, v));
        const GroupoidTangent tv{v.dT, PeriodicFn::constant(n, 0.0)};
        const GroupoidTangent tw{w.dT, PeriodicFn::constant(n, 0.0)};
        r = std::max(r, std::abs(omega_G_left(p, tv, tw)));
        return r;
    });

    run_check(ctx, "left form: band-limited closed form", 1e-8, 1, [n](Rng&, int) {
        const GroupoidPoint p{HillPotential{PeriodicFn::constant(n, 0.0, 2)},
                              DiffeoLift::identity(n)};
        const GroupoidTangent v{PeriodicFn::constant(n, 0.0, 2),
                                PeriodicFn::sample(n, [](double x) { return std::sin(kTwoPi * x); })};
        const GroupoidTangent w{PeriodicFn::constant(n, 0.0, 2),
                                PeriodicFn::sample(n, [](double x) { return std::cos(kTwoPi * x); })};
        // -¼∫(sin'''·cos - cos'''·sin) = 2π³
        return std::abs(omega_G_left(p, v, w) - 2.0 * kPi * kPi * kPi);
    });

    // Moderate dF amplitudes: the finite-difference transport error grows
    // cubically with the tangent size.
    run_check(ctx, "left and right trivializations agree", 1e-5, 25, [n](Rng& rng, int) {
        const RightTrivPoint pr{random_trig_poly(rng, n, 3, 0.3, 0.3, 2), random_diffeo(rng, n)};
        const GroupoidTangent v{random_trig_poly(rng, n, 3, 0.3, 0.3, 2),
                                random_trig_poly(rng, n, 3, 0.15, 0.15)};
        const GroupoidTangent w{random_trig_poly(rng, n, 3, 0.3, 0.3, 2),
                                random_trig_poly(rng, n, 3, 0.15, 0.15)};
        const GroupoidPoint pl = left_from_right(pr);
        const GroupoidTangent vl = left_tangent_from_right(pr, v);
        const GroupoidTangent wl = left_tangent_from_right(pr, w);
        return std::abs(omega_G_left(pl, vl, wl) - omega_G_right(pr, v, w));
    });

    run_check(ctx, "slice restriction reproduces the trumpet form", 1e-8, 20, [n](Rng& rng, int) {
        const double ell = rng.uniform(0.5, 2.5);
        const DiffeoLift F = random_diffeo(rng, n);
        const TrumpetTangent v = random_tangent(rng, n), w = random_tangent(rng, n);
        const TrumpetPoint p(ell, F);
        return std::abs(slice_restrict(ell, F, v, w) - omega_N(p, v, w));
    });

    run_check(ctx, "slice hand value at the identity", 1e-12, 10, [n](Rng& rng, int) {
        const double ell = rng.uniform(0.5, 2.5);
        const DiffeoLift id = DiffeoLift::identity(n);
        const TrumpetTangent v{1.0, PeriodicFn::constant(n, 0.0)};
        const TrumpetTangent w{0.0, PeriodicFn::constant(n, 1.0)};
        double r = std::abs(slice_restrict(ell, id, v, w) + 0.5 * ell);
        const TrumpetTangent z{0.0, PeriodicFn::constant(n, 0.0)};
        r = std::max(r, std::abs(slice_restrict(ell, id, z, z)));
        return r;
    });
}

} // namespace

SuiteReport run_suite(const std::string& name, const SuiteOptions& opts) {
    SuiteReport rep;
    rep.suite = name;
    rep.n = opts.n;
    rep.seed = opts.seed;
    rep.tol_scale = opts.tol_scale;
    Ctx ctx{opts.n, opts.trials, opts.seed, opts.tol_scale, &rep.checks};
    if (name == "diffeo") suite_diffeo(ctx);
    else if (name == "hill") suite_hill(ctx);
    else if (name == "coframe") suite_coframe(ctx);
    else if (name == "trumpet") suite_trumpet(ctx);
    else if (name == "wolpert") suite_wolpert(ctx);
    else if (name == "groupoid") suite_groupoid(ctx);
    else throw PreconditionError("unknown suite: " + name);
    return rep;
}

std::vector<SuiteReport> run_all(const SuiteOptions& opts) {
    std::vector<SuiteReport> out;
    for (const char* name : kSuiteNames) out.push_back(run_suite(name, opts));
    return out;
}

nlohmann::json report_json(const std::vector<SuiteReport>& reports) {
    nlohmann::json suites = nlohmann::json::array();
    bool all = true;
    for (const SuiteReport& r : reports) {
        nlohmann::json checks = nlohmann::json::array();
        for (const CheckResult& c : r.checks) {
            checks.push_back({{"name", c.name},
                              {"max_residual", c.max_residual},
                              {"tolerance", c.tolerance},
                              {"trials", c.trials},
                              {"pass", c.pass}});
        }
        suites.push_back({{"suite", r.suite},
                          {"n", r.n},
                          {"seed", r.seed},
                          {"tol_scale", r.tol_scale},
                          {"pass", r.passed()},
                          {"checks", checks}});
        all = all && r.passed();
    }
    return nlohmann::json{{"suites", suites}, {"pass", all}};
}

void print_report(const SuiteReport& report, std::ostream& os) {
    os << "suite " << report.suite << " (n=" << report.n << ", seed=" << report.seed << ")\n";
    for (const CheckResult& c : report.checks) {
        char buf[160];
        std::snprintf(buf, sizeof(buf), "  %-48s %10.3e  tol %8.1e  trials %4d  %7.1f ms  %s\n",
                      c.name.c_str(), c.max_residual, c.tolerance, c.trials, c.wall_ms,
                      c.pass ? "PASS" : "FAIL");
        os << buf;
        if (!c.note.empty()) os << "      note: " << c.note << "\n";
    }
}

} // namespace virateich
