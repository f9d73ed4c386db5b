#include "virateich/diffeo.hpp"

#include <cmath>
#include <string>

#include "virateich/spectral.hpp"

namespace virateich {

namespace {

void check_monotone(const PeriodicFn& phi) {
    const PeriodicFn dphi = derivative(phi, 1);
    for (int k = 0; k < phi.size(); ++k) {
        if (1.0 + dphi[k] <= DiffeoLift::kMonotonicityFloor)
            throw PreconditionError("DiffeoLift: F' <= " +
                                    std::to_string(DiffeoLift::kMonotonicityFloor) +
                                    " at grid point " + std::to_string(k));
    }
}

} // namespace

DiffeoLift DiffeoLift::identity(int n) {
    return DiffeoLift(PeriodicFn::constant(n, 0.0), 0);
}

DiffeoLift DiffeoLift::rotation(int n, double t) {
    return from_periodic_part(PeriodicFn::constant(n, t), 0);
}

DiffeoLift DiffeoLift::from_periodic_part(PeriodicFn phi, long winding) {
    check_monotone(phi);
    const double at0 = phi[0];
    const long shift = static_cast<long>(std::floor(at0));
    if (shift != 0) phi = phi - static_cast<double>(shift);
    return DiffeoLift(std::move(phi), winding + shift);
}

std::vector<double> DiffeoLift::lift_values() const {
    const int n = size();
    std::vector<double> out(static_cast<std::size_t>(n));
    for (int k = 0; k < n; ++k)
        out[static_cast<std::size_t>(k)] = static_cast<double>(k) / n + phi_[k] + static_cast<double>(winding_);
    return out;
}

PeriodicFn DiffeoLift::dlift() const { return (derivative(phi_, 1) + 1.0).with_weight(1); }

DiffeoLift compose(const DiffeoLift& F, const DiffeoLift& G) {
    require_same_size(F.periodic_part(), G.periodic_part(), "compose");
    const int n = F.size();
    const std::vector<double> g = G.lift_values();
    const TrigInterpolant phiF(F.periodic_part());
    std::vector<double> p(static_cast<std::size_t>(n));
    for (int k = 0; k < n; ++k)
        p[static_cast<std::size_t>(k)] = G.periodic_part()[k] + phiF(g[static_cast<std::size_t>(k)]);
    return DiffeoLift::from_periodic_part(PeriodicFn(std::move(p)), F.winding() + G.winding());
}

DiffeoLift invert(const DiffeoLift& F) {
    const int n = F.size();
    const TrigInterpolant phi(F.periodic_part());
    const double w = static_cast<double>(F.winding());
    const auto lift = [&](double x) { return x + phi(x) + w; };
    const auto dlift = [&](double x) { return 1.0 + phi.deriv(x); };

    double phi_min = F.periodic_part()[0], phi_max = phi_min;
    for (int k = 1; k < n; ++k) {
        phi_min = std::min(phi_min, F.periodic_part()[k]);
        phi_max = std::max(phi_max, F.periodic_part()[k]);
    }

    // 1e-12 is the acceptance gate; iteration polishes towards roundoff so
    // that spectral derivatives of the inverse stay clean (third derivatives
    // amplify per-point noise by ~(πn)³).
    constexpr double kAcceptTol = 1e-12;
    constexpr double kPolishTol = 1e-15;
    constexpr int kMaxIter = 100;
    std::vector<double> inv(static_cast<std::size_t>(n));
    for (int k = 0; k < n; ++k) {
        const double target = static_cast<double>(k) / n;
        // F̃(g) = target forces g into [target - w - max φ, target - w - min φ]
        // (pad for interpolation wiggle beyond the sampled extrema).
        double lo = target - w - phi_max - 0.25;
        double hi = target - w - phi_min + 0.25;
        double g = target - w - phi(target - w);
        if (g < lo || g > hi) g = 0.5 * (lo + hi);
        double best = g, best_r = std::abs(lift(g) - target);
        for (int it = 0; it < kMaxIter && best_r > kPolishTol; ++it) {
            const double r = lift(g) - target;
            if (std::abs(r) < best_r) {
                best_r = std::abs(r);
                best = g;
            }
            if (r > 0.0) hi = g;
            else lo = g;
            const double step = r / dlift(g);
            double next = g - step;
            if (!(next > lo && next < hi)) next = 0.5 * (lo + hi);
            if (next == g) break;
            g = next;
        }
        if (best_r > kAcceptTol)
            throw NumericalError("invert: Newton failed to converge at grid point " +
                                 std::to_string(k));
        inv[static_cast<std::size_t>(k)] = best - target;
    }
    return DiffeoLift::from_periodic_part(PeriodicFn(std::move(inv)), 0);
}

PeriodicFn schwarzian(const DiffeoLift& F) {
    // S(F) = F'''/F' - (3/2)(F''/F')² = r' - ½r² with r = F''/F'.  The ratio
    // form differentiates spectrally only once, avoiding the (πn)³ roundoff
    // amplification of a bare third derivative.
    const PeriodicFn& phi = F.periodic_part();
    const PeriodicFn d1 = derivative(phi, 1) + 1.0;
    const PeriodicFn d2 = derivative(phi, 2);
    const int n = F.size();
    std::vector<double> ratio(static_cast<std::size_t>(n));
    for (int k = 0; k < n; ++k) ratio[static_cast<std::size_t>(k)] = d2[k] / d1[k];
    const PeriodicFn r(std::move(ratio), 1);
    const PeriodicFn rp = derivative(r, 1);
    std::vector<double> s(static_cast<std::size_t>(n));
    for (int k = 0; k < n; ++k) s[static_cast<std::size_t>(k)] = rp[k] - 0.5 * r[k] * r[k];
    return PeriodicFn(std::move(s), 2);
}

HillPotential act_on_hill(const DiffeoLift& F, const HillPotential& T) {
    require_same_size(F.periodic_part(), T.T, "act_on_hill");
    const int n = F.size();
    const std::vector<double> fx = F.lift_values();
    const std::vector<double> Tf = interpolate(T.T, fx);
    const PeriodicFn d1 = derivative(F.periodic_part(), 1) + 1.0;
    const PeriodicFn S = schwarzian(F);
    std::vector<double> out(static_cast<std::size_t>(n));
    for (int k = 0; k < n; ++k)
        out[static_cast<std::size_t>(k)] = d1[k] * d1[k] * Tf[static_cast<std::size_t>(k)] + 0.5 * S[k];
    return HillPotential{PeriodicFn(std::move(out), 2)};
}

PeriodicFn left_invariant_vector(const DiffeoLift& F, const PeriodicFn& f) {
    require_same_size(F.periodic_part(), f, "left_invariant_vector");
    return -1.0 * ((derivative(F.periodic_part(), 1) + 1.0) * f);
}

PeriodicFn random_trig_poly(Rng& rng, int n, int max_mode, double amplitude,
                            double const_amplitude, int weight) {
    std::vector<double> a(static_cast<std::size_t>(max_mode) + 1, 0.0);
    std::vector<double> b(static_cast<std::size_t>(max_mode) + 1, 0.0);
    for (int m = 1; m <= max_mode; ++m) {
        a[static_cast<std::size_t>(m)] = rng.uniform(-amplitude / m, amplitude / m);
        b[static_cast<std::size_t>(m)] = rng.uniform(-amplitude / m, amplitude / m);
    }
    const double c0 = const_amplitude != 0.0 ? rng.uniform(-const_amplitude, const_amplitude) : 0.0;
    return PeriodicFn::sample(
        n,
        [&](double x) {
            double v = c0;
            for (int m = 1; m <= max_mode; ++m)
                v += a[static_cast<std::size_t>(m)] * std::sin(kTwoPi * m * x) +
                     b[static_cast<std::size_t>(m)] * std::cos(kTwoPi * m * x);
            return v;
        },
        weight);
}

PeriodicFn random_smooth_positive(Rng& rng, int n, double log_amplitude) {
    PeriodicFn g = random_trig_poly(rng, n, 4, log_amplitude);
    std::vector<double> v(static_cast<std::size_t>(n));
    for (int k = 0; k < n; ++k) v[static_cast<std::size_t>(k)] = std::exp(g[k]);
    return PeriodicFn(std::move(v));
}

DiffeoLift random_diffeo(Rng& rng, int n) {
    std::vector<double> a(5, 0.0), b(5, 0.0);
    double bound = 0.0;
    for (int m = 1; m <= 4; ++m) {
        a[static_cast<std::size_t>(m)] = rng.uniform(-0.05 / m, 0.05 / m);
        b[static_cast<std::size_t>(m)] = rng.uniform(-0.05 / m, 0.05 / m);
        bound += kTwoPi * m * (std::abs(a[static_cast<std::size_t>(m)]) + std::abs(b[static_cast<std::size_t>(m)]));
    }
    // ‖φ'‖∞ <= 0.35 keeps F' >= 0.65.  Beyond the monotonicity margin this
    // caps the analyticity-strip narrowing of compositions: their spectra
    // must stay negligible at the Nyquist mode, or third derivatives of
    // composed maps pick up aliasing noise amplified by (πn)³.
    const double scale = bound > 0.35 ? 0.35 / bound : 1.0;
    // Small translation part: sample magnitudes of composed lifts set the
    // roundoff floor of their spectral third derivatives.
    const double offset = rng.uniform(0.05, 0.2);
    double at0 = 0.0;
    for (int m = 1; m <= 4; ++m) at0 += b[static_cast<std::size_t>(m)];
    PeriodicFn phi = PeriodicFn::sample(n, [&](double x) {
        double v = 0.0;
        for (int m = 1; m <= 4; ++m)
            v += a[static_cast<std::size_t>(m)] * std::sin(kTwoPi * m * x) +
                 b[static_cast<std::size_t>(m)] * std::cos(kTwoPi * m * x);
        return scale * (v - at0) + offset;
    });
    return DiffeoLift::from_periodic_part(std::move(phi), 0);
}

} // namespace virateich
