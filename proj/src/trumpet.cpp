#include "virateich/trumpet.hpp"

#include <cmath>
#include <string>

#include "virateich/hill.hpp"
#include "virateich/spectral.hpp"

namespace virateich {

TrumpetPoint::TrumpetPoint(double ell_, DiffeoLift F_) : ell(ell_), F(std::move(F_)) {
    if (!(ell > 0.0))
        throw PreconditionError("TrumpetPoint: neck length must be positive, got " +
                                std::to_string(ell));
}

double omega_N(const TrumpetPoint& p, const TrumpetTangent& v, const TrumpetTangent& w) {
    require_same_size(p.F.periodic_part(), v.dF, "omega_N");
    require_same_size(p.F.periodic_part(), w.dF, "omega_N");
    const int n = p.F.size();
    const PeriodicFn Fp = p.F.dlift();
    const PeriodicFn vd = derivative(v.dF, 1), wd = derivative(w.dF, 1);
    const PeriodicFn vdd = derivative(v.dF, 2), wdd = derivative(w.dF, 2);
    const double l2 = p.ell * p.ell;
    double acc = 0.0;
    for (int k = 0; k < n; ++k) {
        const double t1 = -Fp[k] * 2.0 * p.ell * (v.d_ell * w.dF[k] - w.d_ell * v.dF[k]);
        const double t2 = -l2 * (vd[k] * w.dF[k] - wd[k] * v.dF[k]);
        const double t3 = (vd[k] * wdd[k] - wd[k] * vdd[k]) / (Fp[k] * Fp[k]);
        acc += t1 + t2 + t3;
    }
    return 0.25 * acc / n;
}

HillPotential moment_diff(const TrumpetPoint& p) {
    const HillPotential Tl{PeriodicFn::constant(p.F.size(), -0.25 * p.ell * p.ell, 2)};
    const HillPotential pulled = act_on_hill(p.F, Tl);
    return HillPotential{(-1.0 * pulled.T).with_weight(2)};
}

TrumpetPoint shifted(const TrumpetPoint& p, const TrumpetTangent& t, double h) {
    return TrumpetPoint(p.ell + h * t.d_ell,
                        DiffeoLift::from_periodic_part(p.F.periodic_part() + h * t.dF,
                                                       p.F.winding()));
}

double fd_step(const TrumpetTangent& t) {
    return 1e-4 * (1.0 + std::max(std::abs(t.d_ell), t.dF.max_abs()));
}

double verify_moment_diff(const TrumpetPoint& p, const PeriodicFn& f, const TrumpetTangent& w) {
    const TrumpetTangent vl{0.0, left_invariant_vector(p.F, f)};
    const double lhs = omega_N(p, vl, w);

    const auto pairing = [&f](const TrumpetPoint& q) {
        const HillPotential Tl{PeriodicFn::constant(q.F.size(), -0.25 * q.ell * q.ell, 2)};
        return integral(act_on_hill(q.F, Tl).T * f);
    };
    const double h = fd_step(w);
    const double rhs = (pairing(shifted(p, w, h)) - pairing(shifted(p, w, -h))) / (2.0 * h);
    return std::abs(lhs - rhs);
}

double verify_moment_circle(const TrumpetPoint& p, const TrumpetTangent& w) {
    const TrumpetTangent z{0.0, PeriodicFn::constant(p.F.size(), 1.0)};
    const double lhs = omega_N(p, z, w);
    const double rhs = 0.5 * p.ell * w.d_ell;
    return std::abs(lhs - rhs);
}

PeriodicFn darboux_u(const TrumpetPoint& p) {
    const PeriodicFn Fp = p.F.dlift();
    const PeriodicFn& phi = p.F.periodic_part();
    const double wind = static_cast<double>(p.F.winding());
    std::vector<double> u(static_cast<std::size_t>(p.F.size()));
    for (int k = 0; k < p.F.size(); ++k)
        u[static_cast<std::size_t>(k)] = std::log(Fp[k]) + p.ell * (phi[k] + wind);
    return PeriodicFn(std::move(u));
}

PeriodicFn darboux_du(const TrumpetPoint& p, const TrumpetTangent& t) {
    const PeriodicFn Fp = p.F.dlift();
    const PeriodicFn td = derivative(t.dF, 1);
    const PeriodicFn& phi = p.F.periodic_part();
    const double wind = static_cast<double>(p.F.winding());
    std::vector<double> du(static_cast<std::size_t>(p.F.size()));
    for (int k = 0; k < p.F.size(); ++k)
        du[static_cast<std::size_t>(k)] =
            td[k] / Fp[k] + t.d_ell * (phi[k] + wind) + p.ell * t.dF[k];
    return PeriodicFn(std::move(du));
}

double omega_N_darboux(const TrumpetPoint& p, const TrumpetTangent& v, const TrumpetTangent& w) {
    const PeriodicFn duv = darboux_du(p, v);
    const PeriodicFn duw = darboux_du(p, w);
    const double term_ell = -0.5 * (v.d_ell * duw.mean() - w.d_ell * duv.mean());
    const PeriodicFn cross = duv * derivative(duw, 1) - duw * derivative(duv, 1);
    return term_ell + 0.25 * integral(cross);
}

double omega_N_fourier(const TrumpetPoint& p, const TrumpetTangent& v, const TrumpetTangent& w) {
    const int n = p.F.size();
    const FourierCoeffs cv = fourier(darboux_du(p, v), n / 2 - 1);
    const FourierCoeffs cw = fourier(darboux_du(p, w), n / 2 - 1);
    const double term_ell =
        -0.5 * (v.d_ell * cw.mode(0).real() - w.d_ell * cv.mode(0).real());
    // πi Σ_{m>0} m (du_{-m,v} du_{m,w} - du_{-m,w} du_{m,v}) = -2π Σ m Im(conj(cv_m)·cw_m)
    double acc = 0.0;
    for (int m = 1; m <= n / 2 - 1; ++m)
        acc += -kTwoPi * m * std::imag(std::conj(cv.mode(m)) * cw.mode(m));
    return term_ell + acc;
}

double lambda_contract(const TrumpetPoint& p, const TrumpetTangent& t) {
    const PeriodicFn Fp = p.F.dlift();
    const PeriodicFn tdd = derivative(t.dF, 2);
    const double l2 = p.ell * p.ell;
    double acc = 0.0;
    for (int k = 0; k < p.F.size(); ++k) acc += l2 * Fp[k] * t.dF[k] + tdd[k] / Fp[k];
    return -0.25 * acc / p.F.size();
}

double virasoro_orbit_check(double ell, int samples, std::uint64_t seed) {
    if (!(ell > 0.0)) throw PreconditionError("virasoro_orbit_check: ell must be positive");
    const int n = 256;
    double worst = 0.0;
    for (int s = 0; s < samples; ++s) {
        Rng rng = Rng::for_trial(seed, static_cast<std::uint64_t>(s));
        const TrumpetPoint p(ell, random_diffeo(rng, n));
        const TrumpetTangent z{0.0, PeriodicFn::constant(n, 1.0)};
        worst = std::max(worst, std::abs(omega_N(p, z, z)));
        TrumpetTangent w{0.0, random_trig_poly(rng, n, 4, 0.5, 0.5)};
        worst = std::max(worst, std::abs(omega_N(p, z, w)));
        // Moment potential along the circle orbit, compared through the trace.
        const TrumpetPoint q(ell, compose(DiffeoLift::rotation(n, rng.uniform(0.0, 1.0)), p.F));
        const HillPotential Tp{(-1.0 * moment_diff(p).T).with_weight(2)};
        const HillPotential Tq{(-1.0 * moment_diff(q).T).with_weight(2)};
        worst = std::max(worst, std::abs(monodromy(Tp).trace - monodromy(Tq).trace));
    }
    return worst;
}

double exactness_residual(const TrumpetPoint& p, const TrumpetTangent& v,
                          const TrumpetTangent& w) {
    const double hv = fd_step(v), hw = fd_step(w);
    const double dv_of_lw =
        (lambda_contract(shifted(p, v, hv), w) - lambda_contract(shifted(p, v, -hv), w)) /
        (2.0 * hv);
    const double dw_of_lv =
        (lambda_contract(shifted(p, w, hw), v) - lambda_contract(shifted(p, w, -hw), v)) /
        (2.0 * hw);
    return std::abs(omega_N(p, v, w) - (dv_of_lw - dw_of_lv));
}

} // namespace virateich
