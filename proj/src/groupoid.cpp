#include "virateich/groupoid.hpp"

#include <cmath>

#include "virateich/spectral.hpp"

namespace virateich {

double omega_G_left(const GroupoidPoint& p, const GroupoidTangent& v, const GroupoidTangent& w) {
    require_same_size(p.T.T, v.dF, "omega_G_left");
    require_same_size(p.T.T, w.dF, "omega_G_left");
    const int n = p.F.size();
    const PeriodicFn Fp = p.F.dlift();
    const PeriodicFn bv = (v.dF / Fp).with_weight(0);
    const PeriodicFn bw = (w.dF / Fp).with_weight(0);
    const PeriodicFn bvp = derivative(bv, 1), bwp = derivative(bw, 1);
    const PeriodicFn bvppp = derivative(bv, 3), bwppp = derivative(bw, 3);
    double acc = 0.0;
    for (int k = 0; k < n; ++k) {
        acc += v.dT[k] * bw[k] - w.dT[k] * bv[k];
        acc += p.T.T[k] * (bv[k] * bwp[k] - bw[k] * bvp[k]);
        acc += -0.25 * (bvppp[k] * bw[k] - bwppp[k] * bv[k]);
    }
    return acc / n;
}

double omega_G_right(const RightTrivPoint& p, const GroupoidTangent& v, const GroupoidTangent& w) {
    require_same_size(p.T0, v.dF, "omega_G_right");
    require_same_size(p.T0, w.dF, "omega_G_right");
    const int n = p.F.size();
    const PeriodicFn Fp = p.F.dlift();
    const PeriodicFn vd = derivative(v.dF, 1), wd = derivative(w.dF, 1);
    const PeriodicFn vdd = derivative(v.dF, 2), wdd = derivative(w.dF, 2);
    // T₀ and its variation enter composed with F: expanding d of the
    // primitive gives ∫( F'·(dT₀∘F)∧dF + (T₀∘F)·dF'∧dF + ¼(F')⁻²dF'∧dF'' ).
    const std::vector<double> fx = p.F.lift_values();
    const std::vector<double> T0F = interpolate(p.T0, fx);
    const std::vector<double> vTF = interpolate(v.dT, fx);
    const std::vector<double> wTF = interpolate(w.dT, fx);
    double acc = 0.0;
    for (int k = 0; k < n; ++k) {
        const auto ks = static_cast<std::size_t>(k);
        acc += Fp[k] * (vTF[ks] * w.dF[k] - wTF[ks] * v.dF[k]);
        acc += T0F[ks] * (vd[k] * w.dF[k] - wd[k] * v.dF[k]);
        acc += 0.25 * (vd[k] * wdd[k] - wd[k] * vdd[k]) / (Fp[k] * Fp[k]);
    }
    return acc / n;
}

double slice_restrict(double ell, const DiffeoLift& F, const TrumpetTangent& v,
                      const TrumpetTangent& w) {
    const int n = F.size();
    const RightTrivPoint p{PeriodicFn::constant(n, -0.25 * ell * ell, 2), F};
    const GroupoidTangent gv{PeriodicFn::constant(n, -0.5 * ell * v.d_ell, 2), v.dF};
    const GroupoidTangent gw{PeriodicFn::constant(n, -0.5 * ell * w.d_ell, 2), w.dF};
    return omega_G_right(p, gv, gw);
}

GroupoidPoint left_from_right(const RightTrivPoint& p) {
    return GroupoidPoint{act_on_hill(p.F, HillPotential{p.T0.with_weight(2)}), p.F};
}

GroupoidTangent left_tangent_from_right(const RightTrivPoint& p, const GroupoidTangent& t) {
    const double h =
        1e-4 * (1.0 + std::max(t.dT.max_abs(), t.dF.max_abs()));
    const auto moved = [&](double sgn) {
        const DiffeoLift Fh = DiffeoLift::from_periodic_part(
            p.F.periodic_part() + (sgn * h) * t.dF, p.F.winding());
        return act_on_hill(Fh, HillPotential{(p.T0 + (sgn * h) * t.dT).with_weight(2)}).T;
    };
    const PeriodicFn dT = (1.0 / (2.0 * h)) * (moved(1.0) - moved(-1.0));
    return GroupoidTangent{dT.with_weight(2), t.dF};
}

} // namespace virateich
