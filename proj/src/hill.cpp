#include "virateich/hill.hpp"

#include <cmath>
#include <string>

#include "virateich/spectral.hpp"

namespace virateich {

BoundaryConnection::BoundaryConnection(PeriodicFn a_, PeriodicFn s_, PeriodicFn u_)
    : a(std::move(a_)), s(std::move(s_)), u(std::move(u_)) {
    require_same_size(a, s, "BoundaryConnection");
    require_same_size(a, u, "BoundaryConnection");
}

bool BoundaryConnection::is_positive() const { return first_nonpositive() < 0; }

int BoundaryConnection::first_nonpositive() const {
    for (int k = 0; k < a.size(); ++k)
        if (a[k] <= 0.0) return k;
    return -1;
}

GaugeMap::GaugeMap(PeriodicFn g11_, PeriodicFn g12_, PeriodicFn g21_, PeriodicFn g22_)
    : g11(std::move(g11_)), g12(std::move(g12_)), g21(std::move(g21_)), g22(std::move(g22_)) {
    require_same_size(g11, g12, "GaugeMap");
    require_same_size(g11, g21, "GaugeMap");
    require_same_size(g11, g22, "GaugeMap");
    for (int k = 0; k < g11.size(); ++k) {
        const double det = g11[k] * g22[k] - g12[k] * g21[k];
        if (std::abs(det - 1.0) > 1e-10)
            throw PreconditionError("GaugeMap: det deviates from 1 by " +
                                    std::to_string(det - 1.0) + " at grid point " +
                                    std::to_string(k));
    }
}

GaugeMap GaugeMap::identity(int n) {
    return GaugeMap(PeriodicFn::constant(n, 1.0), PeriodicFn::constant(n, 0.0),
                    PeriodicFn::constant(n, 0.0), PeriodicFn::constant(n, 1.0));
}

const char* to_string(Monodromy::OrbitClass c) {
    switch (c) {
        case Monodromy::OrbitClass::hyperbolic: return "hyperbolic";
        case Monodromy::OrbitClass::parabolic: return "parabolic";
        default: return "elliptic";
    }
}

BoundaryConnection gauge_transform(const GaugeMap& h, const BoundaryConnection& A) {
    require_same_size(h.g11, A.a, "gauge_transform");
    const int n = A.size();

    const PeriodicFn d11 = derivative(h.g11, 1);
    const PeriodicFn d12 = derivative(h.g12, 1);
    const PeriodicFn d21 = derivative(h.g21, 1);
    const PeriodicFn d22 = derivative(h.g22, 1);

    std::vector<double> ra(static_cast<std::size_t>(n)), rs(static_cast<std::size_t>(n)),
        ru(static_cast<std::size_t>(n));
    for (int k = 0; k < n; ++k) {
        const double m11 = 0.5 * A.s[k], m12 = A.a[k], m21 = A.u[k], m22 = -0.5 * A.s[k];
        const double h11 = h.g11[k], h12 = h.g12[k], h21 = h.g21[k], h22 = h.g22[k];
        // h^{-1} = [[h22, -h12], [-h21, h11]] for det h = 1.
        // Ad_h(M) = h M h^{-1}
        const double p11 = h11 * m11 + h12 * m21;
        const double p12 = h11 * m12 + h12 * m22;
        const double p21 = h21 * m11 + h22 * m21;
        const double p22 = h21 * m12 + h22 * m22;
        double c11 = p11 * h22 - p12 * h21;
        double c12 = -p11 * h12 + p12 * h11;
        double c21 = p21 * h22 - p22 * h21;
        double c22 = -p21 * h12 + p22 * h11;
        // minus (dh) h^{-1}
        c11 -= d11[k] * h22 - d12[k] * h21;
        c12 -= -d11[k] * h12 + d12[k] * h11;
        c21 -= d21[k] * h22 - d22[k] * h21;
        c22 -= -d21[k] * h12 + d22[k] * h11;

        if (std::abs(c11 + c22) > 1e-10)
            throw NumericalError("gauge_transform: result trace " + std::to_string(c11 + c22) +
                                 " at grid point " + std::to_string(k));
        ra[static_cast<std::size_t>(k)] = c12;
        rs[static_cast<std::size_t>(k)] = 2.0 * c11;
        ru[static_cast<std::size_t>(k)] = c21;
    }
    return BoundaryConnection(PeriodicFn(std::move(ra)), PeriodicFn(std::move(rs)),
                              PeriodicFn(std::move(ru)));
}

std::pair<GaugeMap, HillPotential> ds_normalize(const BoundaryConnection& A) {
    const int bad = A.first_nonpositive();
    if (bad >= 0)
        throw PreconditionError("ds_normalize: connection not positive, a <= 0 at grid point " +
                                std::to_string(bad));
    const int n = A.size();
    const PeriodicFn da = derivative(A.a, 1);

    // h = [[1,0],[lam,1]] · diag(a^{-1/2}, a^{1/2}); lam = s/2 + a'/(2a) is
    // the unique choice killing the diagonal of h•A under
    // g•A = Ad_g A - (dg)g^{-1}.
    std::vector<double> g11(static_cast<std::size_t>(n)), g21(static_cast<std::size_t>(n)),
        g22(static_cast<std::size_t>(n));
    for (int k = 0; k < n; ++k) {
        const double d = 1.0 / std::sqrt(A.a[k]);
        const double lam = 0.5 * A.s[k] + 0.5 * da[k] / A.a[k];
        g11[static_cast<std::size_t>(k)] = d;
        g21[static_cast<std::size_t>(k)] = lam * d;
        g22[static_cast<std::size_t>(k)] = 1.0 / d;
    }
    GaugeMap h(PeriodicFn(std::move(g11)), PeriodicFn::constant(n, 0.0),
               PeriodicFn(std::move(g21)), PeriodicFn(std::move(g22)));

    const BoundaryConnection nf = gauge_transform(h, A);
    for (int k = 0; k < n; ++k) {
        if (std::abs(nf.a[k] - 1.0) > 1e-9 || std::abs(nf.s[k]) > 1e-9)
            throw NumericalError("ds_normalize: normal form missed the slice at grid point " +
                                 std::to_string(k) + " (a-1=" + std::to_string(nf.a[k] - 1.0) +
                                 ", s=" + std::to_string(nf.s[k]) + ")");
    }
    return {std::move(h), HillPotential{(-1.0 * nf.u).with_weight(2)}};
}

HillPotential hill_from_asu(const BoundaryConnection& A) {
    const int bad = A.first_nonpositive();
    if (bad >= 0)
        throw PreconditionError("hill_from_asu: connection not positive, a <= 0 at grid point " +
                                std::to_string(bad));
    const int n = A.size();
    const PeriodicFn da = derivative(A.a, 1);
    const PeriodicFn dda = derivative(A.a, 2);
    const PeriodicFn ds = derivative(A.s, 1);
    std::vector<double> t(static_cast<std::size_t>(n));
    for (int k = 0; k < n; ++k) {
        const double rho = da[k] / A.a[k];
        t[static_cast<std::size_t>(k)] = 0.5 * (dda[k] / A.a[k] - 1.5 * rho * rho) -
                                         A.a[k] * A.u[k] - 0.25 * A.s[k] * A.s[k] -
                                         0.5 * rho * A.s[k] + 0.5 * ds[k];
    }
    return HillPotential{PeriodicFn(std::move(t), 2)};
}

PeriodicFn hat_moment(const BoundaryConnection& A) {
    const int n = A.size();
    const PeriodicFn ds = derivative(A.s, 1);
    const PeriodicFn dda = derivative(A.a, 2);
    std::vector<double> m(static_cast<std::size_t>(n));
    for (int k = 0; k < n; ++k)
        m[static_cast<std::size_t>(k)] =
            -0.5 * ds[k] + 0.25 * A.s[k] * A.s[k] + A.a[k] * A.u[k] - 0.5 * dda[k];
    return PeriodicFn(std::move(m), 2);
}

Monodromy monodromy(const HillPotential& T) {
    const int n = T.T.size();
    const int steps = 8 * n;
    const double h = 1.0 / steps;
    // T at the RK4 nodes j·h and j·h + h/2: the 16n-point refinement.
    const PeriodicFn Tf = resample(T.T, 16 * n);

    // Columns of the fundamental matrix of y' = [[0,1],[-T,0]] y.
    double m11 = 1.0, m21 = 0.0; // (u, u') from (1, 0)
    double m12 = 0.0, m22 = 1.0; // (u, u') from (0, 1)
    const auto step = [&](double& u, double& v, double t0, double t_half, double t1) {
        const double k1u = v, k1v = -t0 * u;
        const double k2u = v + 0.5 * h * k1v, k2v = -t_half * (u + 0.5 * h * k1u);
        const double k3u = v + 0.5 * h * k2v, k3v = -t_half * (u + 0.5 * h * k2u);
        const double k4u = v + h * k3v, k4v = -t1 * (u + h * k3u);
        u += h / 6.0 * (k1u + 2.0 * k2u + 2.0 * k3u + k4u);
        v += h / 6.0 * (k1v + 2.0 * k2v + 2.0 * k3v + k4v);
    };
    for (int j = 0; j < steps; ++j) {
        const double t0 = Tf[2 * j];
        const double th = Tf[2 * j + 1];
        const double t1 = Tf[(2 * j + 2) % (16 * n)];
        step(m11, m21, t0, th, t1);
        step(m12, m22, t0, th, t1);
        if (!std::isfinite(m11) || !std::isfinite(m21) || !std::isfinite(m12) ||
            !std::isfinite(m22))
            throw NumericalError("monodromy: integration diverged at step " + std::to_string(j));
    }

    Monodromy out;
    out.matrix = {{{m11, m12}, {m21, m22}}};
    out.trace = m11 + m22;
    constexpr double kParabolicBand = 1e-9;
    if (std::abs(out.trace) > 2.0 + kParabolicBand)
        out.orbit_class = Monodromy::OrbitClass::hyperbolic;
    else if (std::abs(out.trace) < 2.0 - kParabolicBand)
        out.orbit_class = Monodromy::OrbitClass::elliptic;
    else
        out.orbit_class = Monodromy::OrbitClass::parabolic;
    return out;
}

GaugeMap ds_splitting_gauge(const DiffeoLift& F) {
    const int n = F.size();
    const PeriodicFn d1 = derivative(F.periodic_part(), 1) + 1.0;
    const PeriodicFn d2 = derivative(F.periodic_part(), 2);
    std::vector<double> g11(static_cast<std::size_t>(n)), g21(static_cast<std::size_t>(n)),
        g22(static_cast<std::size_t>(n));
    for (int k = 0; k < n; ++k) {
        const double r = 1.0 / std::sqrt(d1[k]);
        g11[static_cast<std::size_t>(k)] = r;
        g21[static_cast<std::size_t>(k)] = 0.5 * d2[k] / d1[k] * r;
        g22[static_cast<std::size_t>(k)] = 1.0 / r;
    }
    return GaugeMap(PeriodicFn(std::move(g11)), PeriodicFn::constant(n, 0.0),
                    PeriodicFn(std::move(g21)), PeriodicFn(std::move(g22)));
}

BoundaryConnection ds_connection(const HillPotential& T) {
    const int n = T.T.size();
    return BoundaryConnection(PeriodicFn::constant(n, 1.0), PeriodicFn::constant(n, 0.0),
                              (-1.0 * T.T).with_weight(0));
}

BoundaryConnection pullback(const DiffeoLift& F, const BoundaryConnection& A) {
    require_same_size(F.periodic_part(), A.a, "pullback");
    const int n = A.size();
    const std::vector<double> fx = F.lift_values();
    const PeriodicFn d1 = derivative(F.periodic_part(), 1) + 1.0;
    const std::vector<double> av = interpolate(A.a, fx);
    const std::vector<double> sv = interpolate(A.s, fx);
    const std::vector<double> uv = interpolate(A.u, fx);
    std::vector<double> ra(static_cast<std::size_t>(n)), rs(static_cast<std::size_t>(n)),
        ru(static_cast<std::size_t>(n));
    for (int k = 0; k < n; ++k) {
        ra[static_cast<std::size_t>(k)] = av[static_cast<std::size_t>(k)] * d1[k];
        rs[static_cast<std::size_t>(k)] = sv[static_cast<std::size_t>(k)] * d1[k];
        ru[static_cast<std::size_t>(k)] = uv[static_cast<std::size_t>(k)] * d1[k];
    }
    return BoundaryConnection(PeriodicFn(std::move(ra)), PeriodicFn(std::move(rs)),
                              PeriodicFn(std::move(ru)));
}

} // namespace virateich
