#include "virateich/coframe.hpp"

#include <cmath>
#include <string>

#include "virateich/spectral.hpp"

namespace virateich {

namespace {

// ∂/∂y of a 0-form coefficient c via its regular rescaling P = y·c:
// ∂_y c = (FD_y(P) - c)/y.  Exact when P is polynomial of degree <= 4 in y,
// which covers the model coframes; plain FD of c itself would lose ~10 digits
// against the grading near y = 0.
Grid2D dy_zeroform(const Grid2D& c) {
    Grid2D P(c.nx, c.y);
    for (int j = 0; j < c.ny(); ++j)
        for (int i = 0; i < c.nx; ++i) P.at(j, i) = c.y[static_cast<std::size_t>(j)] * c.at(j, i);
    Grid2D dP = exterior::d_y(P);
    Grid2D out(c.nx, c.y);
    for (int j = 0; j < c.ny(); ++j)
        for (int i = 0; i < c.nx; ++i)
            out.at(j, i) = (dP.at(j, i) - c.at(j, i)) / c.y[static_cast<std::size_t>(j)];
    return out;
}

// Coefficient of d(ω) against dx∧dy for ω = ωx dx + ωy dy.
Grid2D d_oneform(const Grid2D& wx, const Grid2D& wy) {
    Grid2D dxwy = exterior::d_x(wy);
    Grid2D dywx = dy_zeroform(wx);
    Grid2D out(wx.nx, wx.y);
    for (std::size_t k = 0; k < out.data.size(); ++k) out.data[k] = dxwy.data[k] - dywx.data[k];
    return out;
}

Grid2D wedge_coef(const Grid2D& ax, const Grid2D& ay, const Grid2D& bx, const Grid2D& by) {
    Grid2D out(ax.nx, ax.y);
    for (std::size_t k = 0; k < out.data.size(); ++k)
        out.data[k] = ax.data[k] * by.data[k] - ay.data[k] * bx.data[k];
    return out;
}

PeriodicFn column_extrapolation(const Grid2D& q, const std::vector<double>& y, const char* what) {
    const double y0 = y[0], y1 = y[1], y2 = y[2];
    std::vector<double> v(static_cast<std::size_t>(q.nx));
    for (int i = 0; i < q.nx; ++i) {
        const Extrapolated e =
            extrapolate_to_zero(y0, q.at(0, i), y1, q.at(1, i), y2, q.at(2, i));
        if (e.discrepancy > 1e-3)
            throw NumericalError(std::string(what) +
                                 ": boundary extrapolation not converged at column " +
                                 std::to_string(i) + " (estimates differ by " +
                                 std::to_string(e.discrepancy) + ")");
        v[static_cast<std::size_t>(i)] = e.value;
    }
    return PeriodicFn(std::move(v));
}

} // namespace

Extrapolated extrapolate_to_zero(double y0, double q0, double y1, double q1, double y2,
                                 double q2) {
    const double l0 = y1 * y2 / ((y0 - y1) * (y0 - y2));
    const double l1 = y0 * y2 / ((y1 - y0) * (y1 - y2));
    const double l2 = y0 * y1 / ((y2 - y0) * (y2 - y1));
    const double quad = l0 * q0 + l1 * q1 + l2 * q2;
    const double lin = q0 - y0 * (q1 - q0) / (y1 - y0);
    return {quad, std::abs(quad - lin)};
}

CoframeGrid::CoframeGrid(Grid2D a1x_, Grid2D a1y_, Grid2D a2x_, Grid2D a2y_, Grid2D kx_,
                         Grid2D ky_)
    : a1x(std::move(a1x_)), a1y(std::move(a1y_)), a2x(std::move(a2x_)), a2y(std::move(a2y_)),
      kx(std::move(kx_)), ky(std::move(ky_)) {
    require_same_shape(a1x, a1y, "CoframeGrid");
    require_same_shape(a1x, a2x, "CoframeGrid");
    require_same_shape(a1x, a2y, "CoframeGrid");
    require_same_shape(a1x, kx, "CoframeGrid");
    require_same_shape(a1x, ky, "CoframeGrid");
    const Grid2D w = wedge();
    orientation_ = w.data[0] > 0.0 ? 1 : -1;
    for (std::size_t k = 0; k < w.data.size(); ++k) {
        if (w.data[k] == 0.0 || (w.data[k] > 0.0) != (orientation_ > 0))
            throw PreconditionError("CoframeGrid: degenerate coframe, α₁∧α₂ vanishes or "
                                    "changes sign");
    }
}

Grid2D CoframeGrid::wedge() const { return wedge_coef(a1x, a1y, a2x, a2y); }

StructureResiduals structure_residuals(const CoframeGrid& C) {
    if (C.ny() < 5) throw PreconditionError("structure_residuals: need ny >= 5");
    Grid2D da1 = d_oneform(C.a1x, C.a1y);
    Grid2D da2 = d_oneform(C.a2x, C.a2y);
    Grid2D dk = d_oneform(C.kx, C.ky);
    Grid2D ka2 = wedge_coef(C.kx, C.ky, C.a2x, C.a2y);
    Grid2D ka1 = wedge_coef(C.kx, C.ky, C.a1x, C.a1y);
    Grid2D W = C.wedge();

    StructureResiduals out{Grid2D(C.nx(), C.heights()), Grid2D(C.nx(), C.heights()),
                           Grid2D(C.nx(), C.heights())};
    for (std::size_t k = 0; k < W.data.size(); ++k) {
        out.r1.data[k] = da1.data[k] + ka2.data[k];
        out.r2.data[k] = da2.data[k] - ka1.data[k];
        out.K.data[k] = dk.data[k] / W.data[k];
    }
    return out;
}

Grid2D connection_curvature(const CoframeGrid& C) {
    // A = ½ [[α₂, α₁-κ], [α₁+κ, -α₂]]; F_A assembled from the same discrete d.
    const auto half = [](const Grid2D& g, double s) {
        Grid2D out(g.nx, g.y);
        for (std::size_t k = 0; k < g.data.size(); ++k) out.data[k] = 0.5 * s * g.data[k];
        return out;
    };
    const auto comb = [](const Grid2D& a, double ca, const Grid2D& b, double cb) {
        Grid2D out(a.nx, a.y);
        for (std::size_t k = 0; k < a.data.size(); ++k)
            out.data[k] = 0.5 * (ca * a.data[k] + cb * b.data[k]);
        return out;
    };
    // Entries of A(∂x) and A(∂y).
    Grid2D Mx11 = half(C.a2x, 1.0), Mx12 = comb(C.a1x, 1.0, C.kx, -1.0),
           Mx21 = comb(C.a1x, 1.0, C.kx, 1.0);
    Grid2D My11 = half(C.a2y, 1.0), My12 = comb(C.a1y, 1.0, C.ky, -1.0),
           My21 = comb(C.a1y, 1.0, C.ky, 1.0);

    Grid2D d11 = d_oneform(Mx11, My11);
    Grid2D d12 = d_oneform(Mx12, My12);
    Grid2D d21 = d_oneform(Mx21, My21);

    Grid2D W = C.wedge();
    Grid2D mult(C.nx(), C.heights());
    double worst_off = 0.0;
    for (std::size_t k = 0; k < W.data.size(); ++k) {
        const double m11 = Mx11.data[k], m12 = Mx12.data[k], m21 = Mx21.data[k];
        const double n11 = My11.data[k], n12 = My12.data[k], n21 = My21.data[k];
        // [M,N] for trace-free 2x2 with m22 = -m11, n22 = -n11.
        const double c11 = m12 * n21 - m21 * n12;
        const double c12 = 2.0 * (m11 * n12 - m12 * n11);
        const double c21 = 2.0 * (m21 * n11 - m11 * n21);
        const double F11 = d11.data[k] + c11;
        const double F12 = d12.data[k] + c12;
        const double F21 = d21.data[k] + c21;
        const double w = W.data[k];
        mult.data[k] = (F21 - F12) / w;
        worst_off = std::max(worst_off,
                             std::max(std::abs(F11 / w), std::abs(0.5 * (F12 + F21) / w)));
    }
    if (worst_off > 1e-8)
        throw NumericalError("connection_curvature: off-pattern curvature components reach " +
                             std::to_string(worst_off));
    return mult;
}

BoundaryAsymptotics boundary_asymptotics(const CoframeGrid& C) {
    const std::vector<double>& y = C.heights();
    int below = 0;
    for (double v : y)
        if (v < 0.1) ++below;
    if (below < 4)
        throw PreconditionError("boundary_asymptotics: need at least 4 heights below 0.1");
    for (int i = 0; i < C.nx(); ++i) {
        const double ya2y = y[0] * C.a2y.at(0, i);
        if (std::abs(ya2y - 1.0) > 0.05)
            throw PreconditionError("boundary_asymptotics: coframe not adapted (y·α₂ᵧ = " +
                                    std::to_string(ya2y) + " at column " + std::to_string(i) +
                                    ")");
    }

    Grid2D qa(C.nx(), y), qs(C.nx(), y), qu(C.nx(), y);
    for (int j = 0; j < C.ny(); ++j) {
        const double yj = y[static_cast<std::size_t>(j)];
        for (int i = 0; i < C.nx(); ++i) {
            qa.at(j, i) = yj * C.a1x.at(j, i);
            qs.at(j, i) = C.a2x.at(j, i);
            qu.at(j, i) = (C.a1x.at(j, i) + C.kx.at(j, i)) / (2.0 * yj);
        }
    }
    PeriodicFn a = column_extrapolation(qa, y, "a");
    PeriodicFn s = column_extrapolation(qs, y, "s");
    PeriodicFn u = column_extrapolation(qu, y, "u");
    for (int i = 0; i < a.size(); ++i)
        if (a[i] <= 0.0)
            throw NumericalError("boundary_asymptotics: extracted a <= 0 at column " +
                                 std::to_string(i));

    // u=0-gauge bridge for the curvature coefficient.
    const PeriodicFn da = derivative(a, 1);
    const PeriodicFn dsx = derivative(s, 1);
    std::vector<double> cv(static_cast<std::size_t>(a.size()));
    for (int i = 0; i < a.size(); ++i)
        cv[static_cast<std::size_t>(i)] =
            (dsx[i] - da[i] / a[i] * s[i] - 0.5 * s[i] * s[i]) / (a[i] * a[i]);
    return BoundaryAsymptotics{std::move(a), std::move(s), std::move(u),
                               PeriodicFn(std::move(cv))};
}

Grid2D geodesic_curvature(const Grid2D& f, const Grid2D& g, int x_degree) {
    require_same_shape(f, g, "geodesic_curvature");
    for (std::size_t k = 0; k < g.data.size(); ++k)
        if (!(g.data[k] > 0.0))
            throw PreconditionError("geodesic_curvature: g must be positive on the interior");
    // Strip the equivariant part so the x-derivative stays spectral.
    Grid2D fper = f;
    if (x_degree != 0)
        for (int j = 0; j < f.ny(); ++j)
            for (int i = 0; i < f.nx; ++i)
                fper.at(j, i) -= x_degree * static_cast<double>(i) / f.nx;
    Grid2D fp = exterior::d_x(fper), gp = exterior::d_x(g);
    if (x_degree != 0)
        for (double& v : fp.data) v += x_degree;
    Grid2D fpp = exterior::d_x(fp), gpp = exterior::d_x(gp);
    Grid2D k(f.nx, f.y);
    for (std::size_t idx = 0; idx < k.data.size(); ++idx) {
        const double q = fp.data[idx] * fp.data[idx] + gp.data[idx] * gp.data[idx];
        k.data[idx] = fp.data[idx] / std::sqrt(q) +
                      g.data[idx] * (fp.data[idx] * gpp.data[idx] - fpp.data[idx] * gp.data[idx]) /
                          (q * std::sqrt(q));
    }
    return k;
}

PeriodicFn curvature_limit(const Grid2D& k) {
    if (k.ny() < 3) throw PreconditionError("curvature_limit: need at least 3 heights");
    Grid2D q(k.nx, k.y);
    for (int j = 0; j < 3; ++j) {
        const double yj = k.y[static_cast<std::size_t>(j)];
        for (int i = 0; i < k.nx; ++i) q.at(j, i) = (k.at(j, i) - 1.0) / (yj * yj);
    }
    return column_extrapolation(q, k.y, "curvature_limit");
}

HillPotential hill_from_curvature(const PeriodicFn& a, const PeriodicFn& c) {
    require_same_size(a, c, "hill_from_curvature");
    for (int i = 0; i < a.size(); ++i)
        if (a[i] <= 0.0)
            throw PreconditionError("hill_from_curvature: a <= 0 at grid point " +
                                    std::to_string(i));
    const PeriodicFn da = derivative(a, 1);
    const PeriodicFn dda = derivative(a, 2);
    std::vector<double> t(static_cast<std::size_t>(a.size()));
    for (int i = 0; i < a.size(); ++i) {
        const double rho = da[i] / a[i];
        t[static_cast<std::size_t>(i)] =
            0.5 * (dda[i] / a[i] - 1.5 * rho * rho) + 0.5 * a[i] * a[i] * c[i];
    }
    return HillPotential{PeriodicFn(std::move(t), 2)};
}

std::pair<Grid2D, Grid2D> solve_spin_connection(const Grid2D& a1x, const Grid2D& a1y,
                                                const Grid2D& a2x, const Grid2D& a2y) {
    require_same_shape(a1x, a1y, "solve_spin_connection");
    require_same_shape(a1x, a2x, "solve_spin_connection");
    require_same_shape(a1x, a2y, "solve_spin_connection");
    Grid2D da1 = d_oneform(a1x, a1y);
    Grid2D da2 = d_oneform(a2x, a2y);
    Grid2D kx(a1x.nx, a1x.y), ky(a1x.nx, a1x.y);
    for (std::size_t k = 0; k < kx.data.size(); ++k) {
        // κₓ α₂ᵧ - κᵧ α₂ₓ = -dα₁,  κₓ α₁ᵧ - κᵧ α₁ₓ = dα₂
        const double det = -(a1x.data[k] * a2y.data[k] - a1y.data[k] * a2x.data[k]);
        if (det == 0.0)
            throw PreconditionError("solve_spin_connection: degenerate coframe");
        kx.data[k] = (-da1.data[k] * (-a1x.data[k]) - (-a2x.data[k]) * da2.data[k]) / det;
        ky.data[k] = (a2y.data[k] * da2.data[k] - a1y.data[k] * (-da1.data[k])) / det;
    }
    return {std::move(kx), std::move(ky)};
}

CoframeGrid make_example_coframe(ExampleCoframe kind, int nx, std::vector<double> y, double ell,
                                 const PeriodicFn* T) {
    Grid2D zero(nx, y);
    Grid2D a1x(nx, y), a2y(nx, y), kx(nx, y);
    const int ny = static_cast<int>(y.size());
    for (int j = 0; j < ny; ++j) {
        const double yj = y[static_cast<std::size_t>(j)];
        for (int i = 0; i < nx; ++i) {
            double a1 = 0.0, k1 = 0.0;
            switch (kind) {
                case ExampleCoframe::half_plane:
                    a1 = 1.0 / yj;
                    k1 = -1.0 / yj;
                    break;
                case ExampleCoframe::disk:
                    a1 = (1.0 - yj * yj) / (2.0 * yj);
                    k1 = -(1.0 + yj * yj) / (2.0 * yj);
                    break;
                case ExampleCoframe::cylinder:
                    a1 = ell * (1.0 + yj * yj) / (2.0 * yj);
                    k1 = -ell * (1.0 - yj * yj) / (2.0 * yj);
                    break;
                case ExampleCoframe::fefferman_graham: {
                    if (T == nullptr)
                        throw PreconditionError("make_example_coframe: missing potential");
                    if (T->size() != nx)
                        throw PreconditionError("make_example_coframe: potential size != nx");
                    const double ti = (*T)[i];
                    if (yj * yj * ti >= 1.0)
                        throw PreconditionError(
                            "make_example_coframe: y²T >= 1 leaves the Fefferman-Graham "
                            "domain at height " +
                            std::to_string(yj));
                    a1 = (1.0 - yj * yj * ti) / yj;
                    k1 = -(1.0 + yj * yj * ti) / yj;
                    break;
                }
            }
            a1x.at(j, i) = a1;
            kx.at(j, i) = k1;
            a2y.at(j, i) = 1.0 / yj;
        }
    }
    return CoframeGrid(std::move(a1x), zero, zero, std::move(a2y), std::move(kx), zero);
}

} // namespace virateich
