#pragma once

#include <optional>

#include "virateich/diffeo.hpp"
#include "virateich/grid2d.hpp"
#include "virateich/periodic_fn.hpp"

namespace virateich {

/// Sampled components of an orthonormal 0-coframe (α₁, α₂) and its spin
/// connection κ on an (x,y) grid, each 1-form stored as (·)_x dx + (·)_y dy.
///
/// The wedge coefficient α₁ₓα₂ᵧ - α₁ᵧα₂ₓ must be nonvanishing of constant
/// sign; a reversed (negative) orientation is tolerated so that coframes in
/// non-adapted coordinates can be fed through the same kernels.
struct CoframeGrid {
    Grid2D a1x, a1y, a2x, a2y, kx, ky;

    CoframeGrid(Grid2D a1x_, Grid2D a1y_, Grid2D a2x_, Grid2D a2y_, Grid2D kx_, Grid2D ky_);

    int nx() const { return a1x.nx; }
    int ny() const { return a1x.ny(); }
    const std::vector<double>& heights() const { return a1x.y; }

    /// Coefficient of α₁∧α₂ against dx∧dy.
    Grid2D wedge() const;
    int orientation() const { return orientation_; }

private:
    int orientation_;
};

struct StructureResiduals {
    Grid2D r1; // dα₁ + κ∧α₂
    Grid2D r2; // dα₂ - κ∧α₁
    Grid2D K;  // dκ / (α₁∧α₂)
};

/// Boundary expansion coefficients of an adapted coframe.  `c` is the
/// geodesic-curvature coefficient computed through the u=0-gauge bridge
/// c = (1/a²)(s' - (a'/a)s - ½s²); the grid-level extraction lives in
/// curvature_limit.
struct BoundaryAsymptotics {
    PeriodicFn a, s, u, c;
};

/// Residuals of the two coframe structure equations and the Gauss curvature
/// solved from the third.  Exterior derivatives: spectral in x; in y, 5-point
/// finite differences applied to the regular rescalings y·(component), which
/// is exact whenever y·(component) is polynomial of degree <= 4 in y.
StructureResiduals structure_residuals(const CoframeGrid& C);

/// Scalar multiplier m with F_A = m·[[0,-1],[1,0]]·dvol for the connection
/// 1-form assembled from the coframe; equals K+1 for a coframe satisfying the
/// first two structure equations.  Off-pattern components of F_A (relative to
/// dvol) above 1e-8 raise NumericalError.
Grid2D connection_curvature(const CoframeGrid& C);

/// Extrapolates (a, s, u) to y=0 by quadratic fits through the three smallest
/// heights; requires at least 4 heights below 0.1 and the adaptedness check
/// y·α₂ᵧ → 1 within 5% at the smallest height.
BoundaryAsymptotics boundary_asymptotics(const CoframeGrid& C);

/// Geodesic curvature in the upper half-plane of the curves t ↦ (x+t, y)
/// pushed through the sampled map (f,g); primes are x-derivatives:
/// k = f'/((f')²+(g')²)^{1/2} + g·(f'g''-f''g')/((f')²+(g')²)^{3/2}.
/// `x_degree` is the equivariance degree of f in x (charts satisfy
/// f(x+1,y) = f(x,y)+1, closed curves have degree 0); g is periodic.
Grid2D geodesic_curvature(const Grid2D& f, const Grid2D& g, int x_degree = 1);

/// lim_{y→0} (k(x,y)-1)/y² extracted by quadratic extrapolation from the
/// three smallest heights.
PeriodicFn curvature_limit(const Grid2D& k);

/// T = ½(a''/a - (3/2)(a'/a)²) + (a²/2)·c.
HillPotential hill_from_curvature(const PeriodicFn& a, const PeriodicFn& c);

/// Spin connection solved pointwise from dα₁ = -κ∧α₂, dα₂ = κ∧α₁ using the
/// same discrete exterior derivative as structure_residuals.
std::pair<Grid2D, Grid2D> solve_spin_connection(const Grid2D& a1x, const Grid2D& a1y,
                                                const Grid2D& a2x, const Grid2D& a2y);

enum class ExampleCoframe { half_plane, disk, cylinder, fefferman_graham };

/// Standard model coframes, all in boundary-adapted form (α₂ = dy/y).
/// `ell` is the neck length for the cylinder; `T` the potential for the
/// Fefferman-Graham family (domain y²T(x) < 1 enforced).
CoframeGrid make_example_coframe(ExampleCoframe kind, int nx, std::vector<double> y,
                                 double ell = 1.0, const PeriodicFn* T = nullptr);

/// Quadratic (in y) extrapolation to y=0 through three samples, with the
/// linear two-point estimate used as the convergence reference.
struct Extrapolated {
    double value;
    double discrepancy; // |quadratic - linear|
};
Extrapolated extrapolate_to_zero(double y0, double q0, double y1, double q1, double y2, double q2);

} // namespace virateich
