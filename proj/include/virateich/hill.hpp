#pragma once

#include <array>
#include <utility>

#include "virateich/diffeo.hpp"
#include "virateich/periodic_fn.hpp"

namespace virateich {

/// sl(2,R)-valued connection 1-form on the circle,
/// A = [[s/2, a], [u, -s/2]] dx.  Positive iff a > 0 everywhere.
struct BoundaryConnection {
    PeriodicFn a, s, u;

    BoundaryConnection(PeriodicFn a_, PeriodicFn s_, PeriodicFn u_);

    int size() const { return a.size(); }
    bool is_positive() const;
    /// Index of the first grid point with a <= 0, or -1 if positive.
    int first_nonpositive() const;
};

/// Smooth map into SL(2,R); det == 1 is validated pointwise to 1e-10.
struct GaugeMap {
    PeriodicFn g11, g12, g21, g22;

    GaugeMap(PeriodicFn g11_, PeriodicFn g12_, PeriodicFn g21_, PeriodicFn g22_);

    static GaugeMap identity(int n);
    int size() const { return g11.size(); }
};

/// Fundamental solution matrix of u'' + T u = 0 over one period.
struct Monodromy {
    enum class OrbitClass { hyperbolic, parabolic, elliptic };

    std::array<std::array<double, 2>, 2> matrix;
    double trace;
    OrbitClass orbit_class;
};

const char* to_string(Monodromy::OrbitClass c);

/// Gauge action g•A = Ad_g(A) - (dg)g^{-1}, entrywise spectral dg.
/// The result must come out trace-free (pointwise below 1e-10) or a
/// NumericalError is raised.
BoundaryConnection gauge_transform(const GaugeMap& h, const BoundaryConnection& A);

/// The unique lower-triangular gauge putting a positive connection into the
/// normal form [[0,1],[-T,0]] dx.  Returns (h, T); h•A is checked to land in
/// the slice (a=1, s=0) to 1e-9.
std::pair<GaugeMap, HillPotential> ds_normalize(const BoundaryConnection& A);

/// Direct formula for the Hill potential of a positive connection:
/// T = ½(a''/a - (3/2)(a'/a)²) - a·u - ¼s² - ½(a'/a)s + ½s'.
HillPotential hill_from_asu(const BoundaryConnection& A);

/// Boundary moment-map density (-½s' + ¼s² + a·u - ½a'') |dx|².
PeriodicFn hat_moment(const BoundaryConnection& A);

/// Monodromy of the Hill equation via RK4 with step 1/(8n).
Monodromy monodromy(const HillPotential& T);

/// The gauge part of the diffeomorphism splitting,
/// h = [[1,0],[½F''/F',1]]·diag((F')^{-1/2},(F')^{1/2}).
GaugeMap ds_splitting_gauge(const DiffeoLift& F);

/// Normal-form connection of a potential: (a,s,u) = (1, 0, -T).
BoundaryConnection ds_connection(const HillPotential& T);

/// Pullback of the connection coefficient under F:
/// (F*A)(x) = A(F̃(x))·F̃'(x), entrywise trigonometric interpolation.
BoundaryConnection pullback(const DiffeoLift& F, const BoundaryConnection& A);

} // namespace virateich
