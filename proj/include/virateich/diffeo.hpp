#pragma once

#include "virateich/periodic_fn.hpp"
#include "virateich/rng.hpp"

namespace virateich {

/// A lift F̃ of an orientation-preserving circle diffeomorphism:
/// F̃(x+1) = F̃(x)+1, stored through its periodic part φ = F̃ - id and an
/// integer winding, normalized so that φ(0) = F̃(0) - winding lies in [0,1).
///
/// Orientation: F̃' = 1 + φ' must exceed kMonotonicityFloor at every grid
/// point; inputs closer to degeneracy are rejected (downstream formulas
/// divide by F̃').
class DiffeoLift {
public:
    static constexpr double kMonotonicityFloor = 1e-6;

    static DiffeoLift identity(int n);
    static DiffeoLift rotation(int n, double t);
    /// Normalizes (φ, winding) and validates monotonicity.
    static DiffeoLift from_periodic_part(PeriodicFn phi, long winding = 0);

    const PeriodicFn& periodic_part() const { return phi_; }
    long winding() const { return winding_; }
    int size() const { return phi_.size(); }

    /// F̃ at the grid points (not periodic; includes x_k and the winding).
    std::vector<double> lift_values() const;
    /// Samples of F̃' = 1 + φ' (weight 1).
    PeriodicFn dlift() const;

private:
    DiffeoLift(PeriodicFn phi, long winding) : phi_(std::move(phi)), winding_(winding) {}

    PeriodicFn phi_;
    long winding_;
};

/// Samples of F̃(G̃(x_k)) as a lift; windings add (after renormalization).
DiffeoLift compose(const DiffeoLift& F, const DiffeoLift& G);

/// Pointwise safeguarded Newton (bisection fallback) on the strictly monotone
/// F̃; |F̃(G̃(x_k)) - x_k| <= 1e-10 or NumericalError after 100 iterations.
DiffeoLift invert(const DiffeoLift& F);

/// Schwarzian derivative S(F) = F'''/F' - (3/2)(F''/F')², weight 2.
PeriodicFn schwarzian(const DiffeoLift& F);

/// A Hill potential: the coefficient T of d²/dx² + T(x), a 2-density.
struct HillPotential {
    PeriodicFn T;
};

/// The affine action on Hill potentials evaluated with the stored F:
/// result(x) = F'(x)² T(F(x)) + ½ S(F)(x).
/// (This is the transformation law written with F as it appears on the
/// right-hand side; callers wanting the action of G feed invert(G).)
HillPotential act_on_hill(const DiffeoLift& F, const HillPotential& T);

/// Variation of F under the left-invariant field generated by f ∂_x:
/// δF = -F'·f.
PeriodicFn left_invariant_vector(const DiffeoLift& F, const PeriodicFn& f);

/// Random smooth test data (modes <= 4; for diffeos ‖φ'‖∞ <= 0.45 enforced).
PeriodicFn random_trig_poly(Rng& rng, int n, int max_mode, double amplitude,
                            double const_amplitude = 0.0, int weight = 0);
PeriodicFn random_smooth_positive(Rng& rng, int n, double log_amplitude);
DiffeoLift random_diffeo(Rng& rng, int n);

} // namespace virateich
