#pragma once

#include "virateich/diffeo.hpp"
#include "virateich/trumpet.hpp"

namespace virateich {

/// Groupoid element in left trivialization: source potential plus the acting
/// diffeomorphism lift.
struct GroupoidPoint {
    HillPotential T;
    DiffeoLift F;
};

struct GroupoidTangent {
    PeriodicFn dT;
    PeriodicFn dF;
};

/// ω_G = ∫( dT∧β + T·β∧β' - ¼β'''∧β ) with β = dF/F'.
double omega_G_left(const GroupoidPoint& p, const GroupoidTangent& v, const GroupoidTangent& w);

/// Same element described by (T₀, F) with T = F⁻¹·T₀.
struct RightTrivPoint {
    PeriodicFn T0;
    DiffeoLift F;
};

/// Expansion of ω_G = d∫((T₀∘F)·F'dF - ¼(F')⁻¹dF''):
/// ∫( F'·(dT₀∘F)∧dF + (T₀∘F)·dF'∧dF + ¼(F')⁻²·dF'∧dF'' ).
/// Composition with F is invisible on the constant-T₀ slice and is pinned by
/// the agreement with the left trivialization.
double omega_G_right(const RightTrivPoint& p, const GroupoidTangent& v, const GroupoidTangent& w);

/// Restriction to constant T₀ = -ℓ²/4 with dT₀ the pullback of -ℓ·dℓ/2; must
/// reproduce omega_N.
double slice_restrict(double ell, const DiffeoLift& F, const TrumpetTangent& v,
                      const TrumpetTangent& w);

/// Coordinate change (T₀, F) ↦ (T, F) with T = F⁻¹·T₀.
GroupoidPoint left_from_right(const RightTrivPoint& p);

/// Tangent transport under the coordinate change, by central differences of
/// the change map (step 1e-4 scaled by the tangent magnitude).
GroupoidTangent left_tangent_from_right(const RightTrivPoint& p, const GroupoidTangent& t);

} // namespace virateich
