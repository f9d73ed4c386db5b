#pragma once

#include "virateich/diffeo.hpp"
#include "virateich/periodic_fn.hpp"

namespace virateich {

/// Point of the trumpet moduli space R₊ × lifted-Diff(S¹): geodesic neck
/// length and boundary reparametrization lift.
struct TrumpetPoint {
    double ell;
    DiffeoLift F;

    TrumpetPoint(double ell_, DiffeoLift F_);
};

/// Unconstrained tangent vector (δℓ, δF); δF varies the periodic part of the
/// lift directly.
struct TrumpetTangent {
    double d_ell;
    PeriodicFn dF;
};

/// The invariant symplectic form,
/// ω_N = ¼∫( -F'·dℓ²∧dF - ℓ²·dF'∧dF + dF'∧dF''/(F')² ).
double omega_N(const TrumpetPoint& p, const TrumpetTangent& v, const TrumpetTangent& w);

/// Moment map for the diffeomorphism action: -(F⁻¹·T(ℓ)) with the constant
/// potential T(ℓ) = -ℓ²/4, i.e. ℓ²F'²/4 - ½S(F).
HillPotential moment_diff(const TrumpetPoint& p);

/// |ι(v^L)ω_N - d⟨F⁻¹·T(ℓ), f⟩(w)| with v^L = (0, -F'f) and the right side
/// by central differences along w.
double verify_moment_diff(const TrumpetPoint& p, const PeriodicFn& f, const TrumpetTangent& w);

/// |ι(Z)ω_N(w) - ¼dℓ²(w)| for the circle direction Z = (0, 1).
double verify_moment_circle(const TrumpetPoint& p, const TrumpetTangent& w);

/// Darboux scalar u(x) = log F̃'(x) + ℓ(F̃(x) - x).
PeriodicFn darboux_u(const TrumpetPoint& p);

/// Pushforward of a tangent: δu = δF'/F' + δℓ·(F̃-id) + ℓ·δF.
PeriodicFn darboux_du(const TrumpetPoint& p, const TrumpetTangent& t);

/// -½dℓ∧du₀ + ¼∫du∧du' evaluated through the pushforward.
double omega_N_darboux(const TrumpetPoint& p, const TrumpetTangent& v, const TrumpetTangent& w);

/// Same form through Fourier modes of δu:
/// -½dℓ∧du₀ + πi Σ_{m>0} m·du_{-m}∧du_m.
double omega_N_fourier(const TrumpetPoint& p, const TrumpetTangent& v, const TrumpetTangent& w);

/// Contraction of the primitive λ = -¼∫(ℓ²F'dF + (F')⁻¹dF'') with a tangent.
double lambda_contract(const TrumpetPoint& p, const TrumpetTangent& t);

/// |ω_N(v,w) - dλ(v,w)| with dλ by central differences of lambda_contract
/// (constant coordinate tangents, so no bracket term).
double exactness_residual(const TrumpetPoint& p, const TrumpetTangent& v,
                          const TrumpetTangent& w);

/// Checkable shadow of the circle reduction at fixed ℓ: over `samples` random
/// lifts and tangents, the circle direction Z = (0,1) pairs to zero with
/// every ℓ-fixing tangent (including Z itself), and the moment potential is
/// unchanged along the circle orbit (asserted through the monodromy trace).
/// Returns the maximum residual.
double virasoro_orbit_check(double ell, int samples, std::uint64_t seed);

/// p shifted along t by h in the (ℓ, φ) chart; winding unchanged.
TrumpetPoint shifted(const TrumpetPoint& p, const TrumpetTangent& t, double h);

/// Step size for tangent finite differences: 1e-4·(1+‖t‖∞).
double fd_step(const TrumpetTangent& t);

} // namespace virateich
