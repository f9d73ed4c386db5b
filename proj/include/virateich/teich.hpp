#pragma once

#include <array>
#include <vector>

#include "virateich/trumpet.hpp"

namespace virateich {

/// Fenchel-Nielsen point: 3g-3+r interior (length, twist) pairs plus one
/// trumpet factor per boundary circle.  Requires 2-2g-r < 0.
struct FNPoint {
    int genus;
    std::vector<std::array<double, 2>> interior; // (ℓ_i, τ_i)
    std::vector<TrumpetPoint> boundary;

    FNPoint(int genus_, std::vector<std::array<double, 2>> interior_,
            std::vector<TrumpetPoint> boundary_);

    int boundary_count() const { return static_cast<int>(boundary.size()); }
};

struct FNTangent {
    std::vector<std::array<double, 2>> interior; // (δℓ_i, δτ_i)
    std::vector<TrumpetTangent> boundary;
};

/// ω = ½ Σ dℓ_i∧dτ_i + Σ_j π_j*ω_N (block diagonal by construction).
double omega_teich(const FNPoint& p, const FNTangent& v, const FNTangent& w);

/// Per-boundary moment potentials Φ_j = ℓ_j²F_j'²/4 - ½S(F_j).
std::vector<HillPotential> boundary_moment(const FNPoint& p);

/// The boundary action at index j: F_j ↦ F_j ∘ F⁻¹.
FNPoint boundary_action(const FNPoint& p, int j, const DiffeoLift& F);

/// Natural tangent transport under boundary_action: δF_j ↦ δF_j ∘ F̃⁻¹,
/// other components unchanged.
FNTangent transport_tangent(const FNPoint& p, const FNTangent& t, int j, const DiffeoLift& F);

} // namespace virateich
