#include "virateich/teich.hpp"

#include <string>

#include "virateich/spectral.hpp"

namespace virateich {

FNPoint::FNPoint(int genus_, std::vector<std::array<double, 2>> interior_,
                 std::vector<TrumpetPoint> boundary_)
    : genus(genus_), interior(std::move(interior_)), boundary(std::move(boundary_)) {
    const int r = static_cast<int>(boundary.size());
    if (genus < 0) throw PreconditionError("FNPoint: negative genus");
    if (2 - 2 * genus - r >= 0)
        throw PreconditionError("FNPoint: Euler characteristic 2-2g-r must be negative (g=" +
                                std::to_string(genus) + ", r=" + std::to_string(r) + ")");
    const int expected = 3 * genus - 3 + r;
    if (static_cast<int>(interior.size()) != expected)
        throw PreconditionError("FNPoint: expected " + std::to_string(expected) +
                                " interior (length,twist) pairs, got " +
                                std::to_string(interior.size()));
    for (std::size_t i = 0; i < interior.size(); ++i)
        if (!(interior[i][0] > 0.0))
            throw PreconditionError("FNPoint: interior length " + std::to_string(i) +
                                    " must be positive");
}

namespace {

void check_dims(const FNPoint& p, const FNTangent& t, const char* op) {
    if (t.interior.size() != p.interior.size() || t.boundary.size() != p.boundary.size())
        throw PreconditionError(std::string(op) + ": tangent dimensions do not match the point");
}

} // namespace

double omega_teich(const FNPoint& p, const FNTangent& v, const FNTangent& w) {
    check_dims(p, v, "omega_teich");
    check_dims(p, w, "omega_teich");
    double acc = 0.0;
    for (std::size_t i = 0; i < p.interior.size(); ++i)
        acc += 0.5 * (v.interior[i][0] * w.interior[i][1] - w.interior[i][0] * v.interior[i][1]);
    for (std::size_t j = 0; j < p.boundary.size(); ++j)
        acc += omega_N(p.boundary[j], v.boundary[j], w.boundary[j]);
    return acc;
}

std::vector<HillPotential> boundary_moment(const FNPoint& p) {
    std::vector<HillPotential> out;
    out.reserve(p.boundary.size());
    for (const TrumpetPoint& b : p.boundary) out.push_back(moment_diff(b));
    return out;
}

FNPoint boundary_action(const FNPoint& p, int j, const DiffeoLift& F) {
    if (j < 0 || j >= p.boundary_count())
        throw PreconditionError("boundary_action: index " + std::to_string(j) +
                                " out of range for r=" + std::to_string(p.boundary_count()));
    std::vector<TrumpetPoint> boundary = p.boundary;
    boundary[static_cast<std::size_t>(j)] =
        TrumpetPoint(p.boundary[static_cast<std::size_t>(j)].ell,
                     compose(p.boundary[static_cast<std::size_t>(j)].F, invert(F)));
    return FNPoint(p.genus, p.interior, std::move(boundary));
}

FNTangent transport_tangent(const FNPoint& p, const FNTangent& t, int j, const DiffeoLift& F) {
    check_dims(p, t, "transport_tangent");
    if (j < 0 || j >= p.boundary_count())
        throw PreconditionError("transport_tangent: index out of range");
    FNTangent out = t;
    const DiffeoLift G = invert(F);
    const std::vector<double> gx = G.lift_values();
    const std::vector<double> moved =
        interpolate(t.boundary[static_cast<std::size_t>(j)].dF, gx);
    out.boundary[static_cast<std::size_t>(j)].dF =
        PeriodicFn(moved, t.boundary[static_cast<std::size_t>(j)].dF.weight());
    return out;
}

} // namespace virateich
