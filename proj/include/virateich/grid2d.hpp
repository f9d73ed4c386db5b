#pragma once

#include <span>
#include <vector>

#include "virateich/errors.hpp"

namespace virateich {

/// Scalar field on an (x,y) grid: nx uniform periodic columns (x_i = i/nx,
/// nx a power of two >= 16) by ny rows at strictly increasing heights y_j > 0.
struct Grid2D {
    int nx = 0;
    std::vector<double> y;
    std::vector<double> data; // row-major, data[j*nx + i]

    Grid2D(int nx_, std::vector<double> y_);
    Grid2D(int nx_, std::vector<double> y_, std::vector<double> data_);

    int ny() const { return static_cast<int>(y.size()); }
    double& at(int j, int i) { return data[static_cast<std::size_t>(j) * nx + i]; }
    double at(int j, int i) const { return data[static_cast<std::size_t>(j) * nx + i]; }

    template <class F>
    static Grid2D sample(int nx, std::vector<double> y, F&& f) {
        Grid2D g(nx, std::move(y));
        for (int j = 0; j < g.ny(); ++j)
            for (int i = 0; i < nx; ++i)
                g.at(j, i) = f(static_cast<double>(i) / nx, g.y[static_cast<std::size_t>(j)]);
        return g;
    }

    double max_abs() const;
    double max_abs_interior() const; // rows 2..ny-3 (away from one-sided stencils)
};

void require_same_shape(const Grid2D& a, const Grid2D& b, const char* op);

/// Geometric heights y_j = y0 * ratio^j, j = 0..ny-1.
std::vector<double> geometric_heights(double y0, double ratio, int ny);

/// Finite-difference weights for the m-th derivative at x0 from the nodes xs
/// (classic recursive weight generation; exact on polynomials of degree
/// < xs.size()).
std::vector<double> fd_weights(double x0, std::span<const double> xs, int m);

namespace exterior {

/// ∂/∂x row-by-row, spectral.  OpenMP-parallel over rows.
Grid2D d_x(const Grid2D& g);

/// ∂/∂y by 5-point finite differences on the (possibly non-uniform) height
/// grid, one-sided at the ends.  Requires ny >= 5.  OpenMP-parallel over rows.
Grid2D d_y(const Grid2D& g);

/// Reference implementations: same arithmetic, plain loops.  Kept for testing
/// (results must match the parallel kernels bit for bit) and benchmarking.
namespace serial {
Grid2D d_x(const Grid2D& g);
Grid2D d_y(const Grid2D& g);
} // namespace serial

/// Row weights for d_y, shared by the serial and parallel kernels.
std::vector<std::vector<double>> dy_stencils(std::span<const double> y, int& stencil_halfwidth);

} // namespace exterior

} // namespace virateich
