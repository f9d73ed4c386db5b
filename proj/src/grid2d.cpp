#include "virateich/grid2d.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <string>

#include "virateich/periodic_fn.hpp"
#include "virateich/spectral.hpp"

namespace virateich {

namespace {

void validate_axes(int nx, const std::vector<double>& y) {
    if (nx < 16 || (nx & (nx - 1)) != 0)
        throw PreconditionError("Grid2D: nx must be a power of two >= 16, got " +
                                std::to_string(nx));
    if (y.empty()) throw PreconditionError("Grid2D: empty height list");
    for (std::size_t j = 0; j < y.size(); ++j) {
        if (!(y[j] > 0.0))
            throw PreconditionError("Grid2D: heights must be positive, y[" + std::to_string(j) +
                                    "] = " + std::to_string(y[j]));
        if (j > 0 && !(y[j] > y[j - 1]))
            throw PreconditionError("Grid2D: heights must be strictly increasing at index " +
                                    std::to_string(j));
    }
}

} // namespace

Grid2D::Grid2D(int nx_, std::vector<double> y_) : nx(nx_), y(std::move(y_)) {
    validate_axes(nx, y);
    data.assign(static_cast<std::size_t>(nx) * y.size(), 0.0);
}

Grid2D::Grid2D(int nx_, std::vector<double> y_, std::vector<double> data_)
    : nx(nx_), y(std::move(y_)), data(std::move(data_)) {
    validate_axes(nx, y);
    if (data.size() != static_cast<std::size_t>(nx) * y.size())
        throw PreconditionError("Grid2D: data size does not match nx*ny");
}

double Grid2D::max_abs() const {
    double m = 0.0;
    for (double v : data) m = std::max(m, std::abs(v));
    return m;
}

double Grid2D::max_abs_interior() const {
    double m = 0.0;
    for (int j = 2; j < ny() - 2; ++j)
        for (int i = 0; i < nx; ++i) m = std::max(m, std::abs(at(j, i)));
    return m;
}

void require_same_shape(const Grid2D& a, const Grid2D& b, const char* op) {
    if (a.nx != b.nx || a.y.size() != b.y.size())
        throw PreconditionError(std::string(op) + ": grid shape mismatch");
}

std::vector<double> geometric_heights(double y0, double ratio, int ny) {
    if (!(y0 > 0.0) || !(ratio > 1.0) || ny < 1)
        throw PreconditionError("geometric_heights: need y0 > 0, ratio > 1, ny >= 1");
    std::vector<double> y(static_cast<std::size_t>(ny));
    double v = y0;
    for (int j = 0; j < ny; ++j) {
        y[static_cast<std::size_t>(j)] = v;
        v *= ratio;
    }
    return y;
}

std::vector<double> fd_weights(double x0, std::span<const double> xs, int m) {
    // B. Fornberg's recursion, Math. Comp. 51 (1988).
    const int nd = static_cast<int>(xs.size()) - 1;
    if (nd < m) throw PreconditionError("fd_weights: not enough nodes for requested derivative");
    std::vector<std::vector<double>> c(static_cast<std::size_t>(nd + 1),
                                       std::vector<double>(static_cast<std::size_t>(m + 1), 0.0));
    double c1 = 1.0;
    double c4 = xs[0] - x0;
    c[0][0] = 1.0;
    for (int i = 1; i <= nd; ++i) {
        const int mn = std::min(i, m);
        double c2 = 1.0;
        const double c5 = c4;
        c4 = xs[static_cast<std::size_t>(i)] - x0;
        for (int j = 0; j < i; ++j) {
            const double c3 = xs[static_cast<std::size_t>(i)] - xs[static_cast<std::size_t>(j)];
            c2 *= c3;
            if (j == i - 1) {
                for (int k = mn; k >= 1; --k)
                    c[static_cast<std::size_t>(i)][static_cast<std::size_t>(k)] =
                        c1 * (k * c[static_cast<std::size_t>(i - 1)][static_cast<std::size_t>(k - 1)] -
                              c5 * c[static_cast<std::size_t>(i - 1)][static_cast<std::size_t>(k)]) /
                        c2;
                c[static_cast<std::size_t>(i)][0] =
                    -c1 * c5 * c[static_cast<std::size_t>(i - 1)][0] / c2;
            }
            for (int k = mn; k >= 1; --k)
                c[static_cast<std::size_t>(j)][static_cast<std::size_t>(k)] =
                    (c4 * c[static_cast<std::size_t>(j)][static_cast<std::size_t>(k)] -
                     k * c[static_cast<std::size_t>(j)][static_cast<std::size_t>(k - 1)]) /
                    c3;
            c[static_cast<std::size_t>(j)][0] = c4 * c[static_cast<std::size_t>(j)][0] / c3;
        }
        c1 = c2;
    }
    std::vector<double> w(xs.size());
    for (std::size_t i = 0; i < xs.size(); ++i) w[i] = c[i][static_cast<std::size_t>(m)];
    return w;
}

namespace exterior {

std::vector<std::vector<double>> dy_stencils(std::span<const double> y, int& stencil_halfwidth) {
    const int ny = static_cast<int>(y.size());
    if (ny < 5) throw PreconditionError("d_y: need at least 5 heights for 5-point stencils");
    stencil_halfwidth = 2;
    std::vector<std::vector<double>> w(static_cast<std::size_t>(ny));
    for (int j = 0; j < ny; ++j) {
        const int start = std::clamp(j - 2, 0, ny - 5);
        w[static_cast<std::size_t>(j)] =
            fd_weights(y[static_cast<std::size_t>(j)], y.subspan(static_cast<std::size_t>(start), 5), 1);
    }
    return w;
}

namespace {

void dx_row(const Grid2D& g, Grid2D& out, int j) {
    const int n = g.nx;
    std::vector<std::complex<double>> spec(static_cast<std::size_t>(n / 2 + 1));
    detail::fft_forward(&g.data[static_cast<std::size_t>(j) * n], spec.data(), n);
    for (int m = 0; m < n / 2; ++m)
        spec[static_cast<std::size_t>(m)] *= std::complex<double>(0.0, kTwoPi * m);
    spec[static_cast<std::size_t>(n / 2)] = 0.0;
    detail::fft_inverse(spec.data(), &out.data[static_cast<std::size_t>(j) * n], n);
}

void dy_row(const Grid2D& g, Grid2D& out, const std::vector<std::vector<double>>& w, int j) {
    const int ny = g.ny();
    const int start = std::clamp(j - 2, 0, ny - 5);
    const std::vector<double>& wj = w[static_cast<std::size_t>(j)];
    for (int i = 0; i < g.nx; ++i) {
        double acc = 0.0;
        for (int k = 0; k < 5; ++k) acc += wj[static_cast<std::size_t>(k)] * g.at(start + k, i);
        out.at(j, i) = acc;
    }
}

} // namespace

Grid2D d_x(const Grid2D& g) {
    Grid2D out(g.nx, g.y);
    const int ny = g.ny();
#pragma omp parallel for schedule(static)
    for (int j = 0; j < ny; ++j) dx_row(g, out, j);
    return out;
}

Grid2D d_y(const Grid2D& g) {
    Grid2D out(g.nx, g.y);
    int hw = 0;
    const auto w = dy_stencils(g.y, hw);
    const int ny = g.ny();
#pragma omp parallel for schedule(static)
    for (int j = 0; j < ny; ++j) dy_row(g, out, w, j);
    return out;
}

namespace serial {

Grid2D d_x(const Grid2D& g) {
    Grid2D out(g.nx, g.y);
    for (int j = 0; j < g.ny(); ++j) dx_row(g, out, j);
    return out;
}

Grid2D d_y(const Grid2D& g) {
    Grid2D out(g.nx, g.y);
    int hw = 0;
    const auto w = dy_stencils(g.y, hw);
    for (int j = 0; j < g.ny(); ++j) dy_row(g, out, w, j);
    return out;
}

} // namespace serial

} // namespace exterior

} // namespace virateich
