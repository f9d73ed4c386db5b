// Spectral calculus on the uniform periodic grid, on top of FFTW.
//
// Conventions: the forward transform is the plain unnormalized DFT with
// e^{-2πikm/n}; Fourier coefficients of functions are DFT/n.  Everything here
// assumes the PeriodicFn invariant (n a power of two), so the r2c spectrum
// has bins m = 0..n/2 with a real Nyquist bin.

#include "virateich/spectral.hpp"

#include <fftw3.h>

#include <cmath>
#include <cstring>
#include <map>
#include <mutex>
#include <string>

namespace virateich {

namespace detail {

namespace {

struct PlanSet {
    fftw_plan r2c = nullptr;
    fftw_plan c2r = nullptr;
    double* re = nullptr;
    fftw_complex* cx = nullptr;

    ~PlanSet() {
        if (r2c) fftw_destroy_plan(r2c);
        if (c2r) fftw_destroy_plan(c2r);
        if (re) fftw_free(re);
        if (cx) fftw_free(cx);
    }
};

// fftw_plan_* is not thread-safe; creation is serialized and plans are reused.
// FFTW_UNALIGNED lets us execute on arbitrary caller buffers afterwards.
const PlanSet& plans_for(int n) {
    static std::mutex mu;
    static std::map<int, PlanSet> cache;
    std::scoped_lock lock(mu);
    auto it = cache.find(n);
    if (it == cache.end()) {
        PlanSet& p = cache[n];
        p.re = fftw_alloc_real(static_cast<std::size_t>(n));
        p.cx = fftw_alloc_complex(static_cast<std::size_t>(n / 2 + 1));
        const unsigned flags = FFTW_ESTIMATE | FFTW_UNALIGNED;
        p.r2c = fftw_plan_dft_r2c_1d(n, p.re, p.cx, flags);
        p.c2r = fftw_plan_dft_c2r_1d(n, p.cx, p.re, flags);
        it = cache.find(n);
    }
    return it->second;
}

} // namespace

void fft_forward(const double* in, std::complex<double>* out, int n) {
    const PlanSet& p = plans_for(n);
    // r2c does not modify its input; const_cast is for the C API only.
    fftw_execute_dft_r2c(p.r2c, const_cast<double*>(in), reinterpret_cast<fftw_complex*>(out));
}

void fft_inverse(const std::complex<double>* in, double* out, int n) {
    const PlanSet& p = plans_for(n);
    // c2r destroys its input; work on a copy.
    std::vector<std::complex<double>> tmp(in, in + n / 2 + 1);
    fftw_execute_dft_c2r(p.c2r, reinterpret_cast<fftw_complex*>(tmp.data()), out);
    const double inv = 1.0 / n;
    for (int k = 0; k < n; ++k) out[k] *= inv;
}

} // namespace detail

namespace {

// (2πi m)^order as an explicit complex pair; exact quarter-turns.
std::complex<double> ik_power(int m, int order) {
    const double mag = std::pow(kTwoPi * m, order);
    switch (order & 3) {
        case 0: return {mag, 0.0};
        case 1: return {0.0, mag};
        case 2: return {-mag, 0.0};
        default: return {0.0, -mag};
    }
}

} // namespace

PeriodicFn derivative(const PeriodicFn& f, int order) {
    if (order < 1) throw PreconditionError("derivative: order must be positive");
    const int n = f.size();
    // The mean never survives differentiation, but it does inflate the FFT's
    // absolute roundoff, which high orders then amplify by (2πm)^order.
    const double m0 = f.mean();
    std::vector<double> centered(f.values());
    for (double& v : centered) v -= m0;
    std::vector<std::complex<double>> spec(static_cast<std::size_t>(n / 2 + 1));
    detail::fft_forward(centered.data(), spec.data(), n);
    // Noise gate: bins within a few ulp of the spectral peak are FFT roundoff,
    // indistinguishable from genuine content of that size; (2πm)^order would
    // amplify them to the dominant error.  Zeroing them is at worst neutral.
    double peak = 0.0;
    for (const auto& c : spec) peak = std::max(peak, std::abs(c));
    const double gate = 8.0 * 2.220446049250313e-16 * peak;
    for (auto& c : spec)
        if (std::abs(c) < gate) c = 0.0;
    for (int m = 0; m <= n / 2; ++m) spec[static_cast<std::size_t>(m)] *= ik_power(m, order);
    if (order % 2 != 0) spec[static_cast<std::size_t>(n / 2)] = 0.0;
    std::vector<double> out(static_cast<std::size_t>(n));
    detail::fft_inverse(spec.data(), out.data(), n);
    return PeriodicFn(std::move(out), f.weight() + order);
}

double integral(const PeriodicFn& f) { return f.mean(); }

TrigInterpolant::TrigInterpolant(const PeriodicFn& f) : n_(f.size()) {
    coef_.resize(static_cast<std::size_t>(n_ / 2 + 1));
    detail::fft_forward(f.values().data(), coef_.data(), n_);
    const double inv = 1.0 / n_;
    for (auto& c : coef_) c *= inv;
}

namespace {

// Compensated accumulator.  Spectral differentiation amplifies per-sample
// noise of interpolated values by up to (πn)^order, so evaluation has to sum
// to better than plain double accumulation.
struct KahanSum {
    double acc = 0.0;
    double comp = 0.0;
    void add(double term) {
        const double y = term - comp;
        const double t = acc + y;
        comp = (t - acc) - y;
        acc = t;
    }
};

} // namespace

double TrigInterpolant::operator()(double x) const {
    const double xr = x - std::floor(x);
    // c_0 + 2 Σ_{0<m<n/2} Re(c_m e^{2πimx}) + Re(c_{n/2}) cos(πnx)
    KahanSum sum;
    sum.add(coef_[0].real());
    for (int m = 1; m < n_ / 2; ++m) {
        const double ang = kTwoPi * m * xr;
        const auto& c = coef_[static_cast<std::size_t>(m)];
        sum.add(2.0 * (c.real() * std::cos(ang) - c.imag() * std::sin(ang)));
    }
    sum.add(coef_[static_cast<std::size_t>(n_ / 2)].real() * std::cos(kPi * n_ * xr));
    return sum.acc;
}

double TrigInterpolant::deriv(double x) const {
    const double xr = x - std::floor(x);
    KahanSum sum;
    for (int m = 1; m < n_ / 2; ++m) {
        const double ang = kTwoPi * m * xr;
        const auto& c = coef_[static_cast<std::size_t>(m)];
        sum.add(2.0 * kTwoPi * m * (-c.real() * std::sin(ang) - c.imag() * std::cos(ang)));
    }
    // Nyquist dropped, as in odd-order spectral derivatives.
    return sum.acc;
}

double interpolate(const PeriodicFn& f, double x) { return TrigInterpolant(f)(x); }

std::vector<double> interpolate(const PeriodicFn& f, std::span<const double> xs) {
    TrigInterpolant ip(f);
    std::vector<double> out(xs.size());
    for (std::size_t i = 0; i < xs.size(); ++i) out[i] = ip(xs[i]);
    return out;
}

FourierCoeffs fourier(const PeriodicFn& f, int max_mode) {
    const int n = f.size();
    if (max_mode < 0 || max_mode >= n / 2)
        throw PreconditionError("fourier: cutoff must satisfy 0 <= M < n/2, got M=" +
                                std::to_string(max_mode) + ", n=" + std::to_string(n));
    std::vector<std::complex<double>> spec(static_cast<std::size_t>(n / 2 + 1));
    detail::fft_forward(f.values().data(), spec.data(), n);
    std::vector<std::complex<double>> modes(static_cast<std::size_t>(max_mode + 1));
    const double inv = 1.0 / n;
    for (int m = 0; m <= max_mode; ++m) modes[static_cast<std::size_t>(m)] = spec[static_cast<std::size_t>(m)] * inv;
    return FourierCoeffs(max_mode, std::move(modes));
}

PeriodicFn inverse_fourier(const FourierCoeffs& coeffs, int n, int weight) {
    if (coeffs.max_mode() >= n / 2)
        throw PreconditionError("inverse_fourier: cutoff exceeds target resolution");
    std::vector<std::complex<double>> spec(static_cast<std::size_t>(n / 2 + 1), {0.0, 0.0});
    for (int m = 0; m <= coeffs.max_mode(); ++m)
        spec[static_cast<std::size_t>(m)] = coeffs.mode(m) * static_cast<double>(n);
    std::vector<double> out(static_cast<std::size_t>(n));
    detail::fft_inverse(spec.data(), out.data(), n);
    return PeriodicFn(std::move(out), weight);
}

PeriodicFn antiderivative_meanzero(const PeriodicFn& f) {
    const double m0 = f.mean();
    if (std::abs(m0) > 1e-10)
        throw PreconditionError("antiderivative_meanzero: input has nonzero mean " +
                                std::to_string(m0));
    const int n = f.size();
    std::vector<std::complex<double>> spec(static_cast<std::size_t>(n / 2 + 1));
    detail::fft_forward(f.values().data(), spec.data(), n);
    spec[0] = 0.0;
    for (int m = 1; m < n / 2; ++m)
        spec[static_cast<std::size_t>(m)] /= std::complex<double>(0.0, kTwoPi * m);
    spec[static_cast<std::size_t>(n / 2)] = 0.0;
    std::vector<double> out(static_cast<std::size_t>(n));
    detail::fft_inverse(spec.data(), out.data(), n);
    return PeriodicFn(std::move(out), f.weight() - 1);
}

PeriodicFn resample(const PeriodicFn& f, int n_out) {
    const int n = f.size();
    if (n_out < n) throw PreconditionError("resample: only upsampling is supported");
    if (n_out == n) return f;
    std::vector<std::complex<double>> spec(static_cast<std::size_t>(n / 2 + 1));
    detail::fft_forward(f.values().data(), spec.data(), n);
    std::vector<std::complex<double>> big(static_cast<std::size_t>(n_out / 2 + 1), {0.0, 0.0});
    const double scale = static_cast<double>(n_out) / n;
    for (int m = 0; m < n / 2; ++m) big[static_cast<std::size_t>(m)] = spec[static_cast<std::size_t>(m)] * scale;
    // The old Nyquist bin splits evenly between ±n/2 of the finer grid.
    big[static_cast<std::size_t>(n / 2)] = spec[static_cast<std::size_t>(n / 2)] * (0.5 * scale);
    std::vector<double> out(static_cast<std::size_t>(n_out));
    detail::fft_inverse(big.data(), out.data(), n_out);
    return PeriodicFn(std::move(out), f.weight());
}

} // namespace virateich
