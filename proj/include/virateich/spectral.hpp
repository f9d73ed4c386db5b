#pragma once

#include <complex>
#include <span>
#include <vector>

#include "virateich/periodic_fn.hpp"

namespace virateich {

/// Spectral derivative of the given order.  The Nyquist mode is zeroed for
/// odd orders (it has no well-defined odd derivative on the real grid).
/// Density weight increases by `order`.
PeriodicFn derivative(const PeriodicFn& f, int order = 1);

/// ∫₀¹ f dx.  On the uniform periodic grid this is the sample mean.
double integral(const PeriodicFn& f);

/// Band-limited (trigonometric) interpolation at arbitrary points, mod 1.
double interpolate(const PeriodicFn& f, double x);
std::vector<double> interpolate(const PeriodicFn& f, std::span<const double> xs);

/// Fourier coefficients u_m = ∫ f e^{-2πimx} dx for m = 0..M, via the DFT.
/// Requires M < n/2.
FourierCoeffs fourier(const PeriodicFn& f, int max_mode);

/// Samples of the trigonometric polynomial with the given coefficients.
PeriodicFn inverse_fourier(const FourierCoeffs& coeffs, int n, int weight = 0);

/// The unique mean-zero periodic primitive.  Rejects input whose mean exceeds
/// 1e-10 in absolute value.  The Nyquist mode is dropped.
PeriodicFn antiderivative_meanzero(const PeriodicFn& f);

/// Band-limited resampling onto n_out >= n points (n_out a power of two).
PeriodicFn resample(const PeriodicFn& f, int n_out);

/// Precomputed band-limited interpolant for repeated point evaluation.
class TrigInterpolant {
public:
    explicit TrigInterpolant(const PeriodicFn& f);

    double operator()(double x) const;
    /// First derivative of the interpolant at x.
    double deriv(double x) const;

private:
    int n_;
    std::vector<std::complex<double>> coef_; // c_m, m = 0..n/2, DFT/n
};

namespace detail {
// Unnormalized real-to-complex DFT (out[m] = Σ_k f_k e^{-2πikm/n}, m=0..n/2)
// and its normalized inverse.  Thread-safe: plans are cached per size behind a
// mutex, execution uses FFTW's new-array interface.
void fft_forward(const double* in, std::complex<double>* out, int n);
void fft_inverse(const std::complex<double>* in, double* out, int n);
} // namespace detail

} // namespace virateich
