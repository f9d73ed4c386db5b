#pragma once

#include <complex>
#include <vector>

#include "virateich/errors.hpp"

namespace virateich {

inline constexpr double kPi = 3.141592653589793238462643383279502884;
inline constexpr double kTwoPi = 2.0 * kPi;

/// A real-valued 1-periodic function given by n uniform samples at x_k = k/n.
///
/// n must be a power of two, n >= 16, so that every function in the library is
/// directly FFT-able.  The integer `weight` tags the density degree of the
/// coefficient (all densities are stored as their coefficient with respect to
/// the fixed coordinate); it is bookkeeping only and never changes the numbers.
class PeriodicFn {
public:
    explicit PeriodicFn(std::vector<double> values, int weight = 0);

    static PeriodicFn constant(int n, double value, int weight = 0);

    template <class F>
    static PeriodicFn sample(int n, F&& f, int weight = 0) {
        std::vector<double> v(static_cast<std::size_t>(n));
        for (int k = 0; k < n; ++k) v[static_cast<std::size_t>(k)] = f(static_cast<double>(k) / n);
        return PeriodicFn(std::move(v), weight);
    }

    int size() const { return static_cast<int>(values_.size()); }
    int weight() const { return weight_; }
    PeriodicFn with_weight(int w) const;

    const std::vector<double>& values() const { return values_; }
    double operator[](int k) const { return values_[static_cast<std::size_t>(k)]; }

    double mean() const;
    double max_abs() const;

    /// Sample locations x_k = k/n.
    static std::vector<double> grid(int n);

private:
    std::vector<double> values_;
    int weight_ = 0;
};

/// Fourier coefficients u_m, |m| <= M, of a real function.  Only m >= 0 is
/// stored; u_{-m} = conj(u_m) holds structurally.
class FourierCoeffs {
public:
    FourierCoeffs(int max_mode, std::vector<std::complex<double>> nonneg_modes);

    int max_mode() const { return max_mode_; }

    /// u_m for any m; conjugate symmetry for m < 0, zero beyond the cutoff.
    std::complex<double> mode(int m) const;

private:
    int max_mode_;
    std::vector<std::complex<double>> modes_; // m = 0..max_mode
};

// Pointwise algebra.  Multiplication/division add/subtract density weights;
// addition keeps the left operand's weight (densities are trivialized, the
// tag is advisory).
PeriodicFn operator+(const PeriodicFn& a, const PeriodicFn& b);
PeriodicFn operator-(const PeriodicFn& a, const PeriodicFn& b);
PeriodicFn operator*(const PeriodicFn& a, const PeriodicFn& b);
PeriodicFn operator/(const PeriodicFn& a, const PeriodicFn& b);
PeriodicFn operator-(const PeriodicFn& a);
PeriodicFn operator*(double c, const PeriodicFn& a);
PeriodicFn operator*(const PeriodicFn& a, double c);
PeriodicFn operator+(const PeriodicFn& a, double c);
PeriodicFn operator-(const PeriodicFn& a, double c);

void require_same_size(const PeriodicFn& a, const PeriodicFn& b, const char* op);

} // namespace virateich
