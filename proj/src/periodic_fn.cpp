#include "virateich/periodic_fn.hpp"

#include <cmath>
#include <cstdlib>
#include <string>

namespace virateich {

namespace {

bool power_of_two(int n) { return n > 0 && (n & (n - 1)) == 0; }

} // namespace

PeriodicFn::PeriodicFn(std::vector<double> values, int weight)
    : values_(std::move(values)), weight_(weight) {
    const int n = static_cast<int>(values_.size());
    if (n < 16 || !power_of_two(n))
        throw PreconditionError("PeriodicFn: sample count must be a power of two >= 16, got " +
                                std::to_string(n));
    for (double v : values_)
        if (!std::isfinite(v)) throw PreconditionError("PeriodicFn: non-finite sample");
}

PeriodicFn PeriodicFn::constant(int n, double value, int weight) {
    return PeriodicFn(std::vector<double>(static_cast<std::size_t>(n), value), weight);
}

PeriodicFn PeriodicFn::with_weight(int w) const {
    PeriodicFn out(*this);
    out.weight_ = w;
    return out;
}

double PeriodicFn::mean() const {
    double s = 0.0;
    for (double v : values_) s += v;
    return s / static_cast<double>(values_.size());
}

double PeriodicFn::max_abs() const {
    double m = 0.0;
    for (double v : values_) m = std::max(m, std::abs(v));
    return m;
}

std::vector<double> PeriodicFn::grid(int n) {
    std::vector<double> x(static_cast<std::size_t>(n));
    for (int k = 0; k < n; ++k) x[static_cast<std::size_t>(k)] = static_cast<double>(k) / n;
    return x;
}

FourierCoeffs::FourierCoeffs(int max_mode, std::vector<std::complex<double>> nonneg_modes)
    : max_mode_(max_mode), modes_(std::move(nonneg_modes)) {
    if (max_mode_ < 0 || static_cast<int>(modes_.size()) != max_mode_ + 1)
        throw PreconditionError("FourierCoeffs: need modes m = 0..M");
    // u_0 of a real function is real.
    modes_[0] = std::complex<double>(modes_[0].real(), 0.0);
}

std::complex<double> FourierCoeffs::mode(int m) const {
    const int a = std::abs(m);
    if (a > max_mode_) return {0.0, 0.0};
    const std::complex<double> u = modes_[static_cast<std::size_t>(a)];
    return m >= 0 ? u : std::conj(u);
}

void require_same_size(const PeriodicFn& a, const PeriodicFn& b, const char* op) {
    if (a.size() != b.size())
        throw PreconditionError(std::string(op) + ": size mismatch (" + std::to_string(a.size()) +
                                " vs " + std::to_string(b.size()) + ")");
}

namespace {

template <class Op>
PeriodicFn zip(const PeriodicFn& a, const PeriodicFn& b, int weight, const char* name, Op op) {
    require_same_size(a, b, name);
    std::vector<double> v(static_cast<std::size_t>(a.size()));
    for (int k = 0; k < a.size(); ++k) v[static_cast<std::size_t>(k)] = op(a[k], b[k]);
    return PeriodicFn(std::move(v), weight);
}

} // namespace

PeriodicFn operator+(const PeriodicFn& a, const PeriodicFn& b) {
    return zip(a, b, a.weight(), "operator+", [](double x, double y) { return x + y; });
}

PeriodicFn operator-(const PeriodicFn& a, const PeriodicFn& b) {
    return zip(a, b, a.weight(), "operator-", [](double x, double y) { return x - y; });
}

PeriodicFn operator*(const PeriodicFn& a, const PeriodicFn& b) {
    return zip(a, b, a.weight() + b.weight(), "operator*",
               [](double x, double y) { return x * y; });
}

PeriodicFn operator/(const PeriodicFn& a, const PeriodicFn& b) {
    return zip(a, b, a.weight() - b.weight(), "operator/",
               [](double x, double y) { return x / y; });
}

PeriodicFn operator-(const PeriodicFn& a) { return -1.0 * a; }

PeriodicFn operator*(double c, const PeriodicFn& a) {
    std::vector<double> v(a.values());
    for (double& x : v) x *= c;
    return PeriodicFn(std::move(v), a.weight());
}

PeriodicFn operator*(const PeriodicFn& a, double c) { return c * a; }

PeriodicFn operator+(const PeriodicFn& a, double c) {
    std::vector<double> v(a.values());
    for (double& x : v) x += c;
    return PeriodicFn(std::move(v), a.weight());
}

PeriodicFn operator-(const PeriodicFn& a, double c) { return a + (-c); }

} // namespace virateich
