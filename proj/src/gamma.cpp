#include "gl3k/gamma.hpp"

namespace gl3k {

namespace {

// B_{2n}/(2n(2n-1)) for the Stirling series, n = 1..9
constexpr double stirling_coef[9] = {
    1.0 / 12.0,
    -1.0 / 360.0,
    1.0 / 1260.0,
    -1.0 / 1680.0,
    1.0 / 1188.0,
    -691.0 / 360360.0,
    7.0 / 1092.0,
    -3617.0 / 122400.0,
    43867.0 / 244188.0,
};

constexpr double LOG_2PI = 1.8378770664093454835606594728112353;

// Stirling series, valid for |z| large, Re z > 0
Cplx lgamma_stirling(Cplx z, int nterms = 9) {
    Cplx lz = std::log(z);
    Cplx s = (z - 0.5) * lz - z + 0.5 * LOG_2PI;
    Cplx zi = 1.0 / z, zp = zi;
    Cplx z2 = zi * zi;
    for (int n = 0; n < nterms; ++n) {
        s += stirling_coef[n] * zp;
        zp *= z2;
    }
    return s;
}

} // namespace

Cplx log_sin_pi(Cplx z) {
    double y = z.imag();
    const Cplx I(0.0, 1.0);
    if (y > 4.0) {
        // sin(pi z) = -e^{-i pi z}(1 - e^{2 i pi z})/(2i)
        return -I * PI * z + std::log(Cplx(1.0) - std::exp(2.0 * I * PI * z)) - std::log(Cplx(0.0, 2.0)) + Cplx(0.0, PI);
        // note: -log(2i) + i*pi = log(i/2); kept explicit to fix the branch
    }
    if (y < -4.0) return std::conj(log_sin_pi(std::conj(z)));
    Cplx s = std::sin(PI * z);
    if (std::abs(s) == 0.0) throw PoleAt("log_sin_pi: sin(pi z) = 0");
    return std::log(s);
}

Cplx lgamma_c(Cplx z) {
    if (z.real() < 0.5) {
        // reflection: log Gamma(z) = log pi - log sin(pi z) - log Gamma(1-z)
        if (z.imag() == 0.0 && z.real() == std::floor(z.real()))
            throw PoleAt("lgamma_c: pole at non-positive integer");
        return std::log(PI) - log_sin_pi(z) - lgamma_c(Cplx(1.0) - z);
    }
    // shift until |z| >= 16
    Cplx acc(0.0);
    while (std::abs(z) < 16.0) {
        acc -= std::log(z);
        z += 1.0;
    }
    return lgamma_stirling(z) + acc;
}

Cplx gamma_c(Cplx z) {
    if (z.imag() == 0.0 && z.real() <= 0.0 && z.real() == std::floor(z.real()))
        throw PoleAt("gamma_c: pole at non-positive integer");
    return std::exp(lgamma_c(z));
}

Cplx stirling_main(double sigma, double t, int M) {
    if (std::abs(t) < 10.0) throw DomainError("stirling_main: |t| < 10");
    if (t < 0.0) return std::conj(stirling_main(sigma, -t, M));
    const Cplx I(0.0, 1.0);
    Cplx z(sigma, t);
    // g = sqrt(2pi) exp[ i pi/2 (sigma-1/2) - sigma + (z - 1/2) log(1 - i sigma/t) + S_B ]
    // where S_B is the Bernoulli tail; truncate so the omitted term is O(t^{-M}).
    int nterms = std::min(9, M / 2 + 1);
    Cplx sb(0.0);
    Cplx zp = 1.0 / z, z2 = zp * zp;
    for (int n = 0; n < nterms; ++n) {
        sb += stirling_coef[n] * zp;
        zp *= z2;
    }
    Cplx lcorr = (z - 0.5) * std::log(Cplx(1.0, -sigma / t)); // log(z) = log(it) + log(1 - i sigma/t)
    Cplx g = std::sqrt(TWO_PI) * std::exp(I * (PI / 2.0) * (sigma - 0.5) - sigma + lcorr + sb);
    return std::exp(-PI * t / 2.0) * std::pow(t, sigma - 0.5) * std::exp(I * t * std::log(t / std::exp(1.0))) * g;
}

} // namespace gl3k
