#pragma once

#include <complex>
#include <array>
#include <vector>
#include <string>
#include <stdexcept>
#include <cmath>
#include <cstdint>

namespace gl3k {

using Cplx = std::complex<double>;

inline constexpr double PI = 3.141592653589793238462643383279502884;
inline constexpr double TWO_PI = 2.0 * PI;

// e(x) = exp(2*pi*i*x)
inline Cplx unit_e(double x) {
    double th = TWO_PI * x;
    return {std::cos(th), std::sin(th)};
}

/* ---------- error types ---------- */

struct NotInvertible : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct DivisibilityViolation : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct BudgetExceeded : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct QuadratureFailure : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct PoleAt : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct ContourViolation : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct DomainError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/* ---------- quadrature policy ---------- */

struct QuadSpec {
    double rel_tol = 1e-6;
    double abs_tol = 0.0;          // absolute floor; 0 = relative only
    int max_nodes = 20000;         // per linear segment / per 1d integral
    double trunc_threshold = 1e-10; // decay certificate level (fraction of running max)
    bool throw_on_failure = true;

    static QuadSpec defaults() { return {}; }
    static QuadSpec loose(double rt) { QuadSpec q; q.rel_tol = rt; return q; }
};

/* ---------- Langlands parameter ---------- */

// mu = (mu1,mu2,mu3), mu1+mu2+mu3 = 0; nu_1 = (mu1-mu2)/3 etc.
struct LanglandsParam {
    std::array<Cplx, 3> mu;

    LanglandsParam() : mu{Cplx(0), Cplx(0), Cplx(0)} {}
    LanglandsParam(Cplx m1, Cplx m2, Cplx m3) : mu{m1, m2, m3} {
        if (std::abs(m1 + m2 + m3) > 1e-9 * (1.0 + std::abs(m1) + std::abs(m2) + std::abs(m3)))
            throw DomainError("LanglandsParam: mu1+mu2+mu3 != 0");
    }
    // from the two free imaginary ordinates: mu = i(x1, x2, -x1-x2)
    static LanglandsParam from_imag(double x1, double x2) {
        return LanglandsParam(Cplx(0, x1), Cplx(0, x2), Cplx(0, -x1 - x2));
    }
    Cplx nu(int j) const { // j = 1,2,3
        switch (j) {
            case 1: return (mu[0] - mu[1]) / 3.0;
            case 2: return (mu[1] - mu[2]) / 3.0;
            default: return (mu[2] - mu[0]) / 3.0;
        }
    }
    std::array<Cplx, 3> nus() const { return {nu(1), nu(2), nu(3)}; }

    double max_abs_im() const {
        return std::max({std::abs(mu[0].imag()), std::abs(mu[1].imag()), std::abs(mu[2].imag())});
    }
    double max_abs_re() const {
        return std::max({std::abs(mu[0].real()), std::abs(mu[1].real()), std::abs(mu[2].real())});
    }
    bool in_Lambda(double c) const { return max_abs_re() <= c + 1e-12; }
    // Lambda'_c: {-mu_j} = {conj mu_j} as multisets, and |Re mu_j| <= c
    bool in_Lambda_prime(double c) const;

    LanglandsParam operator-() const { return LanglandsParam(-mu[0], -mu[1], -mu[2]); }
};

/* ---------- Weyl group ---------- */

// The six permutations of the mu-coordinates. w4(mu) = (mu3,mu1,mu2),
// w5(mu) = (mu2,mu3,mu1); w2,w3,w6 are the transpositions per §2 labels.
struct WeylElement {
    std::array<int, 3> perm; // image index: result[i] = mu[perm[i]]
    const char* label;
};

inline const std::array<WeylElement, 6>& weyl_group() {
    static const std::array<WeylElement, 6> W = {{
        {{0, 1, 2}, "I"},
        {{0, 2, 1}, "w2"},
        {{1, 0, 2}, "w3"},
        {{2, 0, 1}, "w4"},
        {{1, 2, 0}, "w5"},
        {{2, 1, 0}, "w6"},
    }};
    return W;
}

inline LanglandsParam weyl_act(const WeylElement& w, const LanglandsParam& p) {
    LanglandsParam q;
    q.mu = {p.mu[w.perm[0]], p.mu[w.perm[1]], p.mu[w.perm[2]]};
    return q;
}
inline LanglandsParam weyl_act(int idx, const LanglandsParam& p) {
    return weyl_act(weyl_group()[idx], p);
}

inline bool LanglandsParam::in_Lambda_prime(double c) const {
    if (!in_Lambda(c)) return false;
    // {-mu_j} must equal {conj(mu_j)} as a multiset: test all matchings
    for (const auto& w : weyl_group()) {
        bool ok = true;
        for (int i = 0; i < 3; ++i)
            if (std::abs(-mu[i] - std::conj(mu[w.perm[i]])) > 1e-9) { ok = false; break; }
        if (ok) return true;
    }
    return false;
}

/* ---------- Kloosterman result ---------- */

struct KloostermanValue {
    Cplx value;
    long long modulus_product = 1; // trivial bound: term count
    double eps_budget = 0.0;       // accumulated round-off estimate

    // scale-aware zero test threshold
    double zero_threshold() const {
        return std::max(eps_budget, 1e-6 * double(modulus_product));
    }
};

/* ---------- verification row ---------- */

struct ResultRow {
    std::string suite;
    std::string inputs;  // "k=v;k=v" flattened
    Cplx lhs{0.0, 0.0};
    Cplx rhs{0.0, 0.0};
    double residual = 0.0;
    double bound = -1.0; // <0 means "null"
    bool pass = false;
};

/* ---------- test function spec (§3.5) ---------- */

struct TestFunctionSpec {
    LanglandsParam mu0;
    double T = 8.0;
    double eps = 0.3;
    int A = 2;

    double ball_radius() const { return 4.0 * std::pow(T, eps); } // h < 1e-14 h(mu0) outside
    // default localization center in generic position (cC)
    static TestFunctionSpec desk(double T_ = 8.0) {
        TestFunctionSpec s;
        s.T = T_;
        s.mu0 = LanglandsParam::from_imag(1.1 * T_, -0.2 * T_);
        return s;
    }
};

/* ---------- amplifier ---------- */

struct AmplifierSpec {
    double L = 10.0; // primes enumerated in [L, 2L]
};

} // namespace gl3k
