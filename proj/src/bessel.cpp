#include "gl3k/bessel.hpp"
#include "gl3k/gamma.hpp"
#include "gl3k/quadrature.hpp"
#include <sstream>

namespace gl3k::bessel {

namespace {

const Cplx I_UNIT(0.0, 1.0);

/* ---------- power series route (powerJ)/(I1) ---------- */

// sum_k sgn^k x^{alpha+2k} / (k! Gamma(k+1+alpha)); sgn=-1 gives J_alpha(2x),
// sgn=+1 gives I_alpha(2x)
Cplx series_JI(Cplx alpha, Cplx x, int sgn, double* cancel = nullptr) {
    Cplx term = std::exp(alpha * std::log(x) - lgamma_c(alpha + 1.0));
    Cplx sum = term;
    double peak = std::abs(term);
    for (int k = 1; k < 600; ++k) {
        term *= double(sgn) * x * x / (double(k) * (alpha + double(k)));
        sum += term;
        peak = std::max(peak, std::abs(sum));
        if (std::abs(term) < 1e-18 * (std::abs(sum) + 1e-300) && k > 4) break;
    }
    if (cancel) *cancel = peak / (std::abs(sum) + 1e-300);
    return sum;
}

Cplx series_ratio(Kind kind, Cplx alpha, Cplx x, double* cancel) {
    switch (kind) {
        case Kind::Jplus: {
            Cplx a = series_JI(alpha, x, -1, cancel), b = series_JI(-alpha, x, -1, nullptr);
            return (PI / 2.0) * (b + a) / std::cos(PI * alpha / 2.0);
        }
        case Kind::Jminus: {
            Cplx a = series_JI(alpha, x, -1, cancel), b = series_JI(-alpha, x, -1, nullptr);
            return (PI / 2.0) * (b - a) / std::sin(PI * alpha / 2.0);
        }
        default: {
            Cplx a = series_JI(alpha, x, +1, cancel), b = series_JI(-alpha, x, +1, nullptr);
            return (PI / 2.0) * (b - a) / std::sin(PI * alpha / 2.0);
        }
    }
}

// distance to the removable singularity set of the defining ratio
double singular_distance(Kind kind, Cplx alpha) {
    double re = alpha.real(), im = alpha.imag();
    double nearest;
    if (kind == Kind::Jplus) { // cos(pi a/2)=0 at odd integers
        double r = std::round((re - 1.0) / 2.0) * 2.0 + 1.0;
        nearest = r;
    } else { // sin(pi a/2)=0 at even integers
        nearest = std::round(re / 2.0) * 2.0;
    }
    return std::hypot(re - nearest, im);
}

Cplx series_eval(Kind kind, Cplx alpha, Cplx x, double* cancel) {
    if (singular_distance(kind, alpha) > 0.05)
        return series_ratio(kind, alpha, x, cancel);
    // analytic limit by 4-point Richardson in alpha (offsets keep clear of the zero)
    double base = (kind == Kind::Jplus) ? std::round((alpha.real() - 1.0) / 2.0) * 2.0 + 1.0
                                        : std::round(alpha.real() / 2.0) * 2.0;
    Cplx a0(base, alpha.imag());
    Cplx d = alpha - a0;
    // offset along the imaginary direction, relative to the singular point
    const double h = 4e-3;
    auto g = [&](double s) { return series_ratio(kind, a0 + d + Cplx(0.0, s), x, nullptr); };
    Cplx f1 = 0.5 * (g(h) + g(-h));
    Cplx f2 = 0.5 * (g(2.0 * h) + g(-2.0 * h));
    if (cancel) *cancel = 1.0;
    return (4.0 * f1 - f2) / 3.0;
}

/* ---------- oscillatory-integral route (intrep1) ----------
   Sharp cut at V = v_stat + margin, then the tail in the rotated variable
   rho = 2x {sinh,cosh} v is summed analytically: the integrand becomes
   A(rho) e^{i(eps t h(rho) + del rho)} with A = (rho^2 +- 4x^2)^{-1/2},
   h' = A, A' = -rho A^3, and repeated integration by parts gives
     int_P^inf g e^{i del rho} = sum_k (-1)^{k+1} g^{(k)}(P) e^{i del P}/(i del)^{k+1},
   with g^(k) generated exactly in the monomial basis rho^a A^b. */

struct TailPoly {
    // sparse polynomial in rho^a A^b with complex coefficients
    std::vector<std::tuple<int, int, Cplx>> mono;
};

Cplx tail_series(double P, double A, double phase0, int del, int eps, double t, int kmax) {
    // sum over k of (-1)^{k+1} g^{(k)}(P) e^{i del P ...}/(i del)^{k+1};
    // phase0 = eps*t*v(P) + del*P is the full phase at the cut
    TailPoly p;
    p.mono.push_back({0, 1, Cplx(1.0, 0.0)});
    Cplx expo = std::exp(Cplx(0.0, phase0));
    Cplx idel(0.0, double(del));
    Cplx total(0.0);
    double prev = 1e300;
    for (int k = 0; k < kmax; ++k) {
        // evaluate g^{(k)}(P) (amplitude part; the e^{i eps t h} factor is in expo)
        Cplx val(0.0);
        for (auto& [a, b, c] : p.mono) val += c * std::pow(P, a) * std::pow(A, b);
        double sign = (k % 2 == 0) ? -1.0 : 1.0; // (-1)^{k+1}
        Cplx term = sign * val * expo / std::pow(idel, k + 1);
        double tm = std::abs(term);
        if (tm > prev) break; // asymptotic series: stop at the smallest term
        total += term;
        prev = tm;
        // differentiate: d(rho^a A^b) = a rho^{a-1}A^b - b rho^{a+1}A^{b+2};
        // plus the phase factor derivative i eps t A
        TailPoly q;
        auto add = [&](int a, int b, Cplx c) {
            for (auto& m : q.mono)
                if (std::get<0>(m) == a && std::get<1>(m) == b) {
                    std::get<2>(m) += c;
                    return;
                }
            q.mono.push_back({a, b, c});
        };
        for (auto& [a, b, c] : p.mono) {
            if (a > 0) add(a - 1, b, c * double(a));
            add(a + 1, b + 2, -c * double(b));
            add(a, b + 1, c * Cplx(0.0, eps * t));
        }
        p = std::move(q);
    }
    return total;
}

// common core: 2 int_0^inf trig(2x f(v)) cos(tv) dv with f = sinh (Ktilde)
// or cosh (J); trig = cos except J^+ (sin)
Cplx integral_core(Kind kind, double t, double x, const QuadSpec& quad) {
    t = std::abs(t);
    bool is_kt = (kind == Kind::Ktilde);
    bool plus = (kind == Kind::Jplus);
    double vs = is_kt ? ((t > 2.0 * x) ? std::acosh(t / (2.0 * x)) : 0.0)
                      : std::asinh(t / (2.0 * x));
    double V = vs + 3.5;
    auto f = [&](double v) -> Cplx {
        double arg = 2.0 * x * (is_kt ? std::sinh(v) : std::cosh(v));
        double osc = plus ? std::sin(arg) : std::cos(arg);
        return 2.0 * osc * std::cos(t * v);
    };
    QuadSpec q = quad;
    q.max_nodes = std::max(quad.max_nodes, 400000);
    q.abs_tol = std::max(q.abs_tol, 1e-12 * (1.0 + 2.0 * V));
    Cplx head = integrate_gk(f, 0.0, V, q);
    // tail: 2 trig(Q) cos(tv) = sum over (eps,del) of c e^{i(eps t v + del Q)}
    double P = 2.0 * x * (is_kt ? std::sinh(V) : std::cosh(V));
    double A = 1.0 / std::sqrt(P * P + (is_kt ? 4.0 * x * x : -4.0 * x * x));
    Cplx tail(0.0);
    for (int e = -1; e <= 1; e += 2)
        for (int d = -1; d <= 1; d += 2) {
            Cplx coef = plus ? Cplx(0.0, -0.5 * d) : Cplx(0.5, 0.0); // sin: del/(2i)
            double phase0 = e * t * V + d * P;
            tail += coef * tail_series(P, A, phase0, d, e, t, 12);
        }
    return head + tail;
}

Cplx integral_Kt(double t, double x, const QuadSpec& quad) {
    return integral_core(Kind::Ktilde, t, x, quad);
}

Cplx integral_J(Kind kind, double t, double x, const QuadSpec& quad) {
    return integral_core(kind, t, x, quad);
}

// exponential representation for the monotone side:
// K~_{it}(x) = 2 cosh(pi t/2) int_0^inf e^{-2x cosh u} cos(tu) du
Cplx exp_rep_Kt(double t, double x, const QuadSpec& quad) {
    t = std::abs(t);
    double ucut = std::acosh(1.0 + 80.0 / (2.0 * x)) + 1.0;
    auto f = [&](double u) -> Cplx {
        return std::exp(-2.0 * x * std::cosh(u)) * std::cos(t * u);
    };
    QuadSpec q = quad;
    q.abs_tol = std::max(q.abs_tol, 1e-13 * std::exp(-2.0 * x));
    Cplx kint = integrate_gk(f, 0.0, ucut, q);
    return 2.0 * std::cosh(PI * t / 2.0) * kint;
}

/* ---------- numeric saddle-point expansion ----------
   F = int exp(i(H(v)-H(v0))) dv through one saddle, from the Taylor
   coefficients of H at v0. Returns the complex amplitude F. */

Cplx saddle_amplitude(double a /* = -H''(v0) > 0 */,
                      const std::vector<double>& deriv /* H^{(k)}(v0), k=3.. */,
                      int order, double* err_out = nullptr) {
    int N = 2 * order;                 // powers of the perturbation polynomial
    int Mmax = 3 * N + 1;
    // P(u) = sum_k deriv[k-3]/k! u^k
    std::vector<Cplx> P(Mmax + 1, Cplx(0.0));
    double kfact = 2.0;
    for (size_t j = 0; j < deriv.size(); ++j) {
        int k = int(j) + 3;
        kfact *= k; // k! built from 2! upward: after multiply, kfact = k!
        if (k <= Mmax) P[size_t(k)] = deriv[j] / kfact;
    }
    // Q[n] = coefficients of (iP)^n/n!
    std::vector<std::vector<Cplx>> Q(size_t(N) + 1, std::vector<Cplx>(size_t(Mmax) + 1, Cplx(0.0)));
    Q[0][0] = 1.0;
    for (int n = 1; n <= N; ++n)
        for (int m1 = 0; m1 <= Mmax; ++m1) {
            if (Q[size_t(n - 1)][size_t(m1)] == Cplx(0.0)) continue;
            for (int m2 = 3; m1 + m2 <= Mmax && size_t(m2) < P.size(); ++m2) {
                if (P[size_t(m2)] == Cplx(0.0)) continue;
                Q[size_t(n)][size_t(m1 + m2)] +=
                    Q[size_t(n - 1)][size_t(m1)] * (I_UNIT * P[size_t(m2)]) / double(n);
            }
        }
    // moments: int u^{2j} e^{-i a u^2/2} du = Gamma(j+1/2)(2/a)^{j+1/2} e^{-i pi(2j+1)/4}
    std::vector<Cplx> mom(size_t(Mmax) / 2 + 1);
    {
        double gam = std::sqrt(PI), pw = std::sqrt(2.0 / a);
        for (int j = 0; 2 * j <= Mmax; ++j) {
            if (j > 0) {
                gam *= (j - 0.5);
                pw *= 2.0 / a;
            }
            mom[size_t(j)] = gam * pw * std::exp(-I_UNIT * (PI * (2.0 * j + 1.0) / 4.0));
        }
    }
    // group by asymptotic order r = j - n (each block is O(a^{-r}) relative);
    // the series is asymptotic: sum blocks until they stop shrinking or r = order
    Cplx F(0.0);
    double prev = 1e300, err = 0.0;
    for (int r = 0; r <= order; ++r) {
        Cplx block(0.0);
        for (int n = 0; n <= std::min(N, 2 * r); ++n) {
            int j = n + r;
            if (2 * j > Mmax) break;
            block += Q[size_t(n)][size_t(2 * j)] * mom[size_t(j)];
        }
        double bm = std::abs(block);
        if (r >= 2 && bm > prev) { err = bm; break; }
        F += block;
        err = bm;
        prev = bm;
        if (bm < 1e-17 * std::abs(F)) break;
    }
    if (err_out) *err_out = err / std::max(std::abs(F), 1e-300);
    return F;
}

// K~ oscillatory side: phase tv - 2x sinh v, saddle cosh v0 = t/(2x)
Cplx saddle_Kt(double t, double x, int order, double* est) {
    t = std::abs(t);
    double v0 = std::acosh(t / (2.0 * x));
    double w = 2.0 * x * std::sinh(v0); // = sqrt(t^2 - 4x^2)
    double omega = t * v0 - w;
    std::vector<double> dv;
    for (int k = 3; k <= 3 + 2 * order + 2; ++k) dv.push_back((k % 2 == 1) ? -t : -w);
    Cplx F = saddle_amplitude(w, dv, order, est);
    double val = (1.0 + std::exp(-PI * t)) * (std::exp(I_UNIT * omega) * F).real();
    return Cplx(val, 0.0);
}

// J^{+/-}: B = int exp(i(tv - 2x cosh v)) dv, saddle sinh v0 = t/(2x);
// J^- = Re B, J^+ = -Im B
Cplx saddle_J(Kind kind, double t, double x, int order, double* est) {
    double ta = std::abs(t);
    double v0 = std::asinh(ta / (2.0 * x));
    double w = 2.0 * x * std::cosh(v0); // = sqrt(t^2 + 4x^2)
    double omega = ta * v0 - w;
    std::vector<double> dv;
    for (int k = 3; k <= 3 + 2 * order + 2; ++k) dv.push_back((k % 2 == 1) ? -ta : -w);
    Cplx B = std::exp(I_UNIT * omega) * saddle_amplitude(w, dv, order, est);
    double val = (kind == Kind::Jminus) ? B.real() : -B.imag();
    return Cplx(val, 0.0);
}

} // namespace

Cplx paper_bessel_series_cx(Kind kind, Cplx alpha, Cplx z) {
    return series_eval(kind, alpha, z, nullptr);
}

Result paper_bessel_full(Kind kind, Cplx alpha, double x, Regime mode,
                         const EvalRegime& reg, const QuadSpec& quad) {
    if (!(x > 0.0)) throw DomainError("paper_bessel: x must be positive");
    Result res;
    double t = alpha.imag();
    bool imag_order = std::abs(alpha.real()) <= 1e-9;

    Regime chosen = mode;
    if (mode == Regime::automatic) {
        if (x <= reg.series_cut(t) || !imag_order) {
            chosen = Regime::series;
        } else if (kind == Kind::Ktilde) {
            double ta = std::abs(t);
            double w2 = ta * ta - 4.0 * x * x;
            bool saddle_ok = (2.0 * x <= reg.kt_osc_frac * ta) &&
                             (w2 > 0.0 && std::sqrt(w2) >= reg.saddle_min);
            if (saddle_ok)
                chosen = Regime::asymptotic;
            else if (2.0 * x >= reg.kt_exp_frac * ta || ta <= 1e-8)
                chosen = Regime::integral; // exponential rep, handled below
            else
                chosen = Regime::integral;
        } else {
            double w = std::hypot(t, 2.0 * x);
            chosen = (w >= reg.saddle_min) ? Regime::asymptotic : Regime::integral;
        }
    }

    switch (chosen) {
        case Regime::series: {
            double cancel = 1.0;
            res.value = series_eval(kind, alpha, x, &cancel);
            res.regime = Regime::series;
            res.est_error = 1e-16 * cancel;
            res.accuracy_warning = cancel > 1e8;
            return res;
        }
        case Regime::asymptotic: {
            if (!imag_order) throw DomainError("paper_bessel: asymptotic route needs imaginary order");
            double est = 0.0;
            if (kind == Kind::Ktilde) {
                if (std::abs(t) <= 2.0 * x)
                    throw DomainError("paper_bessel: Ktilde asymptotics need |t| > 2x");
                res.value = saddle_Kt(t, x, reg.asym_order, &est);
            } else {
                res.value = saddle_J(kind, t, x, reg.asym_order, &est);
            }
            res.regime = Regime::asymptotic;
            res.est_error = est;
            res.accuracy_warning = est > 1e-4;
            if (mode == Regime::automatic && est > reg.auto_fallback_tol)
                return paper_bessel_full(kind, alpha, x, Regime::integral, reg, quad);
            return res;
        }
        default: {
            if (!imag_order) throw DomainError("paper_bessel: integral route needs imaginary order");
            if (kind == Kind::Ktilde) {
                double ta = std::abs(t);
                if (2.0 * x >= reg.kt_exp_frac * ta || ta <= 12.0)
                    res.value = exp_rep_Kt(t, x, quad);
                else
                    res.value = integral_Kt(t, x, quad);
            } else {
                res.value = integral_J(kind, t, x, quad);
            }
            res.regime = Regime::integral;
            res.est_error = quad.rel_tol;
            // transition band between oscillatory and monotone behaviour
            res.accuracy_warning = (kind == Kind::Ktilde) &&
                                   std::abs(std::abs(t) - 2.0 * x) < 0.02 * std::max(std::abs(t), 1.0);
            return res;
        }
    }
}

/* ---------- Mellin formula suite ---------- */

namespace {

// integrate f over the conjugation-symmetric ramped contour:
// vertical at sig_in for |Im| <= h0, ramp to sig_out by 2*h0, vertical above,
// truncated at height where |f| decays below trunc_threshold * running max.
Cplx ramped_contour_integral(const std::function<Cplx(Cplx)>& f, double sig_in,
                             double sig_out, double h0, const QuadSpec& quad,
                             double hard_cap = 5000.0) {
    // find truncation height on the outer vertical
    double peak = 0.0;
    double h = 2.0 * h0;
    double hmax = 2.0 * h0;
    for (; h <= hard_cap; h += std::max(1.0, 0.05 * h)) {
        double m = std::max(std::abs(f(Cplx(sig_out, h))), std::abs(f(Cplx(sig_out, -h))));
        peak = std::max(peak, m);
        if (m <= quad.trunc_threshold * std::max(peak, 1e-300)) { hmax = h; break; }
        hmax = h;
    }
    std::vector<Cplx> verts = {
        Cplx(sig_out, -hmax), Cplx(sig_out, -2.0 * h0), Cplx(sig_in, -h0),
        Cplx(sig_in, h0),     Cplx(sig_out, 2.0 * h0),  Cplx(sig_out, hmax)};
    Cplx total(0.0);
    for (size_t i = 0; i + 1 < verts.size(); ++i) {
        Cplx a = verts[i], b = verts[i + 1];
        auto g = [&](double u) { return f(a + u * (b - a)) * (b - a); };
        total += integrate_gk(g, 0.0, 1.0, quad);
    }
    return total / (TWO_PI * I_UNIT);
}

} // namespace

ResultRow mellin_check(int formula_id, const MellinSample& sm, const QuadSpec& quad) {
    ResultRow row;
    std::ostringstream os;
    Cplx lhs, rhs;
    switch (formula_id) {
        case 0:
        case 1: {
            // cos/sin(x) = int {cos,sin}(pi s/2) Gamma(s) x^{-s} ds/(2 pi i)
            double x = sm.x;
            lhs = (formula_id == 0) ? Cplx(std::cos(x), 0) : Cplx(std::sin(x), 0);
            auto f = [&](Cplx s) -> Cplx {
                Cplx trig = (formula_id == 0) ? std::cos(PI * s / 2.0) : std::sin(PI * s / 2.0);
                return trig * std::exp(lgamma_c(s) - s * std::log(x));
            };
            rhs = ramped_contour_integral(f, 0.25, -6.25, 2.0, quad);
            os << "x=" << x;
            break;
        }
        case 2: {
            // J^{pm}_alpha(x) = int G(s+a/2)G(s-a/2){sin,cos}(pi s) x^{-2s} ds/(2pi i)
            lhs = paper_bessel(sm.sign > 0 ? Kind::Jplus : Kind::Jminus, sm.alpha, sm.x);
            auto f = [&](Cplx s) -> Cplx {
                Cplx trig = (sm.sign > 0) ? std::sin(PI * s) : std::cos(PI * s);
                return trig * std::exp(lgamma_c(s + sm.alpha / 2.0) + lgamma_c(s - sm.alpha / 2.0)
                                       - 2.0 * s * std::log(sm.x));
            };
            double h0 = std::abs(sm.alpha.imag()) / 2.0 + 2.0;
            rhs = ramped_contour_integral(f, std::abs(sm.alpha.real()) / 2.0 + 0.25, -3.25, h0, quad);
            os << "alpha=" << sm.alpha << ";x=" << sm.x << ";sign=" << sm.sign;
            break;
        }
        case 3: {
            lhs = paper_bessel(Kind::Ktilde, sm.alpha, sm.x);
            auto f = [&](Cplx s) -> Cplx {
                return std::cos(PI * sm.alpha / 2.0) *
                       std::exp(lgamma_c(s + sm.alpha / 2.0) + lgamma_c(s - sm.alpha / 2.0)
                                - 2.0 * s * std::log(sm.x));
            };
            double h0 = std::abs(sm.alpha.imag()) / 2.0 + 2.0;
            double sig = std::abs(sm.alpha.real()) / 2.0 + 0.25;
            rhs = ramped_contour_integral(f, sig, sig, h0, quad); // exponential decay: straight line
            os << "alpha=" << sm.alpha << ";x=" << sm.x;
            break;
        }
        case 4: {
            // int_0^inf (1+u^2)^{-s1}(1+u^-2)^{-s2} u^alpha du/u = B(s1-a/2, s2+a/2)/2
            Cplx a1 = sm.s1 - sm.alpha / 2.0, a2 = sm.s2 + sm.alpha / 2.0;
            if (a1.real() <= 0.0 || a2.real() <= 0.0)
                throw ContourViolation("mellin_check(4): Beta arguments need positive real part");
            rhs = 0.5 * beta_c(a1, a2);
            auto f = [&](double w) -> Cplx { // u = e^w
                return std::exp(-sm.s1 * std::log1p(std::exp(2.0 * w))
                                - sm.s2 * std::log1p(std::exp(-2.0 * w)) + sm.alpha * w);
            };
            double wl = -1.0, wr = 1.0; // expand until integrand negligible
            while (std::abs(f(wl)) > 1e-16 && wl > -400.0) wl -= 1.0;
            while (std::abs(f(wr)) > 1e-16 && wr < 400.0) wr += 1.0;
            lhs = integrate_gk(f, wl, wr, quad);
            os << "s1=" << sm.s1 << ";s2=" << sm.s2 << ";alpha=" << sm.alpha;
            break;
        }
        case 5: {
            // int_1^inf (u^2-1)^{-s1}(1-u^-2)^{-s2} u^alpha du/u = B(1-s1-s2, s1-a/2)/2
            Cplx a1 = Cplx(1.0) - sm.s1 - sm.s2, a2 = sm.s1 - sm.alpha / 2.0;
            if (a1.real() <= 0.0 || a2.real() <= 0.0)
                throw ContourViolation("mellin_check(5): Beta arguments need positive real part");
            rhs = 0.5 * beta_c(a1, a2);
            // u in (1,2]: u = 1+v^2, then v = e^{-w} to resolve the v^{1-2(s1+s2)}
            // endpoint (algebraic with log-oscillation for complex exponents)
            auto f1 = [&](double w) -> Cplx {
                double v = std::exp(-w);
                double u = 1.0 + v * v;
                double lu2m1 = 2.0 * std::log(v) + std::log(v * v + 2.0); // log(u^2-1)
                double llu = std::log1p(v * v);
                return std::exp(-sm.s1 * lu2m1 - sm.s2 * (lu2m1 - 2.0 * llu)
                                + sm.alpha * llu) * (2.0 * v / u) * v;
            };
            double dec5 = 2.0 - 2.0 * (sm.s1 + sm.s2).real();
            double wmax5 = std::min(2000.0, 42.0 / dec5 + 6.0);
            // u in [2,inf): u = e^w
            auto f2 = [&](double w) -> Cplx {
                double u = std::exp(w);
                return std::exp(-sm.s1 * std::log(u * u - 1.0) - sm.s2 * std::log(1.0 - 1.0 / (u * u))
                                + sm.alpha * w);
            };
            double wr = std::log(2.0);
            while (std::abs(f2(wr)) > 1e-16 && wr < 400.0) wr += 1.0;
            lhs = integrate_gk(f1, 0.0, wmax5, quad) + integrate_gk(f2, std::log(2.0), wr, quad);
            os << "s1=" << sm.s1 << ";s2=" << sm.s2 << ";alpha=" << sm.alpha;
            break;
        }
        case 6: {
            // int_0^1 (1-u^2)^{-s1}(u^-2-1)^{-s2} u^alpha du/u = B(1-s1-s2, s2+a/2)/2
            Cplx a1 = Cplx(1.0) - sm.s1 - sm.s2, a2 = sm.s2 + sm.alpha / 2.0;
            if (a1.real() <= 0.0 || a2.real() <= 0.0)
                throw ContourViolation("mellin_check(6): Beta arguments need positive real part");
            rhs = 0.5 * beta_c(a1, a2);
            // u in [1/2,1): u = 1-v^2 with v = sqrt(1/2) e^{-w}
            auto f1 = [&](double w) -> Cplx {
                double v = std::sqrt(0.5) * std::exp(-w);
                double u = 1.0 - v * v;
                double l1mu2 = 2.0 * std::log(v) + std::log(2.0 - v * v); // log(1-u^2)
                double llu = std::log1p(-v * v);
                return std::exp(-sm.s1 * l1mu2 - sm.s2 * (l1mu2 - 2.0 * llu)
                                + sm.alpha * llu) * (2.0 * v / u) * v;
            };
            double dec6 = 2.0 - 2.0 * (sm.s1 + sm.s2).real();
            double wmax6 = std::min(2000.0, 42.0 / dec6 + 6.0);
            // u in (0,1/2]: u = e^w
            auto f2 = [&](double w) -> Cplx {
                double u = std::exp(w);
                return std::exp(-sm.s1 * std::log(1.0 - u * u) - sm.s2 * std::log(1.0 / (u * u) - 1.0)
                                + sm.alpha * w);
            };
            double wl = std::log(0.5);
            while (std::abs(f2(wl)) > 1e-16 && wl > -400.0) wl -= 1.0;
            lhs = integrate_gk(f1, 0.0, wmax6, quad) + integrate_gk(f2, wl, std::log(0.5), quad);
            os << "s1=" << sm.s1 << ";s2=" << sm.s2 << ";alpha=" << sm.alpha;
            break;
        }
        default:
            throw DomainError("mellin_check: formula_id must be 0..6");
    }
    row.suite = "mellin_" + std::to_string(formula_id);
    row.inputs = os.str();
    row.lhs = lhs;
    row.rhs = rhs;
    row.residual = std::abs(lhs - rhs);
    row.bound = 1e-6 * std::max(1.0, std::abs(rhs));
    row.pass = row.residual <= row.bound;
    return row;
}

} // namespace gl3k::bessel
