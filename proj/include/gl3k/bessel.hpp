#pragma once

#include "gl3k/types.hpp"

namespace gl3k::bessel {

enum class Kind { Jplus, Jminus, Ktilde };

enum class Regime { automatic, series, integral, asymptotic };

/* Regime policy. Series below series_cut(t) = max(series_base, series_scale*sqrt|t|);
   the numeric saddle expansion engages once its scale w (sqrt(t^2-4x^2) for Ktilde
   on the oscillatory side, sqrt(t^2+4x^2) for J) exceeds saddle_min, or in
   spec mode once |t| > asym_t_min with x <= |t|/10 for Ktilde. */
struct EvalRegime {
    double series_base = 2.0;
    double series_scale = 0.25;
    double saddle_min = 14.0;
    double asym_t_min = 40.0;
    double kt_exp_frac = 1.05;   // exponential rep once 2x >= kt_exp_frac*|t|
    double kt_osc_frac = 0.85;   // saddle admissible once 2x <= kt_osc_frac*|t|
    int asym_order = 8;          // truncation order M of the saddle expansion
    double auto_fallback_tol = 1e-6; // auto mode: quadrature when the saddle error estimate exceeds this

    double series_cut(double t) const {
        return std::max(series_base, series_scale * std::sqrt(std::abs(t)));
    }
};

struct Result {
    Cplx value{0.0, 0.0};
    Regime regime = Regime::series;
    double est_error = 0.0;
    bool accuracy_warning = false;
};

/* J^+_alpha, J^-_alpha, K~_alpha of (jplus) at argument x > 0.
   alpha purely imaginary for the integral/asymptotic routes; the power-series
   route accepts any complex alpha (removable singularities at integer alpha
   handled by 4-point Richardson extrapolation). */
Result paper_bessel_full(Kind kind, Cplx alpha, double x,
                         Regime mode = Regime::automatic,
                         const EvalRegime& reg = EvalRegime{},
                         const QuadSpec& quad = QuadSpec::loose(1e-9));

inline Cplx paper_bessel(Kind kind, Cplx alpha, double x,
                         Regime mode = Regime::automatic,
                         const EvalRegime& reg = EvalRegime{}) {
    return paper_bessel_full(kind, alpha, x, mode, reg).value;
}

/* Power-series evaluation at complex argument z (|z| small), used when the
   defining integrals are deformed off the real axis. Same limit policy at the
   removable singularities. */
Cplx paper_bessel_series_cx(Kind kind, Cplx alpha, Cplx z);

/* Mellin formula check (formulas 0..6 of §4.3). Interpretation of sample:
   0/1: x>0 (cos / sin);  2: alpha,x,sign (+1 -> J^+/sin, -1 -> J^-/cos);
   3: alpha,x;  4/5/6: s1,s2,alpha. */
struct MellinSample {
    Cplx s1{1.0, 0.0}, s2{1.0, 0.0}, alpha{0.0, 0.0};
    double x = 1.0;
    int sign = +1;
};
ResultRow mellin_check(int formula_id, const MellinSample& sample,
                       const QuadSpec& quad = QuadSpec::defaults());

} // namespace gl3k::bessel
