#pragma once

#include "gl3k/types.hpp"
#include <functional>

namespace gl3k::mb {

/* ---------- Mellin-Barnes integrand pieces (§3.3) ---------- */

// G~^{pm}(s, mu): (pi^{-3s}/12288 pi^{7/2}) (prod_j G(.5(s-mu_j))/G(.5(1-s+mu_j))
//                 +- i prod_j G(.5(1+s-mu_j))/G(.5(2-s+mu_j)))
Cplx G_tilde(Cplx s, const LanglandsParam& mu, int sign);

// G(s,mu) = prod_j Gamma(s1-mu_j) Gamma(s2+mu_j) / Gamma(s1+s2)
Cplx G_big(Cplx s1, Cplx s2, const LanglandsParam& mu);

// the trigonometric factors S^{e1 e2} as displayed
Cplx S_trig(int eps1, int eps2, Cplx s1, Cplx s2, const LanglandsParam& mu);

// G(s,mu) * S^{e1 e2}(s,mu) evaluated in log space (safe at large heights;
// the 1/(Gamma(s1+s2) sin pi(s1+s2)) pair is folded into Gamma(1-s1-s2)/pi)
Cplx GS_w6(int eps1, int eps2, Cplx s1, Cplx s2, const LanglandsParam& mu);

// decay exponent h^{e1 e2}(t, r) of (exp); r1+r2+r3 = 0
double exp_decay(int eps1, int eps2, double t1, double t2,
                 const std::array<double, 3>& r);

/* ---------- contours ---------- */

/* Piecewise-linear, conjugation-symmetric path: vertical at inner_abscissa for
   |Im s| <= turn_height, linear ramp to outer_abscissa at 2*turn_height,
   vertical outer legs truncated at truncation_height (decay certificate:
   integrand magnitude <= trunc_threshold * running max). */
struct MBContour {
    std::vector<Cplx> vertices;
    double inner_abscissa = 0.125;
    double outer_abscissa = -3.625;
    double turn_height = 2.0;
    double truncation_height = 10.0;

    // integral over the path divided by 2 pi i
    Cplx integrate(const std::function<Cplx(Cplx)>& f, const QuadSpec& quad,
                   bool parallel = false) const;
};

enum class KernelFamily { w4, w6 };

/* Builds the certified contour for the given integrand magnitude profile.
   For w6 the same geometry serves both s-variables. Throws ContourViolation
   if a pole sits within 1e-3 of the path and indentation fails. */
MBContour build_contour(KernelFamily which, const LanglandsParam& mu,
                        const QuadSpec& quad,
                        const std::function<double(Cplx)>& magnitude,
                        double inner = 0.125, double outer = -3.625);

/* ---------- kernels (Definition 3.1) ---------- */

// K_{w4}(y; mu) = int |y|^{-s} G~^{sgn y}(s,mu) ds/(2 pi i)
Cplx K_w4(double y, const LanglandsParam& mu, const QuadSpec& quad = QuadSpec::defaults());

// K^{sgn y1, sgn y2}_{w6}(y; mu), double Mellin-Barnes integral
Cplx K_w6(double y1, double y2, const LanglandsParam& mu,
          const QuadSpec& quad = QuadSpec::defaults());

/* Bessel-integral route for K_{w4} (the two u-integrals of the J^- / K~
   representation, with the conditionally convergent piece near u=0 handled
   by rotating the ray into the damped half-plane). */
Cplx K_w4_bessel_route(double y, const LanglandsParam& mu,
                       const QuadSpec& quad = QuadSpec::defaults());

/* ---------- the absolutely convergent Bessel integrals J_1..J_5 (§5) ---------- */

// index 1..5; variant = +-1 selects J^{pm} inside J_1 (ignored otherwise)
Cplx calJ(int index, double y1, double y2, const LanglandsParam& mu,
          int variant = +1, const QuadSpec& quad = QuadSpec::defaults());

/* ---------- brute-force trig identities from the Lemma 5.2 proof ---------- */

// which: 0 = the S^{--} identity, 1 = the S^{+-} identity; returns |LHS-RHS|
double trig_identity_check(int which, Cplx s1, Cplx s2, const LanglandsParam& mu);

} // namespace gl3k::mb
