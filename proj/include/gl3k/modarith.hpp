#pragma once

#include "gl3k/types.hpp"

namespace gl3k::modarith {

/* ---------- exact integer utilities ---------- */

long long gcd_ll(long long a, long long b);
long long lcm_ll(long long a, long long b);

// b with a*b == 1 (mod m), in [0,m); m=1 returns 0. Throws NotInvertible.
long long mod_inverse(long long a, long long m);

// canonical (Y,Z) with Y*B + Z*C == 1 (mod D), found by extended gcd.
// shift selects the alternative solution (Y + shift*C, Z - shift*B).
void solve_yz(long long B, long long C, long long D, long long& Y, long long& Z,
              long long shift = 0);

long long euler_phi(long long n);
bool is_prime(long long n);
std::vector<long long> primes_in(long long lo, long long hi);

/* ---------- Kloosterman sums (§3.2) ---------- */

// S~(n1,n2,m1; D1,D2) for D1 | D2: sum over C1 mod D1, C2 mod D2 with
// (C1,D1) = (C2,D2/D1) = 1 of e(n2 C1bar C2/D1 + m1 C2bar/(D2/D1) + n1 C1/D1).
KloostermanValue tilde_S(long long n1, long long n2, long long m1,
                         long long D1, long long D2);

// S(n1,m2,m1,n2; D1,D2): sum over B1,C1 mod D1, B2,C2 mod D2 with
// (Bj,Cj,Dj)=1 and D1 C2 + B1 B2 + D2 C1 == 0 (mod D1 D2).
// yz_shift1/2 select alternative (Yj,Zj) solutions (value must not change).
KloostermanValue big_S(long long n1, long long m2, long long m1, long long n2,
                       long long D1, long long D2,
                       long long yz_shift1 = 0, long long yz_shift2 = 0,
                       long long term_budget = 200000000LL);

// structurally independent oracle: naive quadruple loop
KloostermanValue big_S_naive(long long n1, long long m2, long long m1, long long n2,
                             long long D1, long long D2);
KloostermanValue tilde_S_tabled(long long n1, long long n2, long long m1,
                                long long D1, long long D2);

/* ---------- finite Fourier transforms (§6) ---------- */

// (1/(D delta)) sum_{n1 mod D, m1 mod delta} S~(-eps n1 r1, n2 s2, m1 s1; D, D delta)
//   * e(-x n1/D - y m1/delta)
KloostermanValue fourier_tilde_S(long long r1, long long s1, long long s2, long long n2,
                                 long long D, long long delta,
                                 long long x, long long y, int eps);

struct FourierTransformQuery {
    long long r1 = 1, s1 = 1, r2 = 1, s2 = 1; // twists, nonzero
    long long x1 = 0, y1 = 0, x2 = 0, y2 = 0; // frequencies
    long long D1 = 1, D2 = 1;                 // moduli

    void validate() const {
        if (D1 < 1 || D2 < 1) throw DomainError("FourierTransformQuery: moduli must be positive");
        if (!r1 || !s1 || !r2 || !s2) throw DomainError("FourierTransformQuery: twists must be nonzero");
    }
};

// S^hat_{r1,s1,r2,s2}(x1,y1,x2,y2; D1,D2). Production path collapses the
// n,m-sums by orthogonality into the solution count of (count1)-(equa);
// the result is an exact non-negative integer.
KloostermanValue fourier_hat_S(const FourierTransformQuery& q,
                               long long term_budget = 400000000LL);

// literal definition (quadruple Fourier sum over big_S values); small moduli only.
KloostermanValue fourier_hat_S_definition(const FourierTransformQuery& q,
                                          long long term_budget = 40000000LL);

/* ---------- Weil-type ratio sweeps ---------- */

// gcd expressions of (tildeS) and (S) without the epsilon-power
double weil_bound_tilde(long long n1, long long n2, long long m1, long long D1, long long D2);
double weil_bound_big(long long n1, long long m2, long long m1, long long n2,
                      long long D1, long long D2);

struct SweepResult {
    double max_ratio = 0.0;
    std::vector<ResultRow> rows;
};

// |S~| / bound over D1 | D2 <= Dmax, |n1|,|n2|,|m1| <= argmax
SweepResult weil_ratio_sweep_tilde(long long Dmax, long long argmax, bool keep_rows = false);
// |S| / bound over D1,D2 <= Dmax, |args| <= argmax
SweepResult weil_ratio_sweep_big(long long Dmax, long long argmax, bool keep_rows = false);

} // namespace gl3k::modarith
