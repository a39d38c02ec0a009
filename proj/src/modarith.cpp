#include "gl3k/modarith.hpp"
#include "gl3k/parallel.hpp"
#include <numeric>
#include <sstream>

namespace gl3k::modarith {

namespace {

constexpr double MACH_EPS = 2.220446049250313e-16;

// Kahan-compensated complex accumulator
struct KahanAcc {
    Cplx s{0.0, 0.0}, c{0.0, 0.0};
    void add(Cplx x) {
        Cplx y = x - c;
        Cplx t = s + y;
        c = (t - s) - y;
        s = t;
    }
};

// unit-root table: tab[k] = e(k/m), k in [0,m)
std::vector<Cplx> root_table(long long m) {
    std::vector<Cplx> tab(static_cast<size_t>(m));
    for (long long k = 0; k < m; ++k) tab[size_t(k)] = unit_e(double(k) / double(m));
    return tab;
}

inline long long mod_red(long long a, long long m) {
    long long r = a % m;
    return r < 0 ? r + m : r;
}

long long egcd(long long a, long long b, long long& x, long long& y) {
    if (b == 0) { x = 1; y = 0; return a; }
    long long x1, y1;
    long long g = egcd(b, a % b, x1, y1);
    x = y1;
    y = x1 - (a / b) * y1;
    return g;
}

} // namespace

long long gcd_ll(long long a, long long b) { return std::gcd(std::llabs(a), std::llabs(b)); }
long long lcm_ll(long long a, long long b) { return std::lcm(std::llabs(a), std::llabs(b)); }

long long mod_inverse(long long a, long long m) {
    if (m <= 0) throw DomainError("mod_inverse: modulus must be positive");
    if (m == 1) return 0;
    long long x, y;
    long long g = egcd(mod_red(a, m), m, x, y);
    if (g != 1) throw NotInvertible("mod_inverse: gcd(a,m) != 1");
    return mod_red(x, m);
}

void solve_yz(long long B, long long C, long long D, long long& Y, long long& Z, long long shift) {
    if (D == 1) { Y = 0; Z = 0; return; }
    long long b = mod_red(B, D), c = mod_red(C, D);
    long long x, y;
    long long g = egcd(b, D, x, y);
    // first try Y*B == 1 solvable pieces via general egcd on (b, c) over Z/D:
    // find u,v with u*b + v*c == g2, g2 = gcd(b,c,D); require g2 == 1.
    long long u1, v1;
    long long g2 = egcd(b, c, u1, v1); // u1*b + v1*c = gcd(b,c)
    long long gg = std::gcd(g2, D);
    if (gg != 1) throw NotInvertible("solve_yz: gcd(B,C,D) != 1");
    // scale so that u*b+v*c == 1 (mod D): gcd(b,c) is invertible mod D
    long long inv = mod_inverse(g2 == 0 ? 1 : g2, D);
    Y = mod_red(u1 * inv, D);
    Z = mod_red(v1 * inv, D);
    if (shift) {
        Y = mod_red(Y + shift * c, D);
        Z = mod_red(Z - shift * b, D);
    }
    (void)g; (void)x; (void)y;
}

long long euler_phi(long long n) {
    long long res = n;
    for (long long p = 2; p * p <= n; ++p)
        if (n % p == 0) {
            while (n % p == 0) n /= p;
            res -= res / p;
        }
    if (n > 1) res -= res / n;
    return res;
}

bool is_prime(long long n) {
    if (n < 2) return false;
    for (long long p = 2; p * p <= n; ++p)
        if (n % p == 0) return false;
    return true;
}

std::vector<long long> primes_in(long long lo, long long hi) {
    std::vector<long long> out;
    for (long long n = std::max(2LL, lo); n <= hi; ++n)
        if (is_prime(n)) out.push_back(n);
    return out;
}

KloostermanValue tilde_S(long long n1, long long n2, long long m1, long long D1, long long D2) {
    if (D1 < 1 || D2 < 1) throw DomainError("tilde_S: moduli must be positive");
    if (D2 % D1 != 0) throw DivisibilityViolation("tilde_S: D1 does not divide D2");
    long long delta = D2 / D1;
    auto tab1 = root_table(D1);
    auto tabd = root_table(std::max(delta, 1LL));
    KahanAcc acc;
    long long terms = 0;
    for (long long C1 = 0; C1 < D1; ++C1) {
        if (gcd_ll(C1, D1) != 1 && D1 > 1) continue;
        long long C1bar = mod_inverse(C1 % D1, D1);
        for (long long C2 = 0; C2 < D2; ++C2) {
            if (delta > 1 && gcd_ll(C2, delta) != 1) continue;
            long long C2bar = mod_inverse(C2 % std::max(delta, 1LL), std::max(delta, 1LL));
            long long a1 = mod_red(n2 * C1bar % D1 * C2 + n1 * C1, D1);
            long long a2 = mod_red(m1 * C2bar, std::max(delta, 1LL));
            acc.add(tab1[size_t(a1)] * tabd[size_t(a2)]);
            ++terms;
        }
    }
    KloostermanValue kv;
    kv.value = acc.s;
    kv.modulus_product = std::max(terms, 1LL);
    kv.eps_budget = 4.0 * MACH_EPS * double(terms);
    return kv;
}

KloostermanValue tilde_S_tabled(long long n1, long long n2, long long m1, long long D1, long long D2) {
    // independent re-implementation: precomputed inverse tables and separate
    // accumulation order (C2-major)
    if (D2 % D1 != 0) throw DivisibilityViolation("tilde_S_tabled: D1 does not divide D2");
    long long delta = D2 / D1;
    std::vector<long long> inv1(size_t(D1), -1), invd(size_t(std::max(delta, 1LL)), -1);
    for (long long c = 0; c < D1; ++c)
        if (D1 == 1 || gcd_ll(c, D1) == 1) inv1[size_t(c)] = mod_inverse(c, D1);
    for (long long c = 0; c < std::max(delta, 1LL); ++c)
        if (delta <= 1 || gcd_ll(c, delta) == 1) invd[size_t(c)] = mod_inverse(c, std::max(delta, 1LL));
    Cplx sum = 0.0;
    long long terms = 0;
    for (long long C2 = 0; C2 < D2; ++C2) {
        long long c2d = delta > 0 ? C2 % std::max(delta, 1LL) : 0;
        if (delta > 1 && invd[size_t(c2d)] < 0) continue;
        for (long long C1 = 0; C1 < D1; ++C1) {
            if (D1 > 1 && inv1[size_t(C1)] < 0) continue;
            double ph = double(mod_red(n2 * inv1[size_t(C1)] % D1 * C2 + n1 * C1, D1)) / double(D1)
                      + (delta > 1 ? double(mod_red(m1 * invd[size_t(c2d)], delta)) / double(delta) : 0.0);
            sum += unit_e(ph);
            ++terms;
        }
    }
    KloostermanValue kv;
    kv.value = sum;
    kv.modulus_product = std::max(terms, 1LL);
    kv.eps_budget = 4.0 * MACH_EPS * double(terms);
    return kv;
}

KloostermanValue big_S(long long n1, long long m2, long long m1, long long n2,
                       long long D1, long long D2,
                       long long yz_shift1, long long yz_shift2, long long term_budget) {
    if (D1 < 1 || D2 < 1) throw DomainError("big_S: moduli must be positive");
    if (D1 * D1 * D2 > term_budget)
        throw BudgetExceeded("big_S: term budget exceeded");
    auto tab1 = root_table(D1);
    auto tab2 = root_table(D2);
    long long DD = D1 * D2;
    KahanAcc acc;
    long long terms = 0;
    for (long long B1 = 0; B1 < D1; ++B1)
        for (long long C1 = 0; C1 < D1; ++C1) {
            if (D1 > 1 && gcd_ll(gcd_ll(B1, C1), D1) != 1) continue;
            long long Y1, Z1;
            solve_yz(B1, C1, D1, Y1, Z1, yz_shift1);
            for (long long B2 = 0; B2 < D2; ++B2) {
                // D1*C2 == -(B1*B2 + D2*C1)  (mod D1*D2)
                long long rhs = mod_red(-(B1 * B2 + D2 * C1), DD);
                if (rhs % D1 != 0) continue;
                long long C2 = (rhs / D1) % D2;
                if (D2 > 1 && gcd_ll(gcd_ll(B2, C2), D2) != 1) continue;
                long long Y2, Z2;
                solve_yz(B2, C2, D2, Y2, Z2, yz_shift2);
                long long a1 = mod_red(n1 * B1 + m1 * (Y1 * D2 - Z1 * B2), D1);
                long long a2 = mod_red(m2 * B2 + n2 * (Y2 * D1 - Z2 * B1), D2);
                acc.add(tab1[size_t(a1)] * tab2[size_t(a2)]);
                ++terms;
            }
        }
    KloostermanValue kv;
    kv.value = acc.s;
    kv.modulus_product = std::max(terms, 1LL);
    kv.eps_budget = 4.0 * MACH_EPS * double(terms);
    return kv;
}

KloostermanValue big_S_naive(long long n1, long long m2, long long m1, long long n2,
                             long long D1, long long D2) {
    long long DD = D1 * D2;
    Cplx sum = 0.0;
    long long terms = 0;
    for (long long B1 = 0; B1 < D1; ++B1)
        for (long long C1 = 0; C1 < D1; ++C1) {
            if (D1 > 1 && gcd_ll(gcd_ll(B1, C1), D1) != 1) continue;
            for (long long B2 = 0; B2 < D2; ++B2)
                for (long long C2 = 0; C2 < D2; ++C2) {
                    if (D2 > 1 && gcd_ll(gcd_ll(B2, C2), D2) != 1) continue;
                    if (mod_red(D1 * C2 + B1 * B2 + D2 * C1, DD) != 0) continue;
                    long long Y1, Z1, Y2, Z2;
                    solve_yz(B1, C1, D1, Y1, Z1);
                    solve_yz(B2, C2, D2, Y2, Z2);
                    double ph = double(mod_red(n1 * B1 + m1 * (Y1 * D2 - Z1 * B2), D1)) / double(D1)
                              + double(mod_red(m2 * B2 + n2 * (Y2 * D1 - Z2 * B1), D2)) / double(D2);
                    sum += unit_e(ph);
                    ++terms;
                }
        }
    KloostermanValue kv;
    kv.value = sum;
    kv.modulus_product = std::max(terms, 1LL);
    kv.eps_budget = 4.0 * MACH_EPS * double(terms);
    return kv;
}

KloostermanValue fourier_tilde_S(long long r1, long long s1, long long s2, long long n2,
                                 long long D, long long delta,
                                 long long x, long long y, int eps) {
    if (D < 1 || delta < 1) throw DomainError("fourier_tilde_S: moduli must be positive");
    if (!r1 || !s1 || !s2 || !n2) throw DomainError("fourier_tilde_S: twists must be nonzero");
    // memoize S~ on (first arg mod D, third arg mod delta); second arg fixed
    std::vector<KloostermanValue> memo(static_cast<size_t>(D * delta));
    std::vector<char> have(size_t(D * delta), 0);
    auto tabD = root_table(D);
    auto tabd = root_table(delta);
    KahanAcc acc;
    double inner_eps = 0.0, max_term = 0.0;
    for (long long nn = 0; nn < D; ++nn)
        for (long long mm = 0; mm < delta; ++mm) {
            long long a = mod_red(-(long long)eps * nn * r1, D);
            long long c = mod_red(mm * s1, delta);
            size_t key = size_t(a * delta + c);
            if (!have[key]) {
                memo[key] = tilde_S(a, n2 * s2, c, D, D * delta);
                have[key] = 1;
            }
            acc.add(memo[key].value * tabD[size_t(mod_red(-x * nn, D))] * tabd[size_t(mod_red(-y * mm, delta))]);
            inner_eps += memo[key].eps_budget;
            max_term = std::max(max_term, std::abs(memo[key].value));
        }
    KloostermanValue kv;
    kv.value = acc.s / double(D * delta);
    kv.modulus_product = D * D * delta;
    kv.eps_budget = (inner_eps + 4.0 * MACH_EPS * double(D * delta) * max_term) / double(D * delta);
    return kv;
}

KloostermanValue fourier_hat_S(const FourierTransformQuery& q, long long term_budget) {
    q.validate();
    long long D1 = q.D1, D2 = q.D2;
    if (D1 * D1 * D2 > term_budget)
        throw BudgetExceeded("fourier_hat_S: term budget exceeded");
    long long DD = D1 * D2;
    long long count = 0;
    for (long long B1 = 0; B1 < D1; ++B1) {
        if (mod_red(q.r1 * B1 - q.y1, D1) != 0) continue;
        for (long long C1 = 0; C1 < D1; ++C1) {
            if (D1 > 1 && gcd_ll(gcd_ll(B1, C1), D1) != 1) continue;
            long long Y1, Z1;
            solve_yz(B1, C1, D1, Y1, Z1);
            for (long long B2 = 0; B2 < D2; ++B2) {
                if (mod_red(q.r2 * B2 - q.x2, D2) != 0) continue;
                if (mod_red(q.s1 * (Y1 * D2 - Z1 * B2) - q.x1, D1) != 0) continue;
                long long rhs = mod_red(-(B1 * B2 + D2 * C1), DD);
                if (rhs % D1 != 0) continue;
                long long C2 = (rhs / D1) % D2;
                if (D2 > 1 && gcd_ll(gcd_ll(B2, C2), D2) != 1) continue;
                long long Y2, Z2;
                solve_yz(B2, C2, D2, Y2, Z2);
                if (mod_red(q.s2 * (Y2 * D1 - Z2 * B1) - q.y2, D2) != 0) continue;
                ++count;
            }
        }
    }
    KloostermanValue kv;
    kv.value = Cplx(double(count), 0.0);
    kv.modulus_product = D1 * D1 * D2 * D2;
    kv.eps_budget = 0.0; // exact integer count
    return kv;
}

KloostermanValue fourier_hat_S_definition(const FourierTransformQuery& q, long long term_budget) {
    q.validate();
    long long D1 = q.D1, D2 = q.D2;
    long long tuples = D1 * D1 * D2 * D2;
    if (tuples * D1 * D1 > term_budget)
        throw BudgetExceeded("fourier_hat_S_definition: term budget exceeded");
    // memoize S on reduced argument tuples
    std::vector<Cplx> memo(static_cast<size_t>(tuples));
    std::vector<char> have(size_t(tuples), 0);
    double inner_eps = 0.0;
    KahanAcc acc;
    for (long long n1 = 0; n1 < D1; ++n1)
        for (long long m1 = 0; m1 < D1; ++m1)
            for (long long n2 = 0; n2 < D2; ++n2)
                for (long long m2 = 0; m2 < D2; ++m2) {
                    long long a = mod_red(n1 * q.r1, D1), c = mod_red(m1 * q.s1, D1);
                    long long b = mod_red(m2 * q.r2, D2), d = mod_red(n2 * q.s2, D2);
                    size_t key = size_t(((a * D1 + c) * D2 + b) * D2 + d);
                    if (!have[key]) {
                        auto s = big_S(a, b, c, d, D1, D2);
                        memo[key] = s.value;
                        inner_eps = std::max(inner_eps, s.eps_budget);
                        have[key] = 1;
                    }
                    double ph = -double(mod_red(q.x1 * m1 + q.y1 * n1, D1)) / double(D1)
                                - double(mod_red(q.x2 * m2 + q.y2 * n2, D2)) / double(D2);
                    acc.add(memo[key] * unit_e(ph));
                }
    KloostermanValue kv;
    kv.value = acc.s / (double(D1) * D1 * D2 * D2);
    kv.modulus_product = D1 * D2 * std::max(D1, D2);
    kv.eps_budget = inner_eps + 4.0 * MACH_EPS * double(tuples);
    return kv;
}

double weil_bound_tilde(long long n1, long long n2, long long m1, long long D1, long long D2) {
    long long delta = D2 / D1;
    long long a = gcd_ll(m1, delta) * D1 * D1;
    long long b = gcd_ll(gcd_ll(n1, n2), D1) * D2;
    return double(gcd_ll(a, b));
}

double weil_bound_big(long long n1, long long m2, long long m1, long long n2,
                      long long D1, long long D2) {
    long long l = lcm_ll(D1, D2);
    double g = double(gcd_ll(D1, D2)) * double(gcd_ll(m1 * n1, l)) * double(gcd_ll(m2 * n2, l));
    return std::sqrt(double(D1) * double(D2)) * std::sqrt(g);
}

SweepResult weil_ratio_sweep_tilde(long long Dmax, long long argmax, bool keep_rows) {
    SweepResult res;
    for (long long D1 = 1; D1 <= Dmax; ++D1)
        for (long long D2 = D1; D2 <= Dmax; D2 += D1)
            for (long long n1 = -argmax; n1 <= argmax; ++n1)
                for (long long n2 = -argmax; n2 <= argmax; ++n2)
                    for (long long m1 = -argmax; m1 <= argmax; ++m1) {
                        auto s = tilde_S(n1, n2, m1, D1, D2);
                        double bd = weil_bound_tilde(n1, n2, m1, D1, D2);
                        double ratio = std::abs(s.value) / bd;
                        res.max_ratio = std::max(res.max_ratio, ratio);
                        if (keep_rows) {
                            ResultRow r;
                            r.suite = "weil_tilde";
                            std::ostringstream os;
                            os << "n1=" << n1 << ";n2=" << n2 << ";m1=" << m1
                               << ";D1=" << D1 << ";D2=" << D2;
                            r.inputs = os.str();
                            r.lhs = s.value;
                            r.rhs = Cplx(bd, 0);
                            r.residual = ratio;
                            r.bound = bd;
                            r.pass = true;
                            res.rows.push_back(std::move(r));
                        }
                    }
    return res;
}

SweepResult weil_ratio_sweep_big(long long Dmax, long long argmax, bool keep_rows) {
    SweepResult res;
    std::vector<double> maxes(static_cast<size_t>(Dmax), 0.0);
    std::vector<std::vector<ResultRow>> rows(static_cast<size_t>(Dmax));
    parallel_for(size_t(Dmax), [&](size_t i) {
        long long D1 = (long long)i + 1;
        double mx = 0.0;
        for (long long D2 = 1; D2 <= Dmax; ++D2)
            for (long long n1 = -argmax; n1 <= argmax; ++n1)
                for (long long m2 = -argmax; m2 <= argmax; ++m2)
                    for (long long m1 = -argmax; m1 <= argmax; ++m1)
                        for (long long n2 = -argmax; n2 <= argmax; ++n2) {
                            auto s = big_S(n1, m2, m1, n2, D1, D2);
                            double bd = weil_bound_big(n1, m2, m1, n2, D1, D2);
                            double ratio = std::abs(s.value) / bd;
                            mx = std::max(mx, ratio);
                            if (keep_rows) {
                                ResultRow r;
                                r.suite = "weil_big";
                                std::ostringstream os;
                                os << "n1=" << n1 << ";m2=" << m2 << ";m1=" << m1
                                   << ";n2=" << n2 << ";D1=" << D1 << ";D2=" << D2;
                                r.inputs = os.str();
                                r.lhs = s.value;
                                r.rhs = Cplx(bd, 0);
                                r.residual = ratio;
                                r.bound = bd;
                                r.pass = true;
                                rows[i].push_back(std::move(r));
                            }
                        }
        maxes[i] = mx;
    });
    for (size_t i = 0; i < maxes.size(); ++i) {
        res.max_ratio = std::max(res.max_ratio, maxes[i]);
        for (auto& r : rows[i]) res.rows.push_back(std::move(r));
    }
    return res;
}

} // namespace gl3k::modarith
