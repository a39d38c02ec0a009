#pragma once

#include "gl3k/types.hpp"
#include <functional>

namespace gl3k {

/* Adaptive Gauss(7)/Kronrod(15) on [a,b] for complex-valued integrands.
   Error estimate per panel |K15-G7|; bisect worst panels until the global
   tolerance max(rel_tol*|I|, abs_tol) is met or the node budget runs out. */
class GaussKronrod {
public:
    struct Panel {
        double a, b;
        Cplx val;
        double err;
    };

    template <class F>
    static Cplx integrate(F&& f, double a, double b, const QuadSpec& q, double* err_out = nullptr) {
        std::vector<Panel> heap;
        int nodes = 0;
        heap.push_back(eval_panel(f, a, b, nodes));
        Cplx total = heap[0].val;
        double toterr = heap[0].err;
        while (nodes < q.max_nodes) {
            double tol = std::max(q.rel_tol * std::abs(total), q.abs_tol);
            if (toterr <= tol) break;
            // pop worst panel
            size_t wi = 0;
            for (size_t i = 1; i < heap.size(); ++i)
                if (heap[i].err > heap[wi].err) wi = i;
            Panel w = heap[wi];
            heap[wi] = heap.back();
            heap.pop_back();
            double m = 0.5 * (w.a + w.b);
            if (m == w.a || m == w.b) { // interval exhausted
                heap.push_back(w);
                break;
            }
            Panel l = eval_panel(f, w.a, m, nodes);
            Panel r = eval_panel(f, m, w.b, nodes);
            total += l.val + r.val - w.val;
            toterr += l.err + r.err - w.err;
            heap.push_back(l);
            heap.push_back(r);
        }
        // recompute sums to avoid drift
        total = Cplx(0);
        toterr = 0;
        for (auto& p : heap) { total += p.val; toterr += p.err; }
        if (err_out) *err_out = toterr;
        double tol = std::max(q.rel_tol * std::abs(total), q.abs_tol);
        if (toterr > tol * 1.000001 && q.throw_on_failure && toterr > std::max(q.abs_tol, 1e-300))
            throw QuadratureFailure("GaussKronrod: tolerance not met within node budget");
        return total;
    }

private:
    template <class F>
    static Panel eval_panel(F&& f, double a, double b, int& nodes) {
        static const double xgk[8] = {
            0.991455371120813, 0.949107912342759, 0.864864423359769, 0.741531185599394,
            0.586087235467691, 0.405845151377397, 0.207784955007898, 0.0};
        static const double wgk[8] = {
            0.022935322010529, 0.063092092629979, 0.104790010322250, 0.140653259715525,
            0.169004726639267, 0.190350578064785, 0.204432940075298, 0.209482141084728};
        static const double wg[4] = {
            0.129484966168870, 0.279705391489277, 0.381830050505119, 0.417959183673469};
        double h = 0.5 * (b - a), c = 0.5 * (a + b);
        Cplx fc = f(c);
        Cplx kron = wgk[7] * fc;
        Cplx gauss = wg[3] * fc;
        for (int j = 0; j < 7; ++j) {
            Cplx f1 = f(c - h * xgk[j]);
            Cplx f2 = f(c + h * xgk[j]);
            kron += wgk[j] * (f1 + f2);
            if (j % 2 == 1) gauss += wg[j / 2] * (f1 + f2);
        }
        nodes += 15;
        Panel p;
        p.a = a;
        p.b = b;
        p.val = kron * h;
        double diff = std::abs(kron - gauss) * std::abs(h);
        p.err = diff;
        return p;
    }
};

template <class F>
inline Cplx integrate_gk(F&& f, double a, double b, const QuadSpec& q = QuadSpec::defaults(),
                         double* err_out = nullptr) {
    return GaussKronrod::integrate(std::forward<F>(f), a, b, q, err_out);
}

/* Gauss-Legendre nodes/weights on [-1,1] by Newton on Legendre polynomials. */
void gauss_legendre(int n, std::vector<double>& x, std::vector<double>& w);

/* C^inf step: 0 for u<=0, 1 for u>=1, all derivatives vanish at both ends. */
inline double smooth_step(double u) {
    if (u <= 0.0) return 0.0;
    if (u >= 1.0) return 1.0;
    double a = std::exp(-1.0 / u);
    double b = std::exp(-1.0 / (1.0 - u));
    return a / (a + b);
}

/* The fixed smooth dyadic weight W: support [1/2,3/2], W(1)=1.
   W(x) = exp(1 - 1/(1 - (2(x-1))^2)) on (1/2,3/2). */
inline double window_W(double x) {
    double u = 2.0 * (x - 1.0);
    double d = 1.0 - u * u;
    if (d <= 0.0) return 0.0;
    return std::exp(1.0 - 1.0 / d);
}

/* j-th derivative of W by central finite differences (for recorded sup-norms). */
double window_W_deriv(int j, double x);

} // namespace gl3k
