#include "gl3k/quadrature.hpp"

namespace gl3k {

void gauss_legendre(int n, std::vector<double>& x, std::vector<double>& w) {
    x.resize(n);
    w.resize(n);
    for (int i = 0; i < (n + 1) / 2; ++i) {
        double z = std::cos(PI * (i + 0.75) / (n + 0.5));
        double pp = 0.0;
        for (int it = 0; it < 100; ++it) {
            double p1 = 1.0, p2 = 0.0;
            for (int j = 0; j < n; ++j) {
                double p3 = p2;
                p2 = p1;
                p1 = ((2.0 * j + 1.0) * z * p2 - j * p3) / (j + 1.0);
            }
            pp = n * (z * p1 - p2) / (z * z - 1.0);
            double z1 = z;
            z = z1 - p1 / pp;
            if (std::abs(z - z1) < 1e-15) break;
        }
        x[i] = -z;
        x[n - 1 - i] = z;
        w[i] = 2.0 / ((1.0 - z * z) * pp * pp);
        w[n - 1 - i] = w[i];
    }
}

double window_W_deriv(int j, double x) {
    if (j == 0) return window_W(x);
    // central differences on a stencil scaled to the support
    double h = 1e-2 / (1 << std::min(j, 4));
    double acc = 0.0;
    // binomial central difference of order j
    for (int k = 0; k <= j; ++k) {
        double c = 1.0;
        for (int m = 0; m < k; ++m) c *= double(j - m) / double(m + 1);
        double sgn = (k % 2 == 0) ? 1.0 : -1.0;
        acc += sgn * c * window_W(x + (j / 2.0 - k) * h);
    }
    return acc / std::pow(h, j);
}

} // namespace gl3k
