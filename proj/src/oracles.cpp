#include "logmink/oracles.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace logmink::oracles {

namespace {

constexpr double kPi = 3.14159265358979323846;

void require_positive(double v, const char* what) {
    if (!std::isfinite(v) || !(v > 0.0)) throw std::invalid_argument(std::string(what) + " must be positive");
}

// J0 by its power series sum_k (-1)^k (x/2)^{2k} / (k!)^2; plenty for x <= 3.
double bessel_j0(double x) {
    const double q = 0.25 * x * x;
    double term = 1.0;
    double sum = 1.0;
    for (int k = 1; k < 64; ++k) {
        term *= -q / (double(k) * double(k));
        sum += term;
        if (std::abs(term) < 1e-18) break;
    }
    return sum;
}

double bessel_j01_root() {
    double lo = 2.0, hi = 3.0;  // J0(2) > 0 > J0(3)
    for (int it = 0; it < 200 && hi - lo > 1e-12; ++it) {
        const double mid = 0.5 * (lo + hi);
        (bessel_j0(mid) > 0.0 ? lo : hi) = mid;
    }
    return 0.5 * (lo + hi);
}

struct Pt {
    double x, y;
};

// Clip a convex polygon by the halfplane x . u <= c (Sutherland-Hodgman).
std::vector<Pt> clip_halfplane(const std::vector<Pt>& poly, double ux, double uy, double c) {
    std::vector<Pt> out;
    const std::size_t n = poly.size();
    for (std::size_t i = 0; i < n; ++i) {
        const Pt a = poly[i];
        const Pt b = poly[(i + 1) % n];
        const double da = a.x * ux + a.y * uy - c;
        const double db = b.x * ux + b.y * uy - c;
        if (da <= 0.0) out.push_back(a);
        if ((da < 0.0) != (db < 0.0) && da != db) {
            const double t = da / (da - db);
            out.push_back({a.x + t * (b.x - a.x), a.y + t * (b.y - a.y)});
        }
    }
    return out;
}

std::vector<Pt> support_body(const std::vector<double>& thetas, const std::vector<double>& q) {
    double box = 0.0;
    for (double v : q) box = std::max(box, v);
    box *= 4.0;
    std::vector<Pt> poly{{box, box}, {-box, box}, {-box, -box}, {box, -box}};
    for (std::size_t i = 0; i < thetas.size() && !poly.empty(); ++i) {
        const double ux = std::cos(thetas[i]);
        const double uy = std::sin(thetas[i]);
        poly = clip_halfplane(poly, ux, uy, q[i]);
        if (!poly.empty()) poly = clip_halfplane(poly, -ux, -uy, q[i]);
    }
    return poly;
}

double polygon_area(const std::vector<Pt>& poly) {
    double twice = 0.0;
    const std::size_t n = poly.size();
    for (std::size_t i = 0; i < n; ++i) {
        const Pt a = poly[i];
        const Pt b = poly[(i + 1) % n];
        twice += a.x * b.y - a.y * b.x;
    }
    return 0.5 * std::abs(twice);
}

}  // namespace

OracleValue disc_torsion(double R) {
    require_positive(R, "disc_torsion: R");
    return {"disc_torsion", kPi * R * R * R * R / 8.0, "closed-form"};
}

OracleValue disc_torsion_boundary_gradient(double R) {
    require_positive(R, "disc_torsion_boundary_gradient: R");
    return {"disc_torsion_boundary_gradient", 0.5 * R, "closed-form"};
}

OracleValue square_torsion(double a) {
    require_positive(a, "square_torsion: a");
    // tau = 64 a^4 / pi^6 * sum over odd m, n of 1 / (m^2 n^2 (m^2 + n^2)).
    double sum = 0.0;
    for (long m = 1;; m += 2) {
        const double m2 = double(m) * double(m);
        double row = 0.0;
        for (long n = 1;; n += 2) {
            const double n2 = double(n) * double(n);
            const double term = 1.0 / (m2 * n2 * (m2 + n2));
            row += term;
            if (term < 1e-14 * (sum + row)) break;
        }
        sum += row;
        if (row < 1e-14 * sum) break;
    }
    const double p = kPi * kPi * kPi;
    return {"square_torsion", 64.0 * a * a * a * a / (p * p) * sum, "series"};
}

OracleValue rect_eigen(double a, double b) {
    require_positive(a, "rect_eigen: a");
    require_positive(b, "rect_eigen: b");
    return {"rect_eigen", kPi * kPi * (1.0 / (a * a) + 1.0 / (b * b)), "closed-form"};
}

OracleValue bessel_j01() {
    return {"bessel_j01", bessel_j01_root(), "special-function-root"};
}

OracleValue disc_eigen(double R) {
    require_positive(R, "disc_eigen: R");
    const double j = bessel_j01_root();
    return {"disc_eigen", j * j / (R * R), "special-function-root"};
}

BruteForceSolution brute_force_volume_logmink(const std::vector<double>& thetas,
                                              const std::vector<double>& masses) {
    const std::size_t m = thetas.size();
    if (m != masses.size()) throw std::invalid_argument("brute force: size mismatch");
    if (m < 3 || m > 4) throw std::invalid_argument("brute force: needs 3 or 4 pairs");

    double total = 0.0;
    for (double w : masses) {
        if (!std::isfinite(w) || !(w > 0.0)) throw std::invalid_argument("brute force: masses must be positive");
        total += w;
    }
    for (double w : masses)
        if (!(w < 0.5 * total)) throw std::invalid_argument("brute force: measure concentrates half its mass on a pair");

    std::vector<double> nu_hat(m);
    for (std::size_t i = 0; i < m; ++i) nu_hat[i] = masses[i] / total;

    // log Gamma on the geometric-mean-one slice: the last log coordinate is
    // minus the sum of the free ones.
    const std::size_t d = m - 1;
    std::vector<double> q(m);
    const auto log_gamma = [&](const std::vector<double>& t) {
        double g_last = 0.0;
        for (std::size_t i = 0; i < d; ++i) g_last -= t[i];
        double dotng = nu_hat[d] * g_last;
        for (std::size_t i = 0; i < d; ++i) dotng += nu_hat[i] * t[i];
        for (std::size_t i = 0; i < d; ++i) q[i] = std::exp(t[i]);
        q[d] = std::exp(g_last);
        const double area = polygon_area(support_body(thetas, q));
        if (!(area > 0.0)) return std::numeric_limits<double>::infinity();
        return -0.5 * std::log(area) + dotng;
    };

    // Coarse sweep of the slice, then local bisection of the grid step.
    std::vector<double> best(d, 0.0);
    double best_val = std::numeric_limits<double>::infinity();
    const double coarse = 0.2;
    std::vector<double> t(d, 0.0);
    const int half_span = 6;  // covers log-support offsets up to 1.2
    const auto sweep = [&](auto&& self, std::size_t dim) -> void {
        if (dim == d) {
            const double val = log_gamma(t);
            if (val < best_val) {
                best_val = val;
                best = t;
            }
            return;
        }
        for (int k = -half_span; k <= half_span; ++k) {
            t[dim] = coarse * k;
            self(self, dim + 1);
        }
    };
    sweep(sweep, 0);

    for (double step = coarse; step > 0.5e-4;) {
        step *= 0.5;
        bool moved = true;
        while (moved) {
            moved = false;
            const std::vector<double> center = best;
            const auto local = [&](auto&& self, std::size_t dim) -> void {
                if (dim == d) {
                    const double val = log_gamma(t);
                    if (val < best_val) {
                        best_val = val;
                        best = t;
                        moved = true;
                    }
                    return;
                }
                for (int k = -1; k <= 1; ++k) {
                    t[dim] = center[dim] + step * k;
                    self(self, dim + 1);
                }
            };
            local(local, 0);
        }
    }

    // Rebuild the optimum and rescale it so its area equals the total mass.
    double g_last = 0.0;
    for (std::size_t i = 0; i < d; ++i) g_last -= best[i];
    for (std::size_t i = 0; i < d; ++i) q[i] = std::exp(best[i]);
    q[d] = std::exp(g_last);
    const std::vector<Pt> body = support_body(thetas, q);
    const double area = polygon_area(body);
    const double c = std::sqrt(total / area);

    BruteForceSolution out;
    out.thetas = thetas;
    out.supports.resize(m);
    for (std::size_t i = 0; i < m; ++i) {
        const double ux = std::cos(thetas[i]);
        const double uy = std::sin(thetas[i]);
        double h = -std::numeric_limits<double>::infinity();
        for (const Pt& v : body) h = std::max(h, std::abs(v.x * ux + v.y * uy));
        out.supports[i] = c * h;
    }
    out.gamma = std::exp(best_val);
    out.objective_phi = 0.0;
    for (std::size_t i = 0; i < m; ++i) out.objective_phi += masses[i] * std::log(out.supports[i]);
    return out;
}

}  // namespace logmink::oracles
