#include "spinecensus/volume.hpp"

#include <array>
#include <cmath>
#include <stdexcept>
#include <vector>

namespace spinecensus {

namespace {

constexpr double kPi = 3.14159265358979323846264338327950288;

// zeta(2m) for m = 1..kZetaTerms; the series below needs (w/pi)^(2m) down to
// 1e-18, i.e. about 30 terms at |w| = pi/2.
constexpr int kZetaTerms = 36;

const std::array<double, kZetaTerms + 1>& zeta_even() {
  static const auto table = [] {
    std::array<double, kZetaTerms + 1> z{};
    z[1] = kPi * kPi / 6.0;
    z[2] = kPi * kPi * kPi * kPi / 90.0;
    z[3] = std::pow(kPi, 6) / 945.0;
    for (int m = 4; m <= kZetaTerms; ++m) {
      long double s = 0.0L;
      for (int j = 1; j <= 512; ++j) {
        const long double term = std::pow(static_cast<long double>(j), -2.0L * m);
        s += term;
        if (term < 1e-22L) break;
      }
      z[static_cast<std::size_t>(m)] = static_cast<double>(s);
    }
    return z;
  }();
  return table;
}

double simpson_rec(double (*f)(double), double a, double m, double b, double fa, double fm,
                   double fb, double whole, double tol, int depth) {
  const double lm = 0.5 * (a + m), rm = 0.5 * (m + b);
  const double flm = f(lm), frm = f(rm);
  const double left = (m - a) / 6.0 * (fa + 4.0 * flm + fm);
  const double right = (b - m) / 6.0 * (fm + 4.0 * frm + fb);
  const double delta = left + right - whole;
  if (depth <= 0 || std::fabs(delta) <= 15.0 * tol) return left + right + delta / 15.0;
  return simpson_rec(f, a, lm, m, fa, flm, fm, left, 0.5 * tol, depth - 1) +
         simpson_rec(f, m, rm, b, fm, frm, fb, right, 0.5 * tol, depth - 1);
}

// Nodes and weights of the 16-point Gauss-Legendre rule on [-1,1], found by
// Newton iteration on the Legendre polynomial.
struct GaussRule {
  std::array<double, 16> x{};
  std::array<double, 16> w{};
};

const GaussRule& gauss16() {
  static const GaussRule rule = [] {
    GaussRule r;
    const int n = 16;
    for (int i = 0; i < n; ++i) {
      double x = std::cos(kPi * (i + 0.75) / (n + 0.5));
      for (int it = 0; it < 100; ++it) {
        double p0 = 1.0, p1 = x;
        for (int k = 2; k <= n; ++k) {
          const double p2 = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / k;
          p0 = p1;
          p1 = p2;
        }
        const double dp = n * (x * p1 - p0) / (x * x - 1.0);
        const double dx = p1 / dp;
        x -= dx;
        if (std::fabs(dx) < 1e-16) break;
      }
      double p0 = 1.0, p1 = x;
      for (int k = 2; k <= n; ++k) {
        const double p2 = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / k;
        p0 = p1;
        p1 = p2;
      }
      const double dp = n * (x * p1 - p0) / (x * x - 1.0);
      r.x[static_cast<std::size_t>(n - 1 - i)] = x;
      r.w[static_cast<std::size_t>(n - 1 - i)] = 2.0 / ((1.0 - x * x) * dp * dp);
    }
    return r;
  }();
  return rule;
}

double gauss_fixed(double (*f)(double), double a, double b, int panels) {
  const GaussRule& r = gauss16();
  double total = 0.0;
  const double h = (b - a) / panels;
  for (int p = 0; p < panels; ++p) {
    const double lo = a + p * h;
    const double mid = lo + 0.5 * h, half = 0.5 * h;
    double s = 0.0;
    for (int i = 0; i < 16; ++i)
      s += r.w[static_cast<std::size_t>(i)] * f(mid + half * r.x[static_cast<std::size_t>(i)]);
    total += s * half;
  }
  return total;
}

// log(2 sin u / u), smooth on [0, pi/2]
double log_sinc2(double u) {
  if (u == 0.0) return std::log(2.0);
  return std::log(2.0 * std::sin(u) / u);
}

// arccosh(cos t / (2 cos t - 1)) computed through log1p so the t -> 0 end
// keeps full precision.
double trunc_integrand(double t) {
  if (t == 0.0) return 0.0;
  const double s = std::sin(0.5 * t);
  const double u = 2.0 * s * s / (2.0 * std::cos(t) - 1.0);  // argument minus 1
  return std::log1p(u + std::sqrt(u * (2.0 + u)));
}

}  // namespace

double adaptive_simpson(double (*f)(double), double a, double b, double tol) {
  const double m = 0.5 * (a + b);
  const double fa = f(a), fm = f(m), fb = f(b);
  const double whole = (b - a) / 6.0 * (fa + 4.0 * fm + fb);
  return simpson_rec(f, a, m, b, fa, fm, fb, whole, tol, 48);
}

double gauss_legendre_panels(double (*f)(double), double a, double b, double tol) {
  double prev = gauss_fixed(f, a, b, 1);
  for (int panels = 2; panels <= 4096; panels *= 2) {
    const double cur = gauss_fixed(f, a, b, panels);
    if (std::fabs(cur - prev) <= tol) return cur;
    prev = cur;
  }
  return prev;
}

double lobachevsky(double omega) {
  // reduce to [-pi/2, pi/2] by pi-periodicity, then use oddness
  double r = std::remainder(omega, kPi);
  if (r == 0.0) return 0.0;
  const double sign = r < 0.0 ? -1.0 : 1.0;
  r = std::fabs(r);

  const auto& zeta = zeta_even();
  const double q = (r / kPi) * (r / kPi);
  double qm = 1.0, sum = 0.0;
  for (int m = 1; m <= kZetaTerms; ++m) {
    qm *= q;
    const double term = zeta[static_cast<std::size_t>(m)] / (m * (2.0 * m + 1.0)) * qm;
    sum += term;
    if (term < 1e-19) break;
  }
  return sign * (r - r * std::log(2.0 * r) + r * sum);
}

double lobachevsky_quadrature(double omega) {
  double r = std::remainder(omega, kPi);
  if (r == 0.0) return 0.0;
  const double sign = r < 0.0 ? -1.0 : 1.0;
  r = std::fabs(r);
  // -int_0^r log(2 sin u) du = -(r log r - r) - int_0^r log(2 sin u / u) du
  const double smooth = adaptive_simpson(log_sinc2, 0.0, r, 1e-14);
  return sign * (r - r * std::log(r) - smooth);
}

double ideal_octahedron_volume() {
  static const double v = 8.0 * lobachevsky(kPi / 4.0);
  return v;
}

double truncated_tetrahedron_volume(double theta) {
  if (!(theta > 0.0) || !(theta < kPi / 3.0))
    throw std::domain_error("truncated tetrahedron angle must lie in (0, pi/3)");
  return ideal_octahedron_volume() - 3.0 * adaptive_simpson(trunc_integrand, 0.0, theta, 1e-13);
}

double truncated_tetrahedron_volume_gauss(double theta) {
  if (!(theta > 0.0) || !(theta < kPi / 3.0))
    throw std::domain_error("truncated tetrahedron angle must lie in (0, pi/3)");
  return ideal_octahedron_volume() - 3.0 * gauss_legendre_panels(trunc_integrand, 0.0, theta, 1e-13);
}

double manifold_volume(int n) {
  if (n < 2) throw std::domain_error("manifold_volume: needs n >= 2");
  return n * truncated_tetrahedron_volume(kPi / (3.0 * n));
}

double manifold_volume_gauss(int n) {
  if (n < 2) throw std::domain_error("manifold_volume_gauss: needs n >= 2");
  return n * truncated_tetrahedron_volume_gauss(kPi / (3.0 * n));
}

}  // namespace spinecensus
