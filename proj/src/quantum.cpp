#include "spinecensus/quantum.hpp"

#include <cmath>
#include <numeric>
#include <stdexcept>

namespace spinecensus {

namespace {

constexpr double kPi = 3.14159265358979323846264338327950288;
constexpr long double kPiL = 3.14159265358979323846264338327950288L;

double check_real(std::complex<double> z, const char* what) {
  if (std::fabs(z.imag()) > 1e-10 * (1.0 + std::fabs(z.real())))
    throw std::runtime_error(std::string(what) + ": imaginary part did not cancel");
  return z.real();
}

long double qint_l(int k, const QuantumContext& ctx) {
  return std::sin(k * kPiL * ctx.s / ctx.r) / std::sin(kPiL * ctx.s / ctx.r);
}

long double qfact_l(int k, const QuantumContext& ctx) {
  long double f = 1.0L;
  for (int j = 2; j <= k; ++j) f *= qint_l(j, ctx);
  return f;
}

void check_admissible(int h, const QuantumContext& ctx) {
  if (h < 0 || 3 * h > ctx.r - 2)
    throw std::domain_error("colour not admissible: needs 0 <= 3h <= r-2");
}

}  // namespace

QuantumContext QuantumContext::make(int r, int s) {
  if (r < 3) throw std::domain_error("quantum level must be at least 3");
  if (s <= 0 || s >= 2 * r || std::gcd(s, r) != 1)
    throw std::domain_error("q0 exponent must satisfy 0 < s < 2r and gcd(s, r) = 1");
  QuantumContext ctx;
  ctx.r = r;
  ctx.s = s;
  ctx.q0 = std::polar(1.0, kPi * s / r);
  return ctx;
}

double quantum_integer(int k, const QuantumContext& ctx) {
  const std::complex<double> qk = std::polar(1.0, kPi * ctx.s * k / ctx.r);
  const std::complex<double> q1 = ctx.q0;
  return check_real((qk - std::conj(qk)) / (q1 - std::conj(q1)), "quantum integer");
}

double quantum_integer_real(int k, const QuantumContext& ctx) {
  return static_cast<double>(qint_l(k, ctx));
}

double quantum_factorial(int k, const QuantumContext& ctx) {
  if (k < 0 || k > ctx.r - 1)
    throw std::domain_error("quantum factorial argument must lie in [0, r-1]");
  double f = 1.0;
  for (int j = 2; j <= k; ++j) f *= quantum_integer(j, ctx);
  return f;
}

double quantum_6j_all(int h, const QuantumContext& ctx) {
  check_admissible(h, ctx);
  const double fh = quantum_factorial(h, ctx);
  const double delta_sq = fh * fh * fh / quantum_factorial(3 * h + 1, ctx);
  if (!(delta_sq > 0.0))
    throw std::runtime_error("quantum 6j: non-positive triad norm at this q0");

  const int zmax = std::min(4 * h, ctx.r - 2);
  double sum = 0.0;
  for (int z = 3 * h; z <= zmax; ++z) {
    const double d1 = quantum_factorial(z - 3 * h, ctx);
    const double d2 = quantum_factorial(4 * h - z, ctx);
    double term = quantum_factorial(z + 1, ctx) / (d1 * d1 * d1 * d1) / (d2 * d2 * d2);
    if (z % 2 != 0) term = -term;
    sum += term;
  }
  return delta_sq * delta_sq * sum;
}

double quantum_6j_all_real(int h, const QuantumContext& ctx) {
  check_admissible(h, ctx);
  const long double fh = qfact_l(h, ctx);
  const long double delta_sq = fh * fh * fh / qfact_l(3 * h + 1, ctx);
  if (!(delta_sq > 0.0L))
    throw std::runtime_error("quantum 6j: non-positive triad norm at this q0");
  const int zmax = std::min(4 * h, ctx.r - 2);
  long double sum = 0.0L;
  for (int z = 3 * h; z <= zmax; ++z) {
    const long double d1 = qfact_l(z - 3 * h, ctx);
    const long double d2 = qfact_l(4 * h - z, ctx);
    long double term = qfact_l(z + 1, ctx) / (d1 * d1 * d1 * d1) / (d2 * d2 * d2);
    if (z % 2 != 0) term = -term;
    sum += term;
  }
  return static_cast<double>(delta_sq * delta_sq * sum);
}

double turaev_viro(int n, const QuantumContext& ctx) {
  if (n < 2) throw std::domain_error("turaev_viro: needs n >= 2");
  double total = 0.0;
  for (int h = 0; 3 * h <= ctx.r - 2; ++h) {
    const double sixj = quantum_6j_all(h, ctx);
    const double dim = quantum_integer(2 * h + 1, ctx);
    total += std::pow(sixj, n) * std::pow(dim, 1 - n);
  }
  return total;
}

}  // namespace spinecensus
