#pragma once

namespace spinecensus {

// Lobachevsky function L(w) = -integral_0^w log|2 sin u| du, odd and
// pi-periodic.  Series evaluation (the Fourier expansion
// (1/2) sum sin(2kw)/k^2 resummed through zeta(2m) so the tail actually
// reaches 1e-13).
double lobachevsky(double omega);

// Independent evaluation by adaptive quadrature of the defining integral;
// the log singularity at 0 is integrated in closed form and only the smooth
// remainder log(2 sin u / u) is quadratured.
double lobachevsky_quadrature(double omega);

// 8 L(pi/4), the volume of the regular ideal octahedron and the limit of
// the per-tetrahedron volume below.
double ideal_octahedron_volume();

// Volume of the regular hyperbolic truncated tetrahedron with dihedral
// angle theta along its internal edges,
//   8 L(pi/4) - 3 integral_0^theta arccosh(cos t / (2 cos t - 1)) dt,
// for 0 < theta < pi/3.  Primary backend: adaptive Simpson.
double truncated_tetrahedron_volume(double theta);

// Same value through Gauss-Legendre panels (independent quadrature).
double truncated_tetrahedron_volume_gauss(double theta);

// Volume of the manifolds with an n-tetrahedron one-edged triangulation:
// n times the truncated tetrahedron of angle pi/(3n).  n >= 2.
double manifold_volume(int n);
double manifold_volume_gauss(int n);

// Generic quadrature helpers, exposed for the cross-checking tests.
double adaptive_simpson(double (*f)(double), double a, double b, double tol);
double gauss_legendre_panels(double (*f)(double), double a, double b, double tol);

}  // namespace spinecensus
