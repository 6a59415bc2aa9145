#include "fzeta/special.hpp"

#include "fzeta/errors.hpp"

#include <cmath>
#include <numbers>
#include <string>

namespace fzeta::special {

using cplx = std::complex<double>;

namespace {

ComplexValue from_integral(const quad::ComplexIntegral& r) {
  return {r.value.real(), r.value.imag(), r.err_est, r.route};
}

void require_finite(ComplexPoint s, const char* who) {
  if (!std::isfinite(s.a) || !std::isfinite(s.b))
    throw PreconditionError(std::string(who) + ": s must be finite");
}

} // namespace

cplx eta_factor(cplx s) {
  return 1.0 - std::exp((1.0 - s) * std::numbers::ln2);
}

ComplexValue F(ComplexPoint s, const quad::QuadratureSpec& q, quad::Route route) {
  require_finite(s, "F");
  if (!(s.a > 0.0))
    throw DomainError("F: requires Re(s) > 0");
  return from_integral(quad::mellin(quad::MellinKernel::fermi, s.s(), q, route));
}

GValue G_direct(ComplexPoint s, const quad::QuadratureSpec& q) {
  require_finite(s, "G");
  if (!(s.a > 1.0))
    throw DomainError("G: direct quadrature diverges for Re(s) <= 1");
  GValue g;
  static_cast<ComplexValue&>(g) = from_integral(quad::mellin(quad::MellinKernel::bose, s.s(), q));
  g.method = GMethod::direct;
  return g;
}

GValue G(ComplexPoint s, const quad::QuadratureSpec& q) {
  if (s.a > 1.0)
    return G_direct(s, q);
  const ComplexValue f = F(s, q);
  const cplx den = eta_factor(s.s());
  if (std::abs(den) < 1e-14)
    throw DomainError("G: 1 - 2^{1-s} vanishes at this s");
  const cplx v = f.z() / den;
  GValue g;
  g.re = v.real();
  g.im = v.imag();
  g.err_est = f.err_est / std::abs(den);
  g.route = f.route;
  g.method = GMethod::via_identity;
  return g;
}

ComplexValue Gamma(ComplexPoint s, const quad::QuadratureSpec& q, quad::Route route) {
  require_finite(s, "Gamma");
  if (!(s.a > 0.0))
    throw DomainError("Gamma: requires Re(s) > 0");
  return from_integral(quad::mellin(quad::MellinKernel::gamma, s.s(), q, route));
}

ComplexValue zeta_strip(ComplexPoint s, const quad::QuadratureSpec& q) {
  const GValue g = G(s, q);
  const ComplexValue gam = Gamma(s, q);
  const double mag = gam.abs();
  if (!(mag > 1e-290) || !std::isfinite(mag))
    throw DomainError("zeta: Gamma(s) is below the representable range at this s");
  const cplx v = g.z() / gam.z();
  const double rel = g.err_est / std::max(g.abs(), 1e-300) + gam.err_est / mag;
  return {v.real(), v.imag(), std::abs(v) * rel, g.route};
}

VerificationReport check_theorem1(std::span<const ComplexPoint> grid, const quad::QuadratureSpec& q,
                                  const EtaOracle& eta, double tol, double floor) {
  for (const auto& s : grid)
    if (!s.in_strip())
      throw PreconditionError("check_theorem1: grid point outside 0 < a < 1");

  VerificationReport rep;
  rep.theorem = 1;
  rep.title = "(1 - 2^{1-s}) G(s) = F(s) on the critical strip";
  for (const auto& s : grid) {
    const Params params{{"a", s.a}, {"b", s.b}};
    const cplx f = F(s, q).z();
    const cplx gam = Gamma(s, q).z();
    const cplx factor = eta_factor(s.s());
    const cplx zeta_oracle = eta(s) / factor;
    const cplx rhs = factor * (zeta_oracle * gam);
    const double disc = std::abs(f - rhs);
    const double scale = std::max(std::abs(f), floor);
    CheckCell cell;
    cell.check = "identity";
    cell.params = params;
    cell.lhs = std::abs(f);
    cell.rhs = std::abs(rhs);
    cell.tolerance = tol;
    cell.margin = tol - disc / scale;
    cell.passed = cell.margin > 0.0;
    rep.cells.push_back(std::move(cell));
  }
  return rep;
}

} // namespace fzeta::special
