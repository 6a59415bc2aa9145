#include "fzeta/fzeta.h"

#include "fzeta/coeffs.hpp"
#include "fzeta/decomposition.hpp"
#include "fzeta/errors.hpp"
#include "fzeta/series.hpp"
#include "fzeta/special.hpp"
#include "fzeta/verify.hpp"
#include "fzeta/zerofinder.hpp"

#include <cmath>
#include <cstdlib>
#include <cstring>
#include <limits>
#include <new>
#include <string>
#include <vector>

using namespace fzeta;

struct fz_coeff_table {
  coeffs::CoefficientTable table;
};

struct fz_report {
  std::vector<VerificationReport> reports;
};

struct fz_decomposition {
  decomp::DecompositionPlan plan;
  std::vector<decomp::IntervalContribution> intervals;
  quad::Integral total;
};

struct fz_zero_search {
  zeros::ZeroSearch search;
};

namespace {

thread_local std::string g_last_error;

fz_status fail(fz_status s, const std::string& msg) {
  g_last_error = msg;
  return s;
}

// Runs body, translating exceptions into status codes.
template <class Body>
fz_status guarded(Body&& body) {
  try {
    g_last_error.clear();
    body();
    return FZ_OK;
  } catch (const DomainError& e) {
    return fail(FZ_ERR_DOMAIN, e.what());
  } catch (const PreconditionError& e) {
    return fail(FZ_ERR_PRECONDITION, e.what());
  } catch (const NonConvergence& e) {
    return fail(FZ_ERR_NONCONVERGENCE, e.what());
  } catch (const std::bad_alloc&) {
    return fail(FZ_ERR_INTERNAL, "out of memory");
  } catch (const std::exception& e) {
    return fail(FZ_ERR_INTERNAL, e.what());
  }
}

quad::QuadratureSpec to_spec(const fz_quad_spec* q) {
  quad::QuadratureSpec s;
  if (q) {
    s.target_tol = q->target_tol;
    s.max_refinement_depth = q->max_refinement_depth;
  }
  return s;
}

char* dup_string(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (!out)
    throw std::bad_alloc();
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

bool to_format(fz_format f, Format& out) {
  switch (f) {
  case FZ_FORMAT_JSON:
    out = Format::json;
    return true;
  case FZ_FORMAT_CSV:
    out = Format::csv;
    return true;
  case FZ_FORMAT_TEXT:
    out = Format::text;
    return true;
  }
  return false;
}

fz_status null_arg(const char* who) {
  return fail(FZ_ERR_INVALID_ARGUMENT, std::string(who) + ": null argument");
}

} // namespace

extern "C" {

const char* fz_version(void) { return "0.1.0"; }

const char* fz_last_error(void) { return g_last_error.c_str(); }

const char* fz_status_name(fz_status status) {
  switch (status) {
  case FZ_OK:
    return "ok";
  case FZ_ERR_INVALID_ARGUMENT:
    return "invalid argument";
  case FZ_ERR_DOMAIN:
    return "domain error";
  case FZ_ERR_PRECONDITION:
    return "precondition violated";
  case FZ_ERR_NONCONVERGENCE:
    return "no convergence";
  case FZ_ERR_INTERNAL:
    return "internal error";
  }
  return "unknown status";
}

void fz_string_free(char* s) { std::free(s); }

void fz_quad_spec_default(fz_quad_spec* q) {
  if (!q)
    return;
  const quad::QuadratureSpec d;
  q->target_tol = d.target_tol;
  q->max_refinement_depth = d.max_refinement_depth;
}

fz_status fz_eval(double a, double b, fz_method method, const fz_quad_spec* q,
                  fz_eval_result* out) {
  if (!out)
    return null_arg("fz_eval");
  return guarded([&] {
    const quad::QuadratureSpec spec = to_spec(q);
    spec.validate();
    const special::ComplexPoint s{a, b};
    fz_eval_result r{};
    r.a = a;
    r.b = b;
    switch (method) {
    case FZ_METHOD_INTEGRAL: {
      const auto f = special::F(s, spec);
      const auto z = special::zeta_strip(s, spec);
      r.F_re = f.re;
      r.F_im = f.im;
      r.zeta_re = z.re;
      r.zeta_im = z.im;
      r.err_est = f.err_est;
      break;
    }
    case FZ_METHOD_ORACLE: {
      const auto eta = zeros::eta_oracle(s);
      const auto gam = special::Gamma(s, spec);
      const auto f = gam.z() * eta.z();
      const auto z = eta.z() / special::eta_factor(s.s());
      r.F_re = f.real();
      r.F_im = f.imag();
      r.zeta_re = z.real();
      r.zeta_im = z.imag();
      r.err_est = std::abs(gam.z()) * eta.err_est + gam.err_est * eta.abs();
      break;
    }
    case FZ_METHOD_SERIES_DECOMPOSITION: {
      const auto plan = decomp::make_plan(a, b, spec);
      const auto lower = series::series_lower_integral(a, b, plan.K, plan.R, 1e-3 * spec.target_tol);
      const auto upper = decomp::upper_integral(plan, spec);
      const double nan = std::numeric_limits<double>::quiet_NaN();
      r.F_re = nan;
      r.F_im = lower.value + upper.value;
      r.zeta_re = nan;
      r.zeta_im = nan;
      r.err_est = lower.tail_bound + upper.err_est;
      break;
    }
    default:
      throw PreconditionError("fz_eval: unknown method");
    }
    *out = r;
  });
}

fz_status fz_F(double a, double b, const fz_quad_spec* q, double* re, double* im, double* err_est) {
  if (!re || !im)
    return null_arg("fz_F");
  return guarded([&] {
    const auto v = special::F({a, b}, to_spec(q));
    *re = v.re;
    *im = v.im;
    if (err_est)
      *err_est = v.err_est;
  });
}

fz_status fz_gamma(double a, double b, const fz_quad_spec* q, double* re, double* im,
                   double* err_est) {
  if (!re || !im)
    return null_arg("fz_gamma");
  return guarded([&] {
    const auto v = special::Gamma({a, b}, to_spec(q));
    *re = v.re;
    *im = v.im;
    if (err_est)
      *err_est = v.err_est;
  });
}

fz_status fz_eta(double a, double b, double tol, double* re, double* im, double* err_est) {
  if (!re || !im)
    return null_arg("fz_eta");
  return guarded([&] {
    const auto v = zeros::eta_oracle({a, b}, tol);
    *re = v.re;
    *im = v.im;
    if (err_est)
      *err_est = v.err_est;
  });
}

fz_status fz_coeff_table_create(int n_max, fz_coeff_table** out) {
  if (!out)
    return null_arg("fz_coeff_table_create");
  *out = nullptr;
  return guarded([&] { *out = new fz_coeff_table{coeffs::make_table(n_max)}; });
}

int fz_coeff_table_max_index(const fz_coeff_table* t) { return t ? t->table.max_index : -1; }

fz_status fz_coeff_table_g_deriv(const fz_coeff_table* t, int n, char** out) {
  if (!t || !out)
    return null_arg("fz_coeff_table_g_deriv");
  if (n < 0 || n > t->table.max_index)
    return fail(FZ_ERR_PRECONDITION, "fz_coeff_table_g_deriv: index out of range");
  return guarded([&] { *out = dup_string(t->table.g_deriv[n].to_string()); });
}

fz_status fz_coeff_table_bernoulli(const fz_coeff_table* t, int n, char** out) {
  if (!t || !out)
    return null_arg("fz_coeff_table_bernoulli");
  if (n < 0 || n > t->table.max_index + 1)
    return fail(FZ_ERR_PRECONDITION, "fz_coeff_table_bernoulli: index out of range");
  return guarded([&] { *out = dup_string(t->table.bernoulli[n].to_string()); });
}

fz_status fz_coeff_table_g_deriv_value(const fz_coeff_table* t, int n, double* out) {
  if (!t || !out)
    return null_arg("fz_coeff_table_g_deriv_value");
  if (n < 0 || n > t->table.max_index)
    return fail(FZ_ERR_PRECONDITION, "fz_coeff_table_g_deriv_value: index out of range");
  return guarded([&] { *out = t->table.g_deriv[n].to_double(); });
}

fz_status fz_coeff_table_render(const fz_coeff_table* t, fz_format format, char** out) {
  if (!t || !out)
    return null_arg("fz_coeff_table_render");
  Format f;
  if (!to_format(format, f))
    return fail(FZ_ERR_INVALID_ARGUMENT, "fz_coeff_table_render: unknown format");
  return guarded([&] { *out = dup_string(coeffs::render_table(t->table, f)); });
}

void fz_coeff_table_destroy(fz_coeff_table* t) { delete t; }

fz_status fz_verify(int theorem, const char* grid, const fz_quad_spec* q, fz_report** out) {
  if (!out)
    return null_arg("fz_verify");
  *out = nullptr;
  return guarded([&] {
    verify::Options opts;
    opts.q = to_spec(q);
    if (grid)
      opts.grids = verify::parse_grid(grid);
    auto r = new fz_report;
    try {
      if (theorem == 0)
        r->reports = verify::run_all(opts);
      else
        r->reports.push_back(verify::run_theorem(theorem, opts));
    } catch (...) {
      delete r;
      throw;
    }
    *out = r;
  });
}

int fz_report_passed(const fz_report* r) {
  if (!r)
    return 0;
  for (const auto& rep : r->reports)
    if (!rep.passed())
      return 0;
  return 1;
}

size_t fz_report_failures(const fz_report* r) {
  size_t n = 0;
  if (r)
    for (const auto& rep : r->reports)
      n += rep.failures();
  return n;
}

fz_status fz_report_render(const fz_report* r, fz_format format, char** out) {
  if (!r || !out)
    return null_arg("fz_report_render");
  Format f;
  if (!to_format(format, f))
    return fail(FZ_ERR_INVALID_ARGUMENT, "fz_report_render: unknown format");
  return guarded([&] {
    switch (f) {
    case Format::json:
      *out = dup_string(render_json(r->reports));
      break;
    case Format::csv:
      *out = dup_string(render_csv(r->reports));
      break;
    case Format::text:
      *out = dup_string(render_text(r->reports));
      break;
    }
  });
}

void fz_report_destroy(fz_report* r) { delete r; }

fz_status fz_decompose(double a, double b, const fz_quad_spec* q, fz_decomposition** out) {
  if (!out)
    return null_arg("fz_decompose");
  *out = nullptr;
  return guarded([&] {
    const auto spec = to_spec(q);
    auto d = new fz_decomposition;
    try {
      d->plan = decomp::make_plan(a, b, spec);
      d->intervals = decomp::interval_contributions(d->plan, spec);
      d->total.value = d->intervals.empty() ? 0.0 : d->intervals.back().cumulative;
      for (const auto& iv : d->intervals)
        d->total.err_est += iv.err_est;
      d->total.err_est +=
          quad::exponential_tail_bound(a, d->plan.endpoint(2 * d->plan.truncation_k + 2));
    } catch (...) {
      delete d;
      throw;
    }
    *out = d;
  });
}

fz_status fz_decomposition_plan(const fz_decomposition* d, fz_plan* out) {
  if (!d || !out)
    return null_arg("fz_decomposition_plan");
  const auto& p = d->plan;
  *out = {p.a, p.b, p.K, p.R, p.c, p.T, p.truncation_k, d->total.value, d->total.err_est};
  return FZ_OK;
}

size_t fz_decomposition_count(const fz_decomposition* d) { return d ? d->intervals.size() : 0; }

fz_status fz_decomposition_interval(const fz_decomposition* d, size_t i, fz_interval* out) {
  if (!d || !out)
    return null_arg("fz_decomposition_interval");
  if (i >= d->intervals.size())
    return fail(FZ_ERR_PRECONDITION, "fz_decomposition_interval: index out of range");
  const auto& iv = d->intervals[i];
  *out = {iv.k, iv.t_lo, iv.t_hi, iv.contribution, iv.err_est, iv.cumulative};
  return FZ_OK;
}

double fz_decomposition_endpoint(const fz_decomposition* d, int64_t j) {
  return d ? d->plan.endpoint(j) : std::numeric_limits<double>::quiet_NaN();
}

void fz_decomposition_destroy(fz_decomposition* d) { delete d; }

fz_status fz_find_zeros(double b_min, double b_max, double step, double zero_tol, fz_method method,
                        const fz_quad_spec* q, fz_zero_search** out) {
  if (!out)
    return null_arg("fz_find_zeros");
  *out = nullptr;
  zeros::ZeroMethod m;
  if (method == FZ_METHOD_INTEGRAL)
    m = zeros::ZeroMethod::integral;
  else if (method == FZ_METHOD_ORACLE)
    m = zeros::ZeroMethod::oracle;
  else
    return fail(FZ_ERR_INVALID_ARGUMENT, "fz_find_zeros: method must be integral or oracle");
  return guarded([&] {
    *out = new fz_zero_search{zeros::find_zeros(b_min, b_max, step, zero_tol, to_spec(q), m)};
  });
}

size_t fz_zero_search_count(const fz_zero_search* z) { return z ? z->search.zeros.size() : 0; }

fz_status fz_zero_search_zero(const fz_zero_search* z, size_t i, fz_zero* out) {
  if (!z || !out)
    return null_arg("fz_zero_search_zero");
  if (i >= z->search.zeros.size())
    return fail(FZ_ERR_PRECONDITION, "fz_zero_search_zero: index out of range");
  const auto& x = z->search.zeros[i];
  *out = {x.b_star, x.residual, x.scaled_residual,
          x.method == zeros::ZeroMethod::integral ? FZ_METHOD_INTEGRAL : FZ_METHOD_ORACLE};
  return FZ_OK;
}

size_t fz_zero_search_sample_count(const fz_zero_search* z) {
  return z ? z->search.scan.size() : 0;
}

fz_status fz_zero_search_sample(const fz_zero_search* z, size_t i, fz_sample* out) {
  if (!z || !out)
    return null_arg("fz_zero_search_sample");
  if (i >= z->search.scan.size())
    return fail(FZ_ERR_PRECONDITION, "fz_zero_search_sample: index out of range");
  const auto& s = z->search.scan[i];
  *out = {s.b, s.re, s.im, s.abs};
  return FZ_OK;
}

void fz_zero_search_destroy(fz_zero_search* z) { delete z; }

} // extern "C"
