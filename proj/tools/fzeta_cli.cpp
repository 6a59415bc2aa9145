// fzeta: evaluate F and zeta on the critical strip, print coefficient tables,
// run the theorem checks, dump the pairing decomposition and locate zeros.
//
// Exit status: 0 ok, 1 a verification check failed, 2 numerical
// non-convergence, 3 usage error.

#include "fzeta/fzeta.h"

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdio>
#include <fstream>
#include <iostream>
#include <map>
#include <sstream>
#include <string>

namespace {

using json = nlohmann::ordered_json;

constexpr int kExitOk = 0;
constexpr int kExitVerification = 1;
constexpr int kExitNumerical = 2;
constexpr int kExitUsage = 3;

struct Failure {
  int code;
  std::string message;
};

std::string fmt(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

int exit_code(fz_status s) {
  switch (s) {
  case FZ_OK:
    return kExitOk;
  case FZ_ERR_NONCONVERGENCE:
  case FZ_ERR_INTERNAL:
    return kExitNumerical;
  default:
    return kExitUsage;
  }
}

void check(fz_status s) {
  if (s != FZ_OK)
    throw Failure{exit_code(s), std::string(fz_status_name(s)) + ": " + fz_last_error()};
}

// Owns a string handed out by the library.
struct LibString {
  char* p = nullptr;
  ~LibString() { fz_string_free(p); }
};

struct Common {
  double tol = 1e-10;
  std::string format = "json";
  std::string out;
};

fz_format format_of(const Common& c) {
  if (c.format == "csv")
    return FZ_FORMAT_CSV;
  if (c.format == "text")
    return FZ_FORMAT_TEXT;
  return FZ_FORMAT_JSON;
}

fz_quad_spec spec_of(const Common& c) {
  fz_quad_spec q;
  fz_quad_spec_default(&q);
  q.target_tol = c.tol;
  return q;
}

void emit(const Common& c, const std::string& text) {
  if (c.out.empty()) {
    std::cout << text;
    std::cout.flush();
    return;
  }
  std::ofstream f(c.out, std::ios::binary);
  if (!f)
    throw Failure{kExitUsage, "cannot open " + c.out + " for writing"};
  f << text;
}

void add_common(CLI::App* sub, Common& c) {
  sub->add_option("--tol", c.tol, "quadrature target tolerance")->check(CLI::Range(1e-14, 1e-2));
  sub->add_option("--format", c.format, "json, csv or text")
      ->check(CLI::IsMember({"json", "csv", "text"}));
  sub->add_option("--out", c.out, "write output to this file instead of stdout");
}

// ---- eval ---------------------------------------------------------------

struct EvalArgs {
  Common common;
  double a = 0.5;
  double b = 0.0;
  std::string method = "integral";
};

int run_eval(const EvalArgs& e) {
  const std::map<std::string, fz_method> methods{
      {"integral", FZ_METHOD_INTEGRAL},
      {"series+decomposition", FZ_METHOD_SERIES_DECOMPOSITION},
      {"oracle", FZ_METHOD_ORACLE}};
  const fz_quad_spec q = spec_of(e.common);
  fz_eval_result r;
  check(fz_eval(e.a, e.b, methods.at(e.method), &q, &r));
  std::ostringstream os;
  switch (format_of(e.common)) {
  case FZ_FORMAT_JSON: {
    json j;
    j["a"] = r.a;
    j["b"] = r.b;
    j["method"] = e.method;
    j["F_re"] = r.F_re;
    j["F_im"] = r.F_im;
    j["zeta_re"] = r.zeta_re;
    j["zeta_im"] = r.zeta_im;
    j["err_est"] = r.err_est;
    os << j.dump(2) << '\n';
    break;
  }
  case FZ_FORMAT_CSV:
    os << "a,b,method,F_re,F_im,zeta_re,zeta_im,err_est\n"
       << fmt(r.a) << ',' << fmt(r.b) << ',' << e.method << ',' << fmt(r.F_re) << ','
       << fmt(r.F_im) << ',' << fmt(r.zeta_re) << ',' << fmt(r.zeta_im) << ',' << fmt(r.err_est)
       << '\n';
    break;
  case FZ_FORMAT_TEXT:
    os << "s       = " << fmt(r.a) << " + " << fmt(r.b) << "i\n"
       << "F(s)    = " << fmt(r.F_re) << " + " << fmt(r.F_im) << "i\n"
       << "zeta(s) = " << fmt(r.zeta_re) << " + " << fmt(r.zeta_im) << "i\n"
       << "err_est = " << fmt(r.err_est) << '\n';
    break;
  }
  emit(e.common, os.str());
  return kExitOk;
}

// ---- coeffs -------------------------------------------------------------

struct CoeffArgs {
  Common common;
  int n_max = 15;
};

int run_coeffs(const CoeffArgs& c) {
  fz_coeff_table* t = nullptr;
  check(fz_coeff_table_create(c.n_max, &t));
  LibString s;
  const fz_status st = fz_coeff_table_render(t, format_of(c.common), &s.p);
  fz_coeff_table_destroy(t);
  check(st);
  emit(c.common, s.p);
  return kExitOk;
}

// ---- verify -------------------------------------------------------------

struct VerifyArgs {
  Common common;
  int theorem = 0;
  bool all = false;
  std::string grid;
  std::string a_grid;
  std::string b_grid;
};

int run_verify(const VerifyArgs& v) {
  if (v.all == (v.theorem != 0))
    throw Failure{kExitUsage, "give exactly one of --theorem N or --all"};
  std::string grid = v.grid;
  if (!v.a_grid.empty())
    grid += (grid.empty() ? "" : ";") + std::string("a=") + v.a_grid;
  if (!v.b_grid.empty())
    grid += (grid.empty() ? "" : ";") + std::string("b=") + v.b_grid;
  const fz_quad_spec q = spec_of(v.common);
  fz_report* r = nullptr;
  check(fz_verify(v.all ? 0 : v.theorem, grid.empty() ? nullptr : grid.c_str(), &q, &r));
  LibString s;
  const fz_status st = fz_report_render(r, format_of(v.common), &s.p);
  const bool passed = fz_report_passed(r) != 0;
  const size_t failures = fz_report_failures(r);
  fz_report_destroy(r);
  check(st);
  emit(v.common, s.p);
  if (!passed) {
    std::cerr << "fzeta: " << failures << " check(s) failed\n";
    return kExitVerification;
  }
  return kExitOk;
}

// ---- decompose ----------------------------------------------------------

struct DecomposeArgs {
  Common common;
  double a = 0.5;
  double b = 100.0;
};

int run_decompose(const DecomposeArgs& d) {
  const fz_quad_spec q = spec_of(d.common);
  fz_decomposition* dec = nullptr;
  check(fz_decompose(d.a, d.b, &q, &dec));
  fz_plan plan;
  fz_decomposition_plan(dec, &plan);
  std::vector<fz_interval> rows(fz_decomposition_count(dec));
  for (size_t i = 0; i < rows.size(); ++i)
    fz_decomposition_interval(dec, i, &rows[i]);
  std::vector<double> ends;
  for (int64_t j = 0; j < 10; ++j)
    ends.push_back(fz_decomposition_endpoint(dec, 2 * plan.K + j));
  fz_decomposition_destroy(dec);

  std::ostringstream os;
  switch (format_of(d.common)) {
  case FZ_FORMAT_JSON: {
    json j;
    json p;
    p["a"] = plan.a;
    p["b"] = plan.b;
    p["K"] = plan.K;
    p["R"] = plan.R;
    p["c"] = plan.c;
    p["T"] = plan.T;
    p["truncation_k"] = plan.truncation_k;
    p["endpoints"] = ends;
    j["plan"] = p;
    j["upper_integral"] = plan.upper_integral;
    j["err_est"] = plan.err_est;
    json arr = json::array();
    for (const auto& r : rows) {
      json x;
      x["k"] = r.k;
      x["t_2k"] = r.t_lo;
      x["t_2k+1"] = r.t_hi;
      x["contribution"] = r.contribution;
      x["cumulative"] = r.cumulative;
      arr.push_back(x);
    }
    j["intervals"] = arr;
    os << j.dump(2) << '\n';
    break;
  }
  case FZ_FORMAT_CSV:
    os << "# a=" << fmt(plan.a) << " b=" << fmt(plan.b) << " K=" << plan.K
       << " R=" << fmt(plan.R) << " c=" << fmt(plan.c) << " truncation_k=" << plan.truncation_k
       << '\n';
    os << "k,t_2k,t_2k+1,contribution,cumulative\n";
    for (const auto& r : rows)
      os << r.k << ',' << fmt(r.t_lo) << ',' << fmt(r.t_hi) << ',' << fmt(r.contribution) << ','
         << fmt(r.cumulative) << '\n';
    break;
  case FZ_FORMAT_TEXT:
    os << "K = " << plan.K << ", R = " << fmt(plan.R) << ", c = " << fmt(plan.c)
       << ", truncation_k = " << plan.truncation_k << '\n';
    os << "endpoints from t_2K:";
    for (double t : ends)
      os << ' ' << fmt(t);
    os << '\n' << "upper integral = " << fmt(plan.upper_integral)
       << " (err_est " << fmt(plan.err_est) << ")\n";
    break;
  }
  emit(d.common, os.str());
  return kExitOk;
}

// ---- zeros --------------------------------------------------------------

struct ZerosArgs {
  Common common;
  double b_min = 10.0;
  double b_max = 30.0;
  double step = 0.25;
  double zero_tol = 1e-6;
  std::string method = "integral";
  std::string scan_out;
};

int run_zeros(const ZerosArgs& z) {
  const fz_quad_spec q = spec_of(z.common);
  const fz_method m = z.method == "oracle" ? FZ_METHOD_ORACLE : FZ_METHOD_INTEGRAL;
  fz_zero_search* s = nullptr;
  check(fz_find_zeros(z.b_min, z.b_max, z.step, z.zero_tol, m, &q, &s));
  std::vector<fz_zero> found(fz_zero_search_count(s));
  for (size_t i = 0; i < found.size(); ++i)
    fz_zero_search_zero(s, i, &found[i]);
  std::vector<fz_sample> scan(fz_zero_search_sample_count(s));
  for (size_t i = 0; i < scan.size(); ++i)
    fz_zero_search_sample(s, i, &scan[i]);
  fz_zero_search_destroy(s);

  std::ostringstream csv;
  csv << "b,F1,F2,absF\n";
  for (const auto& p : scan)
    csv << fmt(p.b) << ',' << fmt(p.re) << ',' << fmt(p.im) << ',' << fmt(p.abs) << '\n';
  if (!z.scan_out.empty()) {
    std::ofstream f(z.scan_out, std::ios::binary);
    if (!f)
      throw Failure{kExitUsage, "cannot open " + z.scan_out + " for writing"};
    f << csv.str();
  }

  std::ostringstream os;
  switch (format_of(z.common)) {
  case FZ_FORMAT_JSON: {
    json arr = json::array();
    for (const auto& x : found) {
      json j;
      j["b_star"] = x.b_star;
      j["residual"] = x.residual;
      j["scaled_residual"] = x.scaled_residual;
      j["method"] = z.method;
      arr.push_back(j);
    }
    os << arr.dump(2) << '\n';
    break;
  }
  case FZ_FORMAT_CSV:
    os << csv.str();
    break;
  case FZ_FORMAT_TEXT:
    for (const auto& x : found)
      os << "b* = " << fmt(x.b_star) << "  |F| = " << fmt(x.residual)
         << "  |F|/|Gamma| = " << fmt(x.scaled_residual) << '\n';
    break;
  }
  emit(z.common, os.str());
  return kExitOk;
}

} // namespace

int main(int argc, char** argv) {
  CLI::App app{"F(s), zeta(s) on the critical strip and the checks built on them"};
  app.require_subcommand(1);
  app.set_version_flag("--version", fz_version());

  EvalArgs eval;
  auto* s_eval = app.add_subcommand("eval", "F(s) and zeta(s) at s = a + ib");
  s_eval->add_option("--a", eval.a, "real part")->required();
  s_eval->add_option("--b", eval.b, "imaginary part")->required();
  s_eval->add_option("--method", eval.method, "integral, series+decomposition or oracle")
      ->check(CLI::IsMember({"integral", "series+decomposition", "oracle"}));
  add_common(s_eval, eval.common);

  CoeffArgs coeffs;
  auto* s_coeffs = app.add_subcommand("coeffs", "exact g^(n)(0) and Bernoulli numbers");
  s_coeffs->add_option("--n-max", coeffs.n_max, "largest n (0..40)")->check(CLI::Range(0, 40));
  add_common(s_coeffs, coeffs.common);

  VerifyArgs verify;
  auto* s_verify = app.add_subcommand("verify", "run theorem checks");
  s_verify->add_option("--theorem", verify.theorem, "theorem number 1..10")->check(CLI::Range(1, 10));
  s_verify->add_flag("--all", verify.all, "run every check");
  s_verify->add_option("--grid", verify.grid, "grid overrides, e.g. \"a=0.2,0.5;b=100\"");
  s_verify->add_option("--a-grid", verify.a_grid, "comma-separated a values");
  s_verify->add_option("--b-grid", verify.b_grid, "comma-separated b values");
  add_common(s_verify, verify.common);

  DecomposeArgs decompose;
  auto* s_dec = app.add_subcommand("decompose", "pairing decomposition of the upper integral");
  s_dec->add_option("--a", decompose.a, "exponent a in (0, 1)")->required();
  s_dec->add_option("--b", decompose.b, "frequency b >= 100")->required();
  add_common(s_dec, decompose.common);
  decompose.common.format = "csv";

  ZerosArgs zeros;
  auto* s_zeros = app.add_subcommand("zeros", "zeros of zeta on the critical line");
  s_zeros->add_option("--b-min", zeros.b_min, "start of the scan");
  s_zeros->add_option("--b-max", zeros.b_max, "end of the scan");
  s_zeros->add_option("--step", zeros.step, "scan step (<= 0.5)");
  s_zeros->add_option("--zero-tol", zeros.zero_tol, "residual tolerance on |F|/|Gamma|");
  s_zeros->add_option("--method", zeros.method, "integral or oracle")
      ->check(CLI::IsMember({"integral", "oracle"}));
  s_zeros->add_option("--scan-out", zeros.scan_out, "write the scan (b, F1, F2, absF) as CSV");
  add_common(s_zeros, zeros.common);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    if (s_eval->parsed())
      return run_eval(eval);
    if (s_coeffs->parsed())
      return run_coeffs(coeffs);
    if (s_verify->parsed())
      return run_verify(verify);
    if (s_dec->parsed())
      return run_decompose(decompose);
    if (s_zeros->parsed())
      return run_zeros(zeros);
  } catch (const Failure& f) {
    std::cerr << "fzeta: " << f.message << '\n';
    return f.code;
  } catch (const std::exception& e) {
    std::cerr << "fzeta: " << e.what() << '\n';
    return kExitNumerical;
  }
  return kExitUsage;
}
