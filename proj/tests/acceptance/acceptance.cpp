// Acceptance run: one line per criterion, exit status 0 only if all pass.

#include "../oracles.hpp"

#include "fzeta/fzeta.h"

#include <json.hpp>

#include <array>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <iostream>
#include <string>
#include <sys/wait.h>
#include <vector>

namespace {

using json = nlohmann::json;
using Clock = std::chrono::steady_clock;

struct Outcome {
  bool pass = false;
  std::string detail;
};

struct Run {
  int status = -1;
  std::string out;
};

Run cli(const std::string& args) {
  const std::string cmd = std::string(FZETA_CLI) + " " + args;
  Run r;
  FILE* p = popen(cmd.c_str(), "r");
  if (!p)
    return r;
  std::array<char, 65536> buf;
  size_t n;
  while ((n = fread(buf.data(), 1, buf.size(), p)) > 0)
    r.out.append(buf.data(), n);
  const int st = pclose(p);
  r.status = WIFEXITED(st) ? WEXITSTATUS(st) : -1;
  return r;
}

std::string sci(double v) {
  char b[32];
  std::snprintf(b, sizeof b, "%.3g", v);
  return b;
}

// Runs a library check and returns its verdict and worst gating margin.
Outcome verify(int theorem, const char* grid, double tol = 1e-10) {
  fz_quad_spec q;
  fz_quad_spec_default(&q);
  q.target_tol = tol;
  fz_report* r = nullptr;
  if (fz_verify(theorem, grid, &q, &r) != FZ_OK)
    return {false, std::string("error: ") + fz_last_error()};
  char* s = nullptr;
  fz_report_render(r, FZ_FORMAT_JSON, &s);
  const json j = json::parse(s);
  fz_string_free(s);
  Outcome o{fz_report_passed(r) == 1, ""};
  for (auto it = j["reports"][0]["min_margin"].begin(); it != j["reports"][0]["min_margin"].end(); ++it)
    o.detail += (o.detail.empty() ? "" : ", ") + it.key() + " " + sci(it.value().get<double>());
  o.detail += "; " + std::to_string(fz_report_failures(r)) + " failing";
  fz_report_destroy(r);
  return o;
}

Outcome combine(const Outcome& a, const Outcome& b) {
  return {a.pass && b.pass, a.detail + " | " + b.detail};
}

double seconds_since(Clock::time_point t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

// 1. exact rational table for n <= 15
Outcome criterion_table() {
  const Run r = cli("coeffs --n-max 15 --format json");
  if (r.status != 0)
    return {false, "coeffs exited with " + std::to_string(r.status)};
  const json j = json::parse(r.out);
  int matched = 0, zeros = 0;
  bool ok = true;
  for (const auto& e : oracle::appendix()) {
    const std::string got = j["coefficients"][e.n]["g_deriv"];
    if (got == e.value)
      ++matched;
    else
      ok = false;
  }
  for (int n = 2; n <= 15; n += 2) {
    if (j["coefficients"][n]["g_deriv"] == "0")
      ++zeros;
    else
      ok = false;
  }
  return {ok && matched == 9, std::to_string(matched) + "/9 printed values exact, " +
                                  std::to_string(zeros) + "/7 even entries zero"};
}

// 2. F against (1 - 2^{1-s}) Gamma eta on the strip grid
Outcome criterion_identity() {
  const auto t0 = Clock::now();
  Outcome lib = verify(1, nullptr);
  // second, library-independent right-hand side
  double worst = 0.0;
  for (double a : {0.2, 0.5, 0.8})
    for (double b : {5.0, 10.0, 14.1347, 50.0, 100.0}) {
      double re, im;
      if (fz_F(a, b, nullptr, &re, &im, nullptr) != FZ_OK)
        return {false, fz_last_error()};
      const std::complex<double> f(re, im);
      const std::complex<double> rhs = oracle::F({a, b});
      worst = std::max(worst, std::abs(f - rhs) / std::max(std::abs(f), 1e-9));
    }
  const double dt = seconds_since(t0);
  Outcome ind{worst < 1e-7 && dt < 30.0,
              "independent zeta/Gamma oracle: max rel " + sci(worst) + ", " + sci(dt) + " s"};
  return combine(lib, ind);
}

Outcome timed(const std::function<Outcome()>& f, double limit) {
  const auto t0 = Clock::now();
  Outcome o = f();
  const double dt = seconds_since(t0);
  o.pass = o.pass && dt < limit;
  o.detail += ", " + sci(dt) + " s";
  return o;
}

// 4. sign structure and the ratio constant
Outcome criterion_coefficients() {
  Outcome o = verify(4, nullptr);
  const long double p = oracle::kPi;
  const long double c = (255.0L / 256.0L) * (std::pow(p, 8) / 9450.0L) /
                        ((1023.0L / 1024.0L) * (std::pow(p, 10) / 93555.0L));
  const bool ok = c > 1.0L && c < 1.00013814L;
  o.pass = o.pass && ok;
  o.detail += " | ratio constant " + std::to_string(static_cast<double>(c)) + ", below bound by " +
              sci(static_cast<double>(1.00013814L - c));
  return o;
}

// 5. lower bound gating, alternative form informational
Outcome criterion_lower_bound() {
  Outcome o = verify(5, "a=0.01,0.05,0.1;b=100,300,1000");
  fz_report* r = nullptr;
  fz_verify(5, "a=0.01,0.05,0.1;b=100,300,1000", nullptr, &r);
  char* s = nullptr;
  fz_report_render(r, FZ_FORMAT_JSON, &s);
  const json j = json::parse(s);
  fz_string_free(s);
  fz_report_destroy(r);
  int alt = 0, alt_holds = 0;
  for (const auto& c : j["reports"][0]["cells"])
    if (c["check"] == "lower_bound_alternative_form") {
      ++alt;
      alt_holds += c["passed"].get<bool>();
      if (c["gating"].get<bool>())
        o.pass = false;
    }
  o.detail += " | alternative form holds at " + std::to_string(alt_holds) + "/" +
              std::to_string(alt) + " points (not gating)";
  o.pass = o.pass && alt == 9;
  return o;
}

// 9. zeros through the CLI, both paths
Outcome criterion_zeros() {
  const auto t0 = Clock::now();
  const Run a = cli("zeros --b-min 10 --b-max 30 --step 0.25 --method integral");
  const Run b = cli("zeros --b-min 10 --b-max 30 --step 0.25 --method oracle");
  const double dt = seconds_since(t0);
  if (a.status != 0 || b.status != 0)
    return {false, "zeros exited with " + std::to_string(a.status) + "/" + std::to_string(b.status)};
  const json ja = json::parse(a.out);
  const json jb = json::parse(b.out);
  bool ok = ja.size() == 3 && jb.size() == 3;
  std::string detail = std::to_string(ja.size()) + " zeros (integral), " + std::to_string(jb.size()) +
                       " (oracle):";
  for (std::size_t i = 0; ok && i < 3; ++i) {
    const double x = ja[i]["b_star"], y = jb[i]["b_star"], res = ja[i]["residual"];
    ok = ok && std::abs(x - y) < 1e-5 && res < 1e-6;
    char buf[96];
    std::snprintf(buf, sizeof buf, " %.9f (|dx| %s, |F| %s)", x, sci(std::abs(x - y)).c_str(),
                  sci(res).c_str());
    detail += buf;
  }
  return {ok && dt < 60.0, detail + ", " + sci(dt) + " s"};
}

// 10. two runs of verify --all byte-identical
Outcome criterion_determinism() {
  const auto t0 = Clock::now();
  const Run a = cli("verify --all --format json");
  const Run b = cli("verify --all --format json");
  const double dt = seconds_since(t0);
  const bool same = a.out == b.out && !a.out.empty();
  return {same && a.status == 0 && b.status == 0,
          std::string(same ? "identical" : "different") + " (" + std::to_string(a.out.size()) +
              " bytes, exit " + std::to_string(a.status) + "/" + std::to_string(b.status) + "), " +
              sci(dt) + " s for both"};
}

} // namespace

int main() {
  struct Criterion {
    const char* name;
    std::function<Outcome()> run;
  };
  const std::vector<Criterion> all{
      {"exact table of g^(n)(0), n <= 15", criterion_table},
      {"F = (1 - 2^{1-s}) Gamma eta on the strip grid", criterion_identity},
      {"series = quadrature for the lower integral",
       [] { return timed([] { return verify(2, "a=0.1,0.5,0.9;b=100,316,1000"); }, 20.0); }},
      {"sign structure and ratio constant", criterion_coefficients},
      {"lower bound on the series", criterion_lower_bound},
      {"pairing sum and telescoped bounds", [] {
         return combine(verify(6, "a=0.5;b=100,1000"),
                        verify(7, "a=0.2,0.5,0.731;b=100,1000;R=1,2"));
       }},
      {"sine average closed form and bounds", [] { return verify(8, nullptr); }},
      {"sandwich and positivity of h", [] {
         return combine(verify(9, "a=0.2,0.5;b=100,1000"), verify(10, nullptr));
       }},
      {"zeros on [10, 30]", criterion_zeros},
      {"determinism of verify --all", criterion_determinism},
  };
  int failed = 0;
  for (std::size_t i = 0; i < all.size(); ++i) {
    Outcome o;
    try {
      o = all[i].run();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    failed += !o.pass;
    std::cout << (o.pass ? "PASS" : "FAIL") << "  criterion " << (i + 1) << ": " << all[i].name
              << " -- " << o.detail << std::endl;
  }
  std::cout << (failed == 0 ? "all criteria pass" : std::to_string(failed) + " criteria fail")
            << std::endl;
  return failed == 0 ? 0 : 1;
}
