#include "fzeta/verify.hpp"

#include "fzeta/coeffs.hpp"
#include "fzeta/decomposition.hpp"
#include "fzeta/errors.hpp"
#include "fzeta/series.hpp"
#include "fzeta/special.hpp"
#include "fzeta/zerofinder.hpp"

#include <cmath>
#include <cstdlib>
#include <sstream>

namespace fzeta::verify {

namespace {

std::vector<double> axis(const Options& o, const std::string& name, std::vector<double> fallback) {
  const auto it = o.grids.find(name);
  return it == o.grids.end() ? fallback : it->second;
}

std::vector<std::int64_t> integers(const std::vector<double>& v, const char* name) {
  std::vector<std::int64_t> out;
  for (double x : v) {
    if (x != std::floor(x) || x < 0.0)
      throw PreconditionError(std::string("grid axis ") + name + " needs non-negative integers");
    out.push_back(static_cast<std::int64_t>(x));
  }
  return out;
}

unsigned single_integer(const Options& o, const char* name, unsigned fallback) {
  const auto v = integers(axis(o, name, {double(fallback)}), name);
  if (v.size() != 1)
    throw PreconditionError(std::string("grid axis ") + name + " takes one value");
  return static_cast<unsigned>(v.front());
}

} // namespace

std::vector<double> parse_list(const std::string& text) {
  std::vector<double> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    const auto first = item.find_first_not_of(" \t");
    if (first == std::string::npos)
      throw PreconditionError("empty entry in list '" + text + "'");
    const char* begin = item.c_str() + first;
    char* end = nullptr;
    const double v = std::strtod(begin, &end);
    while (end && (*end == ' ' || *end == '\t'))
      ++end;
    if (end == begin || *end != '\0' || !std::isfinite(v))
      throw PreconditionError("not a number: '" + item + "'");
    out.push_back(v);
  }
  if (out.empty())
    throw PreconditionError("empty list");
  return out;
}

GridOverrides parse_grid(const std::string& text) {
  GridOverrides out;
  std::stringstream ss(text);
  std::string part;
  while (std::getline(ss, part, ';')) {
    if (part.find_first_not_of(" \t") == std::string::npos)
      continue;
    const auto eq = part.find('=');
    if (eq == std::string::npos)
      throw PreconditionError("grid entry '" + part + "' is not axis=values");
    std::string name = part.substr(0, eq);
    name.erase(0, name.find_first_not_of(" \t"));
    name.erase(name.find_last_not_of(" \t") + 1);
    static const char* known[] = {"a", "b", "t", "k", "R", "m", "n"};
    bool ok = false;
    for (const char* k : known)
      ok = ok || name == k;
    if (!ok)
      throw PreconditionError("unknown grid axis '" + name + "'");
    out[name] = parse_list(part.substr(eq + 1));
  }
  return out;
}

const std::vector<int>& theorems() {
  static const std::vector<int> all{1, 2, 3, 4, 5, 6, 7, 8, 9, 10};
  return all;
}

VerificationReport run_theorem(int theorem, const Options& o) {
  o.q.validate();
  switch (theorem) {
  case 1: {
    const auto as = axis(o, "a", {0.2, 0.5, 0.8});
    const auto bs = axis(o, "b", {5.0, 10.0, 14.1347, 50.0, 100.0});
    std::vector<special::ComplexPoint> grid;
    for (double a : as)
      for (double b : bs)
        grid.push_back({a, b});
    const special::EtaOracle eta = [](special::ComplexPoint s) {
      return zeros::eta_oracle(s).z();
    };
    return special::check_theorem1(grid, o.q, eta);
  }
  case 2:
    return series::check_theorem2(axis(o, "a", {0.1, 0.5, 0.9}), axis(o, "b", {100.0, 316.0, 1000.0}),
                                  o.q);
  case 3:
    return coeffs::check_theorem3(static_cast<int>(single_integer(o, "n", coeffs::kMaxTableIndex)));
  case 4:
    return coeffs::check_theorem4(single_integer(o, "m", 10), 1e-12);
  case 5:
    return series::check_theorem5(axis(o, "a", {0.01, 0.05, 0.1}), axis(o, "b", {100.0, 300.0, 1000.0}));
  case 6:
    return decomp::check_theorem6(axis(o, "a", {0.2, 0.5}), axis(o, "b", {100.0, 1000.0}), o.q);
  case 7:
    return decomp::check_theorem7(axis(o, "a", {0.2, 0.5, 0.731}),
                                  axis(o, "b", {100.0, 1000.0, 10000.0}), axis(o, "R", {1.0, 2.0}),
                                  o.q);
  case 8: {
    const auto override_b = o.grids.find("b");
    const std::vector<double> bounds = override_b != o.grids.end()
                                           ? override_b->second
                                           : std::vector<double>{10.0, 31.6, 100.0, 316.0, 1000.0};
    const std::vector<double> quad_b = axis(o, "b", {10.0, 100.0, 1000.0});
    const auto ks = integers(axis(o, "k", {0.0, 5.0, 50.0}), "k");
    return decomp::check_theorem8(bounds, quad_b, ks, o.q);
  }
  case 9: {
    std::vector<decomp::SandwichPoint> pts;
    const auto as = axis(o, "a", {0.2, 0.5});
    const auto bs = axis(o, "b", {100.0, 1000.0});
    const auto kit = o.grids.find("k");
    for (double b : bs) {
      std::vector<std::int64_t> ks;
      if (kit != o.grids.end()) {
        ks = integers(kit->second, "k");
      } else {
        const auto K = series::choose_K_R(b, 2.0).K;
        ks = {K, K + 10};
      }
      for (double a : as)
        for (auto k : ks)
          pts.push_back({a, b, k, decomp::Weight::pairing});
      pts.push_back({0.0, b, ks.front(), decomp::Weight::unit});
    }
    if (o.grids.empty())
      pts.push_back({0.7, 1000.0, 200, decomp::Weight::pairing});
    return decomp::check_theorem9(pts, o.q);
  }
  case 10:
    return decomp::check_theorem10(axis(o, "t", {1.0, 1.5, 2.0, 4.0, 8.0, 16.0, 32.0}),
                                   axis(o, "a", {0.01, 0.1, 0.3, 0.5, 0.731}),
                                   axis(o, "b", {1.0, 10.0, 100.0, 1000.0}));
  default:
    throw PreconditionError("no check for theorem " + std::to_string(theorem));
  }
}

std::vector<VerificationReport> run_all(const Options& opts) {
  std::vector<VerificationReport> out;
  for (int t : theorems())
    out.push_back(run_theorem(t, opts));
  return out;
}

} // namespace fzeta::verify
