#include "fzeta/report.hpp"

#include <json.hpp>

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <sstream>

namespace fzeta {

bool VerificationReport::passed() const { return failures() == 0; }

std::size_t VerificationReport::failures() const {
  return static_cast<std::size_t>(std::count_if(
      cells.begin(), cells.end(), [](const CheckCell& c) { return c.gating && !c.passed; }));
}

std::map<std::string, double> VerificationReport::min_margin() const {
  std::map<std::string, double> out;
  for (const auto& c : cells) {
    if (!c.gating)
      continue;
    auto [it, inserted] = out.try_emplace(c.check, c.margin);
    if (!inserted)
      it->second = std::min(it->second, c.margin);
  }
  return out;
}

void VerificationReport::append(const VerificationReport& other) {
  cells.insert(cells.end(), other.cells.begin(), other.cells.end());
}

CheckCell strictly_greater(std::string check, Params params, double lhs, double rhs) {
  CheckCell c{std::move(check), std::move(params), lhs, rhs, lhs - rhs, 0.0, false, true, {}};
  c.passed = lhs > rhs;
  return c;
}

CheckCell strictly_less(std::string check, Params params, double lhs, double rhs) {
  CheckCell c{std::move(check), std::move(params), lhs, rhs, rhs - lhs, 0.0, false, true, {}};
  c.passed = lhs < rhs;
  return c;
}

CheckCell within_abs(std::string check, Params params, double lhs, double rhs, double tol) {
  const double d = std::abs(lhs - rhs);
  CheckCell c{std::move(check), std::move(params), lhs, rhs, tol - d, tol, false, true, {}};
  c.passed = d < tol; // NaN fails
  return c;
}

CheckCell within_rel(std::string check, Params params, double lhs, double rhs, double tol,
                     double floor) {
  const double scale = std::max(std::abs(lhs), floor);
  const double d = scale > 0.0 ? std::abs(lhs - rhs) / scale : std::abs(lhs - rhs);
  CheckCell c{std::move(check), std::move(params), lhs, rhs, tol - d, tol, false, true, {}};
  c.passed = d < tol;
  return c;
}

CheckCell exact_match(std::string check, Params params, bool equal, std::string note) {
  CheckCell c{std::move(check), std::move(params), 0.0, 0.0, 0.0, 0.0, equal, true,
              std::move(note)};
  c.lhs = equal ? 1.0 : 0.0;
  c.rhs = 1.0;
  return c;
}

CheckCell informational(CheckCell cell, std::string note) {
  cell.gating = false;
  cell.note = std::move(note);
  return cell;
}

std::string format_double(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

namespace {

nlohmann::ordered_json number_or_null(double v) {
  if (std::isfinite(v))
    return v;
  return nullptr;
}

std::string params_text(const Params& params) {
  std::string s;
  for (const auto& [k, v] : params) {
    if (!s.empty())
      s += ' ';
    s += k + '=' + format_double(v);
  }
  return s;
}

} // namespace

std::string render_json(const std::vector<VerificationReport>& reports) {
  using ojson = nlohmann::ordered_json;
  ojson all = ojson::array();
  bool ok = true;
  for (const auto& r : reports) {
    ojson jr;
    jr["theorem"] = r.theorem;
    jr["title"] = r.title;
    jr["passed"] = r.passed();
    jr["failures"] = r.failures();
    ojson mins = ojson::object();
    for (const auto& [k, v] : r.min_margin())
      mins[k] = number_or_null(v);
    jr["min_margin"] = mins;
    ojson cells = ojson::array();
    for (const auto& c : r.cells) {
      ojson jc;
      jc["check"] = c.check;
      ojson p = ojson::object();
      for (const auto& [k, v] : c.params)
        p[k] = number_or_null(v);
      jc["params"] = p;
      jc["lhs"] = number_or_null(c.lhs);
      jc["rhs"] = number_or_null(c.rhs);
      jc["margin"] = number_or_null(c.margin);
      jc["tolerance"] = c.tolerance;
      jc["gating"] = c.gating;
      jc["passed"] = c.passed;
      if (!c.note.empty())
        jc["note"] = c.note;
      cells.push_back(std::move(jc));
    }
    jr["cells"] = std::move(cells);
    ok = ok && r.passed();
    all.push_back(std::move(jr));
  }
  ojson root;
  root["passed"] = ok;
  root["reports"] = std::move(all);
  return root.dump(2) + "\n";
}

std::string render_csv(const std::vector<VerificationReport>& reports) {
  std::ostringstream os;
  os << "theorem,check,params,lhs,rhs,margin,tolerance,gating,passed\n";
  for (const auto& r : reports)
    for (const auto& c : r.cells)
      os << r.theorem << ',' << c.check << ",\"" << params_text(c.params) << "\","
         << format_double(c.lhs) << ',' << format_double(c.rhs) << ','
         << format_double(c.margin) << ',' << format_double(c.tolerance) << ','
         << (c.gating ? 1 : 0) << ',' << (c.passed ? 1 : 0) << '\n';
  return os.str();
}

std::string render_text(const std::vector<VerificationReport>& reports) {
  std::ostringstream os;
  char line[512];
  for (const auto& r : reports) {
    os << "theorem " << r.theorem << ": " << r.title << " -- "
       << (r.passed() ? "PASS" : "FAIL") << " (" << r.cells.size() << " cells, "
       << r.failures() << " failing)\n";
    for (const auto& c : r.cells) {
      std::snprintf(line, sizeof line, "  %-4s %-34s %-40s margin=%-24s%s\n",
                    c.gating ? (c.passed ? "ok" : "FAIL") : "info", c.check.c_str(),
                    params_text(c.params).c_str(), format_double(c.margin).c_str(),
                    c.note.empty() ? "" : ("  # " + c.note).c_str());
      os << line;
    }
    for (const auto& [k, v] : r.min_margin()) {
      std::snprintf(line, sizeof line, "  min margin %-34s %s\n", k.c_str(),
                    format_double(v).c_str());
      os << line;
    }
  }
  return os.str();
}

} // namespace fzeta
