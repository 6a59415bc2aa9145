#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

namespace fzeta {

using Params = std::vector<std::pair<std::string, double>>;

/// One verified relation at one parameter point.
///
/// `margin` is the slack of the relation: positive means it holds. For strict
/// inequalities lhs > rhs it is lhs - rhs; for tolerance checks it is
/// tolerance - discrepancy. Non-gating cells are informational and never
/// affect the report's verdict.
struct CheckCell {
  std::string check;
  Params params;
  double lhs = 0.0;
  double rhs = 0.0;
  double margin = 0.0;
  double tolerance = 0.0;
  bool passed = false;
  bool gating = true;
  std::string note;
};

struct VerificationReport {
  int theorem = 0;
  std::string title;
  std::vector<CheckCell> cells;

  bool passed() const;
  std::size_t failures() const;
  /// Smallest margin per check name, over gating cells only.
  std::map<std::string, double> min_margin() const;

  void append(const VerificationReport& other);
};

CheckCell strictly_greater(std::string check, Params params, double lhs, double rhs);
CheckCell strictly_less(std::string check, Params params, double lhs, double rhs);
/// |lhs - rhs| < tol.
CheckCell within_abs(std::string check, Params params, double lhs, double rhs, double tol);
/// |lhs - rhs| / max(|lhs|, floor) < tol.
CheckCell within_rel(std::string check, Params params, double lhs, double rhs, double tol,
                     double floor = 0.0);
CheckCell exact_match(std::string check, Params params, bool equal, std::string note = {});
CheckCell informational(CheckCell cell, std::string note);

enum class Format { json, csv, text };

std::string render_json(const std::vector<VerificationReport>& reports);
std::string render_csv(const std::vector<VerificationReport>& reports);
std::string render_text(const std::vector<VerificationReport>& reports);

/// 17 significant digits, the precision every CSV/text output uses.
std::string format_double(double v);

} // namespace fzeta
