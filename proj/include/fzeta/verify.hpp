#pragma once

// Theorem checks with their default parameter grids.

#include "fzeta/quadrature.hpp"
#include "fzeta/report.hpp"

#include <map>
#include <string>
#include <vector>

namespace fzeta::verify {

/// Grid overrides by axis name: "a", "b", "t", "k", "R", "m", "n". An absent
/// axis keeps the theorem's default.
using GridOverrides = std::map<std::string, std::vector<double>>;

struct Options {
  quad::QuadratureSpec q;
  GridOverrides grids;
};

/// Parses "a=0.2,0.5;b=10,100". Throws PreconditionError on malformed input.
GridOverrides parse_grid(const std::string& text);

/// Comma-separated numbers.
std::vector<double> parse_list(const std::string& text);

const std::vector<int>& theorems();

/// Throws PreconditionError for an unknown theorem number.
VerificationReport run_theorem(int theorem, const Options& opts);

std::vector<VerificationReport> run_all(const Options& opts);

} // namespace fzeta::verify
