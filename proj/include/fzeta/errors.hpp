#pragma once

#include <stdexcept>
#include <string>

namespace fzeta {

// Argument outside an operation's stated domain (t <= 0, R >= pi, ...).
class DomainError : public std::domain_error {
public:
  using std::domain_error::domain_error;
};

// A stated precondition of an operation does not hold (K = 0, bad grid, ...).
class PreconditionError : public std::invalid_argument {
public:
  using std::invalid_argument::invalid_argument;
};

// A numerical procedure stopped before reaching its tolerance. Carries the
// best value it had and its error estimate so callers can still inspect them.
class NonConvergence : public std::runtime_error {
public:
  NonConvergence(const std::string& what, double best, double err_est)
      : std::runtime_error(what), best_(best), err_est_(err_est) {}

  double best() const noexcept { return best_; }
  double err_est() const noexcept { return err_est_; }

private:
  double best_;
  double err_est_;
};

} // namespace fzeta
