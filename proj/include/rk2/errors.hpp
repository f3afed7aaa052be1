#pragma once

#include <stdexcept>
#include <string>

namespace rk2 {

enum class ErrorKind {
  PreconditionViolation,
  IndexZero,
  ScanOverflow,
  NodeBudgetExceeded,
  FormBudgetExceeded,
  BudgetExceeded,
  RegimeMismatch,
  WindowViolation,
  UnsupportedCartan,
};

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what) : std::runtime_error(what), kind_(kind) {}
  ErrorKind kind() const { return kind_; }

  // budget-type failures map to exit 3 in the cli, the rest to exit 2
  bool is_budget() const {
    return kind_ == ErrorKind::NodeBudgetExceeded || kind_ == ErrorKind::FormBudgetExceeded ||
           kind_ == ErrorKind::BudgetExceeded || kind_ == ErrorKind::ScanOverflow;
  }

 private:
  ErrorKind kind_;
};

const char* error_kind_name(ErrorKind k);

}  // namespace rk2
