#pragma once

#include <stdexcept>
#include <string>

namespace h2plus {

/// Malformed argument (parity mismatch, out-of-range quantum number, bad physical parameter).
class InputError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Operation called outside its domain, e.g. the odd-L solver on an even L.
class ContractError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

/// Angular-momentum selection rule rules out the requested combination.
class SelectionRuleError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// Missing or malformed data file / record.
class DataError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Coefficient fit failed to converge or left residuals above threshold.
class FitError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace h2plus
