#pragma once

#include <stdexcept>
#include <string>

namespace fairdiv {

enum class ErrorCode {
  BadInput,       // malformed files, invalid generator specs, parse failures
  Precondition,   // an operation was called outside its contract
  Internal,       // a solver-side assertion failed; indicates a bug
  BudgetExceeded, // enumeration budget blown
};

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(what), code_(code) {}
  ErrorCode code() const { return code_; }

 private:
  ErrorCode code_;
};

inline Error bad_input(const std::string& what) { return Error(ErrorCode::BadInput, what); }
inline Error precondition(const std::string& what) { return Error(ErrorCode::Precondition, what); }
inline Error internal_error(const std::string& what) { return Error(ErrorCode::Internal, what); }

// Always-on invariant check; these guard solver bookkeeping that the proofs
// promise but the algorithm text does not enforce. Never compiled out.
inline void require_internal(bool cond, const char* what) {
  if (!cond) throw internal_error(what);
}

}  // namespace fairdiv
