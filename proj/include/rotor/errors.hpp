#pragma once
// Error vocabulary shared by the whole library.
//
// Every failure mode an operation can report is one of the codes below; the
// exception carries the code plus a human-readable message.  Callers that
// want to branch on the failure kind should use RotorError::code().

#include <stdexcept>
#include <string>

namespace rotor {

enum class Err {
  CenterOnPath,              // a path vertex coincides with the winding center
  SegmentTooWide,            // a polyline segment subtends >= half a turn
  RefinementBudgetExceeded,  // adaptive refinement hit its segment budget
  DiagonalInput,             // the two points of a pair coincide
  NotFixed,                  // a point required to be fixed moves too much
  NoRecurrence,              // orbit never came back near its start
  NotFree,                   // disk fails the freeness hypothesis
  NoReturn,                  // orbit left the disk and never returned
  NotInteger,                // a value contracted to be an integer is not
  EmptyInput,                // an input collection is empty or degenerate
  NotConstant,               // values required to agree do not
  NotCommuting,              // symmetry candidate fails its commutation check
  InvalidParams,             // parameter values outside the supported range
  NonFiniteSample,           // NaN or infinity showed up in sampled data
};

const char* err_name(Err e);

class RotorError : public std::runtime_error {
 public:
  RotorError(Err code, const std::string& msg)
      : std::runtime_error(std::string(err_name(code)) + ": " + msg),
        code_(code) {}
  Err code() const { return code_; }

 private:
  Err code_;
};

[[noreturn]] inline void fail(Err code, const std::string& msg) {
  throw RotorError(code, msg);
}

}  // namespace rotor
