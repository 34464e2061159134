#include "rotor/errors.hpp"

namespace rotor {

const char* err_name(Err e) {
  switch (e) {
    case Err::CenterOnPath: return "CenterOnPath";
    case Err::SegmentTooWide: return "SegmentTooWide";
    case Err::RefinementBudgetExceeded: return "RefinementBudgetExceeded";
    case Err::DiagonalInput: return "DiagonalInput";
    case Err::NotFixed: return "NotFixed";
    case Err::NoRecurrence: return "NoRecurrence";
    case Err::NotFree: return "NotFree";
    case Err::NoReturn: return "NoReturn";
    case Err::NotInteger: return "NotInteger";
    case Err::EmptyInput: return "EmptyInput";
    case Err::NotConstant: return "NotConstant";
    case Err::NotCommuting: return "NotCommuting";
    case Err::InvalidParams: return "InvalidParams";
    case Err::NonFiniteSample: return "NonFiniteSample";
  }
  return "UnknownError";
}

}  // namespace rotor
