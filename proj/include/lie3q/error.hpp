#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace lie3q {

/// Failure categories reported by the library. Every thrown lie3q::Error
/// carries exactly one of these.
enum class Errc {
  ZeroInput,
  DivisionByZero,
  ParseError,
  BoundExceeded,
  InvalidPlace,
  EvenOrCompositeModulus,
  UnsupportedRank,
  NotLieAlgebra,
  NotSimple,
  NotInvolutiveAutomorphism,
  NotCartanType,
  HypothesisViolated,
  SplitLocally,
  EvenPrime,
  NotObtainable,
  TrivialClass,
  InternalInconsistency,
};

constexpr std::string_view errc_name(Errc e) {
  switch (e) {
    case Errc::ZeroInput: return "ZeroInput";
    case Errc::DivisionByZero: return "DivisionByZero";
    case Errc::ParseError: return "ParseError";
    case Errc::BoundExceeded: return "BoundExceeded";
    case Errc::InvalidPlace: return "InvalidPlace";
    case Errc::EvenOrCompositeModulus: return "EvenOrCompositeModulus";
    case Errc::UnsupportedRank: return "UnsupportedRank";
    case Errc::NotLieAlgebra: return "NotLieAlgebra";
    case Errc::NotSimple: return "NotSimple";
    case Errc::NotInvolutiveAutomorphism: return "NotInvolutiveAutomorphism";
    case Errc::NotCartanType: return "NotCartanType";
    case Errc::HypothesisViolated: return "HypothesisViolated";
    case Errc::SplitLocally: return "SplitLocally";
    case Errc::EvenPrime: return "EvenPrime";
    case Errc::NotObtainable: return "NotObtainable";
    case Errc::TrivialClass: return "TrivialClass";
    case Errc::InternalInconsistency: return "InternalInconsistency";
  }
  return "Unknown";
}

class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what)
      : std::runtime_error(std::string(errc_name(code)) + ": " + what), code_(code) {}

  Errc code() const noexcept { return code_; }

 private:
  Errc code_;
};

}  // namespace lie3q
