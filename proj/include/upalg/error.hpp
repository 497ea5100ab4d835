#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace upalg {

enum class Errc {
  NonSquareMatrix,
  InvalidPoset,
  NotUpClosed,
  SizeLimitExceeded,
  TableOutOfRange,
  InvalidBase,
  InvalidInput,
  NotAGroup,
  NotAbelian,
  KindMismatch,
  PosetMismatch,
  BaseMismatch,
  AutomorphismContractViolation,
  NotABijection,
  SignatureMismatch,
  SizeCapExceeded,
  UnknownProperty,
  ParameterOutOfRange,
  ParseError,
};

std::string_view errc_name(Errc e);

class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what)
      : std::runtime_error(std::string(errc_name(code)) + ": " + what), code_(code) {}
  Errc code() const { return code_; }

 private:
  Errc code_;
};

}  // namespace upalg
