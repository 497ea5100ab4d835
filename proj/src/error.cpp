#include "upalg/error.hpp"

namespace upalg {

std::string_view errc_name(Errc e) {
  switch (e) {
    case Errc::NonSquareMatrix: return "NonSquareMatrix";
    case Errc::InvalidPoset: return "InvalidPoset";
    case Errc::NotUpClosed: return "NotUpClosed";
    case Errc::SizeLimitExceeded: return "SizeLimitExceeded";
    case Errc::TableOutOfRange: return "TableOutOfRange";
    case Errc::InvalidBase: return "InvalidBase";
    case Errc::InvalidInput: return "InvalidInput";
    case Errc::NotAGroup: return "NotAGroup";
    case Errc::NotAbelian: return "NotAbelian";
    case Errc::KindMismatch: return "KindMismatch";
    case Errc::PosetMismatch: return "PosetMismatch";
    case Errc::BaseMismatch: return "BaseMismatch";
    case Errc::AutomorphismContractViolation: return "AutomorphismContractViolation";
    case Errc::NotABijection: return "NotABijection";
    case Errc::SignatureMismatch: return "SignatureMismatch";
    case Errc::SizeCapExceeded: return "SizeCapExceeded";
    case Errc::UnknownProperty: return "UnknownProperty";
    case Errc::ParameterOutOfRange: return "ParameterOutOfRange";
    case Errc::ParseError: return "ParseError";
  }
  return "Unknown";
}

}  // namespace upalg
