#include "permcycle/error.hpp"

namespace permcycle {

std::string_view error_name(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::NotPrime: return "NotPrime";
    case ErrorCode::NotPrimePower: return "NotPrimePower";
    case ErrorCode::EvenCharacteristic: return "EvenCharacteristic";
    case ErrorCode::ReducibleModulus: return "ReducibleModulus";
    case ErrorCode::BadModulus: return "BadModulus";
    case ErrorCode::FieldTooLarge: return "FieldTooLarge";
    case ErrorCode::FieldMismatch: return "FieldMismatch";
    case ErrorCode::ZeroInverse: return "ZeroInverse";
    case ErrorCode::ZeroOrder: return "ZeroOrder";
    case ErrorCode::ZeroLog: return "ZeroLog";
    case ErrorCode::OrderNotDividing: return "OrderNotDividing";
    case ErrorCode::NegativeExponent: return "NegativeExponent";
    case ErrorCode::SyntaxError: return "SyntaxError";
    case ErrorCode::BadDivisibility: return "BadDivisibility";
    case ErrorCode::OddIndex: return "OddIndex";
    case ErrorCode::EqualUnits: return "EqualUnits";
    case ErrorCode::AllUnitsEqual: return "AllUnitsEqual";
    case ErrorCode::UnitOutsideSubgroup: return "UnitOutsideSubgroup";
    case ErrorCode::BadResidue: return "BadResidue";
    case ErrorCode::IndexNotMultipleOf3: return "IndexNotMultipleOf3";
    case ErrorCode::OrderMismatch: return "OrderMismatch";
    case ErrorCode::BadUnitCount: return "BadUnitCount";
    case ErrorCode::NotAPermutation: return "NotAPermutation";
    case ErrorCode::NotCosetMultiplicative: return "NotCosetMultiplicative";
  }
  return "Unknown";
}

Error::Error(ErrorCode code, const std::string& detail)
    : std::runtime_error(std::string(error_name(code)) + ": " + detail), code_(code) {}

}  // namespace permcycle
