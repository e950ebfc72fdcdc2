#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace permcycle {

enum class ErrorCode {
  NotPrime,
  NotPrimePower,
  EvenCharacteristic,
  ReducibleModulus,
  BadModulus,
  FieldTooLarge,
  FieldMismatch,
  ZeroInverse,
  ZeroOrder,
  ZeroLog,
  OrderNotDividing,
  NegativeExponent,
  SyntaxError,
  BadDivisibility,
  OddIndex,
  EqualUnits,
  AllUnitsEqual,
  UnitOutsideSubgroup,
  BadResidue,
  IndexNotMultipleOf3,
  OrderMismatch,
  BadUnitCount,
  NotAPermutation,
  NotCosetMultiplicative,
};

std::string_view error_name(ErrorCode code) noexcept;

/// Every precondition violation in the library surfaces as this exception.
/// The code is stable and is what the CLI prints on exit status 2.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& detail);

  ErrorCode code() const noexcept { return code_; }
  std::string_view name() const noexcept { return error_name(code_); }

 private:
  ErrorCode code_;
};

}  // namespace permcycle
