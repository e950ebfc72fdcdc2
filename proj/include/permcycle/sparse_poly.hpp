#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "permcycle/field.hpp"

namespace permcycle {

struct Term {
  std::uint64_t exponent;
  Encoding coefficient;

  friend bool operator==(const Term&, const Term&) = default;
};

/// A polynomial over F_q kept as a sorted list of nonzero terms with
/// strictly decreasing exponents. Exponents are never reduced mod q - 1,
/// so x^(q+1)/2 stays x^(q+1)/2.
class SparsePolynomial {
 public:
  explicit SparsePolynomial(Field field) : field_(std::move(field)) {}

  /// Merges duplicate exponents, drops zero coefficients, sorts descending.
  static SparsePolynomial canonicalize(const Field& field,
                                       const std::vector<std::pair<std::int64_t, FieldElement>>& raw);
  static SparsePolynomial canonicalize(const Field& field, std::vector<Term> raw);

  /// Grammar: terms joined by '+' (or '-'); term = [coeff ['*']] 'x' ['^' exp]
  /// or a bare coefficient; coeff in element text format; whitespace ignored.
  static SparsePolynomial parse(const Field& field, std::string_view text);

  const Field& field() const noexcept { return field_; }
  const std::vector<Term>& terms() const noexcept { return terms_; }
  std::size_t term_count() const noexcept { return terms_.size(); }
  bool is_zero() const noexcept { return terms_.empty(); }
  std::uint64_t degree() const noexcept { return terms_.empty() ? 0 : terms_.front().exponent; }

  Encoding evaluate(Encoding x) const noexcept;
  FieldElement evaluate(const FieldElement& x) const;

  std::string format() const;

  friend bool operator==(const SparsePolynomial& a, const SparsePolynomial& b) noexcept {
    return a.field_ == b.field_ && a.terms_ == b.terms_;
  }

 private:
  Field field_;
  std::vector<Term> terms_;
};

}  // namespace permcycle
