#pragma once

// Exact arithmetic in F_q, q = p^k odd.
//
// Elements are identified with the integer encoding sum(c_i * p^i) of their
// coefficient vector over F_p (least degree first). The encoding doubles as
// the canonical total order used for generators, unit pools and every
// enumeration, so results are reproducible without external tables.

#include <array>
#include <compare>
#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "permcycle/error.hpp"
#include "permcycle/number_theory.hpp"

namespace permcycle {

using Encoding = std::uint64_t;

inline constexpr unsigned kMaxDegree = 20;
inline constexpr std::uint64_t kMaxOrder = 0xFFFFFFFFull;

class FieldElement;

namespace detail {

struct FieldData {
  std::uint64_t p = 0;
  unsigned k = 0;
  std::uint64_t q = 0;
  // Monic, k + 1 coefficients, least degree first. Empty when k == 1.
  std::vector<std::uint64_t> modulus;
  std::vector<PrimePower> q_minus_1_factors;
  Encoding generator = 0;
  std::uint64_t barrett = 0;  // floor(2^64 / p)
  std::array<std::uint64_t, kMaxDegree + 1> p_pow{};
};

}  // namespace detail

/// A finite field of odd order. Cheap to copy; all copies share one
/// immutable description.
class Field {
 public:
  static Field prime(std::uint64_t p);
  /// k >= 2. Without a modulus, the monic irreducible of degree k whose
  /// lower coefficients have the smallest encoding is chosen. A supplied
  /// modulus may list k lower coefficients (monic implied) or all k + 1.
  static Field extension(std::uint64_t p, unsigned k,
                         std::optional<std::vector<std::uint64_t>> modulus = std::nullopt);
  /// Decomposes q = p^k and builds the default field of that order.
  static Field of_order(std::uint64_t q);

  std::uint64_t p() const noexcept { return data_->p; }
  unsigned k() const noexcept { return data_->k; }
  std::uint64_t q() const noexcept { return data_->q; }
  const std::vector<std::uint64_t>& modulus() const noexcept { return data_->modulus; }
  std::string modulus_text() const;
  const std::vector<PrimePower>& q_minus_1_factors() const noexcept {
    return data_->q_minus_1_factors;
  }
  Encoding generator_encoding() const noexcept { return data_->generator; }
  FieldElement generator() const;

  FieldElement element(Encoding e) const;
  FieldElement from_integer(std::int64_t n) const;
  FieldElement from_coefficients(std::span<const std::uint64_t> coeffs) const;
  FieldElement zero() const;
  FieldElement one() const;

  /// Element text: decimal residue, "a0,a1,..." coefficient list,
  /// "enc:N" raw encoding, or "g^E" power of the canonical generator.
  FieldElement parse_element(std::string_view text) const;
  std::string format_element(Encoding e) const;

  std::vector<std::uint64_t> coefficients(Encoding e) const;
  Encoding encode(std::span<const std::uint64_t> coeffs) const;

  // Raw arithmetic on encodings; callers guarantee operands are < q.
  Encoding add(Encoding a, Encoding b) const noexcept {
    if (data_->k == 1) {
      const Encoding s = a + b;
      return s >= data_->p ? s - data_->p : s;
    }
    return add_ext(a, b, false);
  }
  Encoding sub(Encoding a, Encoding b) const noexcept {
    if (data_->k == 1) return a >= b ? a - b : a + data_->p - b;
    return add_ext(a, b, true);
  }
  Encoding neg(Encoding a) const noexcept { return sub(0, a); }
  Encoding mul(Encoding a, Encoding b) const noexcept {
    if (data_->k == 1) return reduce(a * b);
    return mul_ext(a, b);
  }
  Encoding pow(Encoding a, std::uint64_t n) const noexcept;
  /// a must be nonzero.
  Encoding inv(Encoding a) const noexcept { return pow(a, data_->q - 2); }
  /// Multiplicative order of a nonzero element by stripping prime factors
  /// from q - 1.
  std::uint64_t order(Encoding a) const noexcept;

  bool same_as(const Field& other) const noexcept;
  friend bool operator==(const Field& a, const Field& b) noexcept { return a.same_as(b); }

 private:
  explicit Field(std::shared_ptr<const detail::FieldData> data) : data_(std::move(data)) {}
  static Field finish(detail::FieldData data);

  std::uint64_t reduce(std::uint64_t x) const noexcept {
    const auto hi = static_cast<std::uint64_t>(
        (static_cast<unsigned __int128>(x) * data_->barrett) >> 64);
    std::uint64_t r = x - hi * data_->p;
    return r >= data_->p ? r - data_->p : r;
  }
  Encoding add_ext(Encoding a, Encoding b, bool subtract) const noexcept;
  Encoding mul_ext(Encoding a, Encoding b) const noexcept;

  std::shared_ptr<const detail::FieldData> data_;
};

/// An element bound to its field. Mixed-field arithmetic throws
/// FieldMismatch.
class FieldElement {
 public:
  FieldElement(Field field, Encoding encoding);

  const Field& field() const noexcept { return field_; }
  Encoding encoding() const noexcept { return encoding_; }
  std::vector<std::uint64_t> coefficients() const { return field_.coefficients(encoding_); }
  bool is_zero() const noexcept { return encoding_ == 0; }
  std::string to_string() const { return field_.format_element(encoding_); }

  friend bool operator==(const FieldElement& a, const FieldElement& b) noexcept {
    return a.encoding_ == b.encoding_ && a.field_ == b.field_;
  }
  friend std::strong_ordering operator<=>(const FieldElement& a, const FieldElement& b) noexcept {
    return a.encoding_ <=> b.encoding_;
  }

 private:
  Field field_;
  Encoding encoding_;
};

void require_same_field(const Field& a, const Field& b);

FieldElement add(const FieldElement& a, const FieldElement& b);
FieldElement sub(const FieldElement& a, const FieldElement& b);
FieldElement mul(const FieldElement& a, const FieldElement& b);
FieldElement neg(const FieldElement& a);
/// Throws ZeroInverse for 0.
FieldElement inv(const FieldElement& a);
/// 0^0 = 1.
FieldElement pow(const FieldElement& a, std::uint64_t n);

inline FieldElement operator+(const FieldElement& a, const FieldElement& b) { return add(a, b); }
inline FieldElement operator-(const FieldElement& a, const FieldElement& b) { return sub(a, b); }
inline FieldElement operator*(const FieldElement& a, const FieldElement& b) { return mul(a, b); }
inline FieldElement operator-(const FieldElement& a) { return neg(a); }
inline FieldElement operator/(const FieldElement& a, const FieldElement& b) { return mul(a, inv(b)); }

/// Throws ZeroOrder for 0.
std::uint64_t element_order(const FieldElement& a);

/// Smallest-encoding element of order q - 1.
FieldElement find_generator(const Field& field);

/// Elements of order exactly m, ascending by encoding; empty if m does not
/// divide q - 1.
std::vector<FieldElement> elements_of_order(const Field& field, std::uint64_t m);

/// The subgroup H of order m (m | q - 1), ascending by encoding.
std::vector<FieldElement> subgroup_elements(const Field& field, std::uint64_t m);

/// g^((q-1)/r) for the canonical generator g.
FieldElement root_of_unity(const Field& field, std::uint64_t r);

/// Baby-step giant-step; the unique e in [0, q-2] with g^e = x.
std::uint64_t discrete_log(const FieldElement& x);

}  // namespace permcycle
