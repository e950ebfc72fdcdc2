#pragma once

// Exhaustive ground truth for everything the constructions claim: full
// evaluation tables, bijectivity, cycle structure, fixed points,
// composition and the per-coset multiplier law.

#include <cstdint>
#include <span>
#include <vector>

#include "permcycle/cycle_type.hpp"
#include "permcycle/field.hpp"
#include "permcycle/sparse_poly.hpp"

namespace permcycle {

/// image[e] is the encoding of f(element e).
struct PermTable {
  Field field;
  std::vector<Encoding> image;
};

/// H_i = g^i * H_0 for i in [0, d), each listed in generator-walk order
/// g^(i + d*j), j = 0..m-1.
struct CosetDecomposition {
  std::uint64_t d = 0;
  std::vector<std::vector<Encoding>> cosets;
};

/// x^e for every x in F_q and a fixed set of exponents, shared by all
/// members of a family so batch evaluation costs one multiply per term.
class PowerTable {
 public:
  PowerTable(const Field& field, std::span<const std::uint64_t> exponents);

  const Field& field() const noexcept { return field_; }
  /// nullptr when the exponent was not tabulated.
  const std::vector<Encoding>* column(std::uint64_t exponent) const noexcept;

 private:
  Field field_;
  std::vector<std::uint64_t> exponents_;
  std::vector<std::vector<Encoding>> columns_;
};

PermTable eval_table(const SparsePolynomial& f);
PermTable eval_table(const SparsePolynomial& f, const PowerTable& powers);
/// Writes the table into `image` (resized to q), reusing its storage.
void eval_into(const SparsePolynomial& f, const PowerTable* powers, std::vector<Encoding>& image);

bool is_permutation(std::span<const Encoding> image);
bool is_permutation(const PermTable& t);

/// Throws NotAPermutation.
CycleType cycle_type(std::span<const Encoding> image);
CycleType cycle_type(const PermTable& t);

std::vector<Encoding> fixed_points(std::span<const Encoding> image);
std::vector<Encoding> fixed_points(const PermTable& t);

/// t1 o t2 and t2 o t1 are both the identity. Throws FieldMismatch.
bool compose_is_identity(const PermTable& t1, const PermTable& t2);
bool compose_is_identity(std::span<const Encoding> a, std::span<const Encoding> b);

CosetDecomposition coset_decomposition(const Field& field, std::uint64_t d);

/// The constant f(x)/x on each coset H_0..H_{d-1}. Throws
/// NotCosetMultiplicative or BadDivisibility.
std::vector<FieldElement> coset_multipliers(const SparsePolynomial& f, std::uint64_t d);

/// True iff image[x] = multipliers[i] * x on every coset H_i, where d is
/// multipliers.size().
bool follows_coset_law(const Field& field, std::span<const Encoding> image,
                       std::span<const Encoding> multipliers);

/// Cycle type of x -> u*x on the order-M subgroup U of F_q^*.
/// Throws BadDivisibility or UnitOutsideSubgroup.
CycleType multiplication_cycle_type(const Field& field, const FieldElement& u, std::uint64_t subgroup_order);

}  // namespace permcycle
