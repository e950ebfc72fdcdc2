#pragma once

// Permutation polynomials of prescribed cycle type.
//
// Write q - 1 = m*d, let g be the canonical generator and H_i = g^i * H_0
// the cosets of the order-m subgroup. Every family here acts on each coset
// as multiplication by a fixed unit of H_0, so 0 is fixed and, on a coset
// multiplied by a unit of order m_i, the map splits into m/m_i cycles of
// length m_i.

#include <cstdint>
#include <span>
#include <string_view>
#include <vector>

#include "permcycle/cycle_type.hpp"
#include "permcycle/field.hpp"
#include "permcycle/sparse_poly.hpp"

namespace permcycle {

enum class Family { Bin, Tri, Cyclo, GeomSum };

/// "BIN", "TRI", "CYCLO", "GEOM_SUM".
std::string_view family_tag(Family family) noexcept;
/// Accepts the tags and the CLI spellings bin/tri/cyclo/geomsum.
Family parse_family(std::string_view text);

struct Construction {
  Field field;
  Family family;
  std::uint64_t m;
  std::uint64_t d;
  // Number of distinguished coset classes: 2 (BIN), 3 (TRI), r (CYCLO),
  // d (GEOM_SUM).
  std::uint64_t r;
  std::vector<FieldElement> units;
  std::vector<std::uint64_t> unit_orders;
  SparsePolynomial poly;
  SparsePolynomial inverse_poly;
  CycleType predicted;
  // Whether phi(m) >= r held. Recorded, never enforced.
  bool phi_at_least_r;

  std::size_t term_count() const noexcept { return poly.term_count(); }

  /// The unit f multiplies by on each coset H_0, ..., H_{d-1}.
  std::vector<FieldElement> coset_units() const;
};

/// {1} plus, for each class i, m_i repeated (d/r)*(m/m_i) times.
/// Throws BadDivisibility unless m*d = q-1, r | d and every m_i | m.
CycleType predicted_cycle_type(std::uint64_t q, std::uint64_t d, std::uint64_t r,
                               std::span<const std::uint64_t> unit_orders, std::uint64_t m);

/// a*x^((q+1)/2) + b*x with a = (v-u)/2, b = (u+v)/2: multiplication by u
/// on odd cosets and by v on even ones. u and v may have different orders.
Construction construct_bin(const Field& field, std::uint64_t m, const FieldElement& u,
                           const FieldElement& v);

/// a*x^((2q+1)/3) + b*x^((q+2)/3) + c*x with zeta = root_of_unity(F, 3).
/// Cosets i = 0, 1, 2 (mod 3) are multiplied by u, v, w.
Construction construct_tri(const Field& field, std::uint64_t m, const FieldElement& u,
                           const FieldElement& v, const FieldElement& w);

/// Solves sum_k a_k zeta^(i*k) = u_i (i = 0..r-1) by the inverse DFT and
/// checks the solution against the system. Returned highest first:
/// a_{r-1}, ..., a_0.
std::vector<FieldElement> vandermonde_coeffs(const Field& field, std::uint64_t r,
                                             std::span<const FieldElement> units);

/// f(x) = x * G(x^((q-1)/r)) with G from vandermonde_coeffs.
Construction construct_cyclotomic(const Field& field, std::uint64_t r, std::uint64_t m,
                                  std::span<const FieldElement> units);

/// a * sum_{i<d} x^(i*m+1) + v*x with a = (u-v)/d: u on H_0, v elsewhere.
Construction construct_geom_sum(const Field& field, std::uint64_t m, const FieldElement& u,
                                const FieldElement& v);

/// Dispatch on family; r is only read for CYCLO.
Construction construct(const Field& field, Family family, std::uint64_t m, std::uint64_t r,
                       std::span<const FieldElement> units);

/// Same family with every unit inverted.
Construction inverse_construction(const Construction& c);

}  // namespace permcycle
