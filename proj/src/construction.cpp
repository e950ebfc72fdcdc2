#include "permcycle/construction.hpp"

#include <algorithm>
#include <cctype>
#include <stdexcept>
#include <string>

namespace permcycle {

std::string_view family_tag(Family family) noexcept {
  switch (family) {
    case Family::Bin: return "BIN";
    case Family::Tri: return "TRI";
    case Family::Cyclo: return "CYCLO";
    case Family::GeomSum: return "GEOM_SUM";
  }
  return "?";
}

Family parse_family(std::string_view text) {
  std::string lower(text);
  std::transform(lower.begin(), lower.end(), lower.begin(),
                 [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
  if (lower == "bin") return Family::Bin;
  if (lower == "tri") return Family::Tri;
  if (lower == "cyclo") return Family::Cyclo;
  if (lower == "geomsum" || lower == "geom_sum") return Family::GeomSum;
  throw Error(ErrorCode::SyntaxError, "unknown family '" + std::string(text) + "'");
}

std::vector<FieldElement> Construction::coset_units() const {
  std::vector<FieldElement> out;
  out.reserve(d);
  for (std::uint64_t i = 0; i < d; ++i) {
    switch (family) {
      case Family::Bin: out.push_back(i % 2 == 0 ? units[1] : units[0]); break;
      case Family::Tri:
      case Family::Cyclo: out.push_back(units[i % units.size()]); break;
      case Family::GeomSum: out.push_back(i == 0 ? units[0] : units[1]); break;
    }
  }
  return out;
}

CycleType predicted_cycle_type(std::uint64_t q, std::uint64_t d, std::uint64_t r,
                               std::span<const std::uint64_t> unit_orders, std::uint64_t m) {
  if (m == 0 || d == 0 || m * d != q - 1) {
    throw Error(ErrorCode::BadDivisibility,
                "m*d = " + std::to_string(m) + "*" + std::to_string(d) + " != q-1 = " + std::to_string(q - 1));
  }
  if (r == 0 || d % r != 0) {
    throw Error(ErrorCode::BadDivisibility, "r = " + std::to_string(r) + " does not divide d = " + std::to_string(d));
  }
  if (unit_orders.size() != r) {
    throw Error(ErrorCode::BadUnitCount, "expected " + std::to_string(r) + " unit orders");
  }
  CycleType out;
  out.add(1, 1);
  for (const auto mi : unit_orders) {
    if (mi == 0 || m % mi != 0) {
      throw Error(ErrorCode::BadDivisibility,
                  "unit order " + std::to_string(mi) + " does not divide m = " + std::to_string(m));
    }
    out.add(mi, (d / r) * (m / mi));
  }
  return out;
}

namespace {

std::uint64_t checked_index(const Field& field, std::uint64_t m) {
  if (m == 0 || (field.q() - 1) % m != 0) {
    throw Error(ErrorCode::BadDivisibility,
                "m = " + std::to_string(m) + " does not divide q-1 = " + std::to_string(field.q() - 1));
  }
  return (field.q() - 1) / m;
}

void require_in_subgroup(const Field& field, std::uint64_t m, std::span<const FieldElement> units) {
  for (const auto& u : units) {
    require_same_field(field, u.field());
    if (u.is_zero() || field.pow(u.encoding(), m) != 1) {
      throw Error(ErrorCode::UnitOutsideSubgroup,
                  "unit " + u.to_string() + " is not in the subgroup of order " + std::to_string(m));
    }
  }
}

bool all_equal(std::span<const FieldElement> units) {
  return std::all_of(units.begin(), units.end(), [&](const FieldElement& u) { return u == units[0]; });
}

std::vector<FieldElement> inverted(std::span<const FieldElement> units) {
  std::vector<FieldElement> out;
  out.reserve(units.size());
  for (const auto& u : units) out.push_back(inv(u));
  return out;
}

std::vector<std::uint64_t> orders_of(std::span<const FieldElement> units) {
  std::vector<std::uint64_t> out;
  out.reserve(units.size());
  for (const auto& u : units) out.push_back(element_order(u));
  return out;
}

FieldElement small_integer_inverse(const Field& field, std::uint64_t n) {
  return inv(field.from_integer(static_cast<std::int64_t>(n % field.p())));
}

SparsePolynomial bin_poly(const Field& field, const FieldElement& u, const FieldElement& v) {
  const FieldElement half = small_integer_inverse(field, 2);
  const FieldElement a = (v - u) * half;
  const FieldElement b = (u + v) * half;
  return SparsePolynomial::canonicalize(
      field, {{(field.q() + 1) / 2, a.encoding()}, {1, b.encoding()}});
}

SparsePolynomial tri_poly(const Field& field, const FieldElement& u, const FieldElement& v,
                          const FieldElement& w) {
  const FieldElement zeta = root_of_unity(field, 3);
  const FieldElement zeta2 = zeta * zeta;
  const FieldElement third = small_integer_inverse(field, 3);
  const FieldElement a = (u + v * zeta + w * zeta2) * third;
  const FieldElement b = (u + v * zeta2 + w * zeta) * third;
  const FieldElement c = (u + v + w) * third;
  const std::uint64_t q = field.q();
  return SparsePolynomial::canonicalize(
      field, {{(2 * q + 1) / 3, a.encoding()}, {(q + 2) / 3, b.encoding()}, {1, c.encoding()}});
}

SparsePolynomial cyclotomic_poly(const Field& field, std::uint64_t r,
                                 std::span<const FieldElement> units) {
  const auto coeffs = vandermonde_coeffs(field, r, units);
  const std::uint64_t ell = (field.q() - 1) / r;
  std::vector<Term> terms;
  terms.reserve(r);
  for (std::uint64_t pos = 0; pos < r; ++pos) {
    const std::uint64_t k = r - 1 - pos;
    terms.push_back({k * ell + 1, coeffs[pos].encoding()});
  }
  return SparsePolynomial::canonicalize(field, std::move(terms));
}

SparsePolynomial geom_sum_poly(const Field& field, std::uint64_t m, const FieldElement& u,
                               const FieldElement& v) {
  const std::uint64_t d = (field.q() - 1) / m;
  const FieldElement a = (u - v) * small_integer_inverse(field, d);
  std::vector<Term> terms;
  terms.reserve(d + 1);
  for (std::uint64_t i = 0; i < d; ++i) terms.push_back({i * m + 1, a.encoding()});
  terms.push_back({1, v.encoding()});
  return SparsePolynomial::canonicalize(field, std::move(terms));
}

Construction assemble(const Field& field, Family family, std::uint64_t m, std::uint64_t r,
                      std::vector<FieldElement> units, SparsePolynomial poly,
                      SparsePolynomial inverse_poly) {
  const std::uint64_t d = (field.q() - 1) / m;
  auto unit_orders = orders_of(units);
  std::vector<std::uint64_t> class_orders;
  switch (family) {
    case Family::Bin: class_orders = {unit_orders[1], unit_orders[0]}; break;
    case Family::Tri:
    case Family::Cyclo: class_orders = unit_orders; break;
    case Family::GeomSum:
      class_orders.assign(d, unit_orders[1]);
      class_orders[0] = unit_orders[0];
      break;
  }
  CycleType predicted = predicted_cycle_type(field.q(), d, r, class_orders, m);
  const std::uint64_t needed = family == Family::GeomSum ? 2 : r;
  return Construction{field,
                      family,
                      m,
                      d,
                      r,
                      std::move(units),
                      std::move(unit_orders),
                      std::move(poly),
                      std::move(inverse_poly),
                      std::move(predicted),
                      euler_phi(m) >= needed};
}

}  // namespace

Construction construct_bin(const Field& field, std::uint64_t m, const FieldElement& u,
                           const FieldElement& v) {
  const std::uint64_t d = checked_index(field, m);
  if (d % 2 != 0) throw Error(ErrorCode::OddIndex, "d = " + std::to_string(d) + " is odd");
  const std::vector<FieldElement> units{u, v};
  require_in_subgroup(field, m, units);
  if (u == v) throw Error(ErrorCode::EqualUnits, "u = v = " + u.to_string());
  const auto inv_units = inverted(units);
  return assemble(field, Family::Bin, m, 2, units, bin_poly(field, u, v),
                  bin_poly(field, inv_units[0], inv_units[1]));
}

Construction construct_tri(const Field& field, std::uint64_t m, const FieldElement& u,
                           const FieldElement& v, const FieldElement& w) {
  if (field.q() % 3 != 1) {
    throw Error(ErrorCode::BadResidue, "q = " + std::to_string(field.q()) + " is not 1 mod 3");
  }
  const std::uint64_t d = checked_index(field, m);
  if (d % 3 != 0) {
    throw Error(ErrorCode::IndexNotMultipleOf3, "d = " + std::to_string(d) + " is not a multiple of 3");
  }
  const std::vector<FieldElement> units{u, v, w};
  require_in_subgroup(field, m, units);
  if (all_equal(units)) throw Error(ErrorCode::AllUnitsEqual, "u = v = w");
  const auto iu = inverted(units);
  return assemble(field, Family::Tri, m, 3, units, tri_poly(field, u, v, w),
                  tri_poly(field, iu[0], iu[1], iu[2]));
}

std::vector<FieldElement> vandermonde_coeffs(const Field& field, std::uint64_t r,
                                             std::span<const FieldElement> units) {
  if (units.size() != r) {
    throw Error(ErrorCode::BadUnitCount,
                "expected " + std::to_string(r) + " units, got " + std::to_string(units.size()));
  }
  for (const auto& u : units) require_same_field(field, u.field());
  const FieldElement zeta = root_of_unity(field, r);  // throws OrderNotDividing
  const FieldElement zeta_inv = inv(zeta);
  const FieldElement r_inv = small_integer_inverse(field, r);

  // a_k = (1/r) * sum_i u_i * zeta^(-i*k)
  std::vector<FieldElement> low_first;
  low_first.reserve(r);
  FieldElement step = field.one();  // zeta^(-k)
  for (std::uint64_t k = 0; k < r; ++k) {
    FieldElement sum = field.zero();
    FieldElement twiddle = field.one();  // zeta^(-i*k)
    for (std::uint64_t i = 0; i < r; ++i) {
      sum = sum + units[i] * twiddle;
      twiddle = twiddle * step;
    }
    low_first.push_back(sum * r_inv);
    step = step * zeta_inv;
  }

  FieldElement row_root = field.one();  // zeta^i
  for (std::uint64_t i = 0; i < r; ++i) {
    FieldElement lhs = field.zero();
    FieldElement power = field.one();  // zeta^(i*k)
    for (std::uint64_t k = 0; k < r; ++k) {
      lhs = lhs + low_first[k] * power;
      power = power * row_root;
    }
    if (lhs != units[i]) throw std::logic_error("Vandermonde solution fails substitution check");
    row_root = row_root * zeta;
  }
  return {low_first.rbegin(), low_first.rend()};
}

Construction construct_cyclotomic(const Field& field, std::uint64_t r, std::uint64_t m,
                                  std::span<const FieldElement> units) {
  if (r < 2) throw Error(ErrorCode::BadDivisibility, "r must be at least 2");
  if (units.size() != r) {
    throw Error(ErrorCode::BadUnitCount,
                "expected " + std::to_string(r) + " units, got " + std::to_string(units.size()));
  }
  const std::uint64_t d = checked_index(field, m);
  if (d % r != 0) {
    throw Error(ErrorCode::BadDivisibility,
                "r = " + std::to_string(r) + " does not divide d = " + std::to_string(d));
  }
  require_in_subgroup(field, m, units);
  if (all_equal(units)) throw Error(ErrorCode::AllUnitsEqual, "all units are equal");
  const auto iu = inverted(units);
  return assemble(field, Family::Cyclo, m, r, {units.begin(), units.end()},
                  cyclotomic_poly(field, r, units), cyclotomic_poly(field, r, iu));
}

Construction construct_geom_sum(const Field& field, std::uint64_t m, const FieldElement& u,
                                const FieldElement& v) {
  const std::uint64_t d = checked_index(field, m);
  const std::vector<FieldElement> units{u, v};
  require_in_subgroup(field, m, units);
  if (u == v) throw Error(ErrorCode::EqualUnits, "u = v = " + u.to_string());
  if (element_order(u) != element_order(v)) {
    throw Error(ErrorCode::OrderMismatch, "units " + u.to_string() + " and " + v.to_string() +
                                              " have different orders");
  }
  const auto iu = inverted(units);
  return assemble(field, Family::GeomSum, m, d, units, geom_sum_poly(field, m, u, v),
                  geom_sum_poly(field, m, iu[0], iu[1]));
}

Construction construct(const Field& field, Family family, std::uint64_t m, std::uint64_t r,
                       std::span<const FieldElement> units) {
  const std::size_t expected = family == Family::Tri ? 3 : family == Family::Cyclo ? r : 2;
  if (units.size() != expected) {
    throw Error(ErrorCode::BadUnitCount, std::string(family_tag(family)) + " takes " +
                                             std::to_string(expected) + " units, got " +
                                             std::to_string(units.size()));
  }
  switch (family) {
    case Family::Bin: return construct_bin(field, m, units[0], units[1]);
    case Family::Tri: return construct_tri(field, m, units[0], units[1], units[2]);
    case Family::Cyclo: return construct_cyclotomic(field, r, m, units);
    case Family::GeomSum: return construct_geom_sum(field, m, units[0], units[1]);
  }
  throw std::logic_error("unhandled family");
}

Construction inverse_construction(const Construction& c) {
  return construct(c.field, c.family, c.m, c.r, inverted(c.units));
}

}  // namespace permcycle
