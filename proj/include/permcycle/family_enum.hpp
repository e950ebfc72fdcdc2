#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <utility>
#include <vector>

#include "permcycle/construction.hpp"
#include "permcycle/cycle_type.hpp"
#include "permcycle/field.hpp"
#include "permcycle/number_theory.hpp"
#include "permcycle/perm_analyzer.hpp"

namespace permcycle {

/// Where unit tuples are drawn from. EqualOrder uses only elements of
/// order exactly m; Mixed uses all of H_0.
enum class UnitPool { EqualOrder, Mixed };

/// Full oracle result for one construction.
struct VerificationReport {
  bool is_permutation = false;
  std::optional<CycleType> cycle_type;
  std::vector<Encoding> fixed_points;
  bool matches_predicted = false;
  bool inverse_ok = false;
  bool coset_law_ok = false;

  bool passed() const noexcept {
    return is_permutation && matches_predicted && inverse_ok && coset_law_ok;
  }
};

/// Evaluates constructions exhaustively. Keeps scratch tables and a power
/// cache between calls, so one Verifier per worker thread.
class Verifier {
 public:
  explicit Verifier(Field field) : field_(std::move(field)) {}

  VerificationReport verify(const Construction& c);

 private:
  void ensure_powers(const Construction& c);

  Field field_;
  std::optional<PowerTable> powers_;
  std::vector<std::uint64_t> cached_exponents_;
  std::vector<Encoding> image_;
  std::vector<Encoding> inverse_image_;
  std::vector<Encoding> multipliers_;
};

/// All (m, d) with m*d = q-1 and r | d, ascending in m.
std::vector<std::pair<std::uint64_t, std::uint64_t>> factor_pairs(const Field& field, std::uint64_t r);

/// Number of unit tuples the family admits, by formula:
/// phi(m)(phi(m)-1) for pairs, phi(m)^r - phi(m) for r-tuples, with the
/// whole subgroup in place of phi(m) for the mixed pool.
std::uint64_t closed_form_count(const Field& field, Family family, std::uint64_t m, std::uint64_t r,
                                UnitPool pool = UnitPool::EqualOrder);

/// Streams a family's constructions, unit tuples in lexicographic order of
/// encodings. For BIN and TRI the arity is 2 and 3, for CYCLO it is r, for
/// GEOM_SUM it is a pair of distinct equal-order units.
class FamilyEnumerator {
 public:
  /// Throws BadDivisibility if (m, r) is not valid for the family.
  FamilyEnumerator(const Field& field, Family family, std::uint64_t m, std::uint64_t r = 0,
                   UnitPool pool = UnitPool::EqualOrder);

  std::optional<Construction> next();

  Family family() const noexcept { return family_; }
  std::uint64_t m() const noexcept { return m_; }
  std::uint64_t d() const noexcept { return (field_.q() - 1) / m_; }
  std::uint64_t r() const noexcept { return r_; }

 private:
  bool advance();
  bool acceptable() const;

  Field field_;
  Family family_;
  std::uint64_t m_;
  std::uint64_t r_;
  std::vector<FieldElement> pool_;
  std::vector<std::uint64_t> pool_orders_;
  std::vector<std::size_t> cursor_;
  bool started_ = false;
  bool done_ = false;
};

std::vector<Construction> enumerate_family(const Field& field, Family family, std::uint64_t m,
                                           std::uint64_t r = 0, UnitPool pool = UnitPool::EqualOrder);

struct FamilyCount {
  std::uint64_t closed_form;
  std::uint64_t exhaustive;
  bool agree() const noexcept { return closed_form == exhaustive; }
};

FamilyCount count_family(const Field& field, Family family, std::uint64_t m, std::uint64_t r = 0,
                         UnitPool pool = UnitPool::EqualOrder);

struct CheckOptions {
  bool verify = true;
  bool distinct = false;
  unsigned threads = 0;  // 0: PERMCYCLE_THREADS, else hardware concurrency
  UnitPool pool = UnitPool::EqualOrder;
};

struct FamilyCheck {
  std::uint64_t count = 0;
  std::uint64_t closed_form = 0;
  std::uint64_t failures = 0;
  bool verified = false;  // verification ran and every member passed
  std::optional<std::uint64_t> distinct;
};

/// Visitor sees each construction in stream order; report is null when
/// verification is off.
using ConstructionVisitor = std::function<void(const Construction&, const VerificationReport*)>;

/// Enumerates one family, verifying members in parallel and folding the
/// results back in stream order.
FamilyCheck check_family(const Field& field, Family family, std::uint64_t m, std::uint64_t r,
                         const CheckOptions& options, const ConstructionVisitor& visit = {});

struct FamilyRow {
  Family family;
  std::uint64_t m;
  std::uint64_t d;
  CycleType cycle_type;
  std::uint64_t count;
  std::uint64_t closed_form;
  bool verified;
  std::optional<std::uint64_t> distinct;
};

/// BIN rows for every (m, d) with d even, then TRI rows for every (m, d)
/// with 3 | d; rows need phi(m) >= r and a nonzero count.
std::vector<FamilyRow> reproduce_table(const Field& field, const CheckOptions& options = {});

}  // namespace permcycle
