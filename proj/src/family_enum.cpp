#include "permcycle/family_enum.hpp"

#include <algorithm>
#include <cstdlib>
#include <limits>
#include <set>

#include "permcycle/parallel.hpp"

namespace permcycle {

unsigned worker_count(unsigned requested) {
  if (requested != 0) return requested;
  if (const char* env = std::getenv("PERMCYCLE_THREADS")) {
    const long value = std::strtol(env, nullptr, 10);
    if (value > 0) return static_cast<unsigned>(value);
  }
  return std::max(1u, std::thread::hardware_concurrency());
}

void Verifier::ensure_powers(const Construction& c) {
  bool missing = !powers_;
  for (const auto* poly : {&c.poly, &c.inverse_poly}) {
    for (const auto& t : poly->terms()) {
      if (std::find(cached_exponents_.begin(), cached_exponents_.end(), t.exponent) == cached_exponents_.end()) {
        cached_exponents_.push_back(t.exponent);
        missing = true;
      }
    }
  }
  if (missing) powers_.emplace(field_, cached_exponents_);
}

VerificationReport Verifier::verify(const Construction& c) {
  require_same_field(field_, c.field);
  ensure_powers(c);
  VerificationReport report;
  eval_into(c.poly, &*powers_, image_);
  report.is_permutation = is_permutation(image_);
  if (report.is_permutation) {
    report.cycle_type = cycle_type(image_);
    report.fixed_points = fixed_points(image_);
    report.matches_predicted = *report.cycle_type == c.predicted;
  }
  eval_into(c.inverse_poly, &*powers_, inverse_image_);
  report.inverse_ok = compose_is_identity(image_, inverse_image_);
  multipliers_.clear();
  for (const auto& u : c.coset_units()) multipliers_.push_back(u.encoding());
  report.coset_law_ok = follows_coset_law(field_, image_, multipliers_);
  return report;
}

std::vector<std::pair<std::uint64_t, std::uint64_t>> factor_pairs(const Field& field, std::uint64_t r) {
  std::vector<std::pair<std::uint64_t, std::uint64_t>> out;
  const std::uint64_t n = field.q() - 1;
  for (const auto m : divisors(field.q_minus_1_factors())) {
    const std::uint64_t d = n / m;
    if (r != 0 && d % r == 0) out.emplace_back(m, d);
  }
  return out;
}

namespace {

std::uint64_t arity_of(Family family, std::uint64_t r) {
  switch (family) {
    case Family::Bin: return 2;
    case Family::Tri: return 3;
    case Family::Cyclo: return r;
    case Family::GeomSum: return 2;
  }
  return 0;
}

std::uint64_t saturating_pow(std::uint64_t base, std::uint64_t exp) {
  std::uint64_t out = 1;
  for (std::uint64_t i = 0; i < exp; ++i) {
    if (base != 0 && out > std::numeric_limits<std::uint64_t>::max() / base) {
      return std::numeric_limits<std::uint64_t>::max();
    }
    out *= base;
  }
  return out;
}

}  // namespace

std::uint64_t closed_form_count(const Field& field, Family family, std::uint64_t m, std::uint64_t r,
                                UnitPool pool) {
  if (m == 0 || (field.q() - 1) % m != 0) return 0;
  if (family == Family::GeomSum) {
    if (pool == UnitPool::EqualOrder) {
      const std::uint64_t phi = euler_phi(m);
      return phi * (phi - 1);
    }
    std::uint64_t total = 0;
    for (const auto e : divisors(m)) {
      const std::uint64_t phi = euler_phi(e);
      total += phi * (phi - 1);
    }
    return total;
  }
  const std::uint64_t size = pool == UnitPool::EqualOrder ? euler_phi(m) : m;
  const std::uint64_t tuples = saturating_pow(size, arity_of(family, r));
  return tuples == std::numeric_limits<std::uint64_t>::max() ? tuples : tuples - size;
}

FamilyEnumerator::FamilyEnumerator(const Field& field, Family family, std::uint64_t m,
                                   std::uint64_t r, UnitPool pool)
    : field_(field), family_(family), m_(m), r_(0) {
  if (m == 0 || (field.q() - 1) % m != 0) {
    throw Error(ErrorCode::BadDivisibility,
                "m = " + std::to_string(m) + " does not divide q-1 = " + std::to_string(field.q() - 1));
  }
  const std::uint64_t d = (field.q() - 1) / m;
  switch (family) {
    case Family::Bin: r_ = 2; break;
    case Family::Tri: r_ = 3; break;
    case Family::Cyclo:
      if (r < 2) throw Error(ErrorCode::BadDivisibility, "CYCLO needs r >= 2");
      r_ = r;
      break;
    case Family::GeomSum: r_ = d; break;
  }
  if (d % r_ != 0) {
    throw Error(ErrorCode::BadDivisibility,
                std::string(family_tag(family)) + " needs " + std::to_string(r_) + " | d = " + std::to_string(d));
  }
  pool_ = pool == UnitPool::EqualOrder ? elements_of_order(field, m) : subgroup_elements(field, m);
  for (const auto& u : pool_) pool_orders_.push_back(field.order(u.encoding()));
  cursor_.assign(arity_of(family, r_), 0);
  done_ = pool_.empty();
}

bool FamilyEnumerator::advance() {
  for (std::size_t i = cursor_.size(); i-- > 0;) {
    if (++cursor_[i] < pool_.size()) return true;
    cursor_[i] = 0;
  }
  return false;
}

bool FamilyEnumerator::acceptable() const {
  const bool all_same = std::all_of(cursor_.begin(), cursor_.end(),
                                    [&](std::size_t i) { return i == cursor_.front(); });
  if (all_same) return false;
  if (family_ == Family::GeomSum) return pool_orders_[cursor_[0]] == pool_orders_[cursor_[1]];
  return true;
}

std::optional<Construction> FamilyEnumerator::next() {
  while (!done_) {
    if (!started_) {
      started_ = true;
    } else if (!advance()) {
      done_ = true;
      break;
    }
    if (!acceptable()) continue;
    std::vector<FieldElement> units;
    units.reserve(cursor_.size());
    for (const auto i : cursor_) units.push_back(pool_[i]);
    return construct(field_, family_, m_, r_, units);
  }
  return std::nullopt;
}

std::vector<Construction> enumerate_family(const Field& field, Family family, std::uint64_t m,
                                           std::uint64_t r, UnitPool pool) {
  FamilyEnumerator stream(field, family, m, r, pool);
  std::vector<Construction> out;
  while (auto c = stream.next()) out.push_back(std::move(*c));
  return out;
}

FamilyCount count_family(const Field& field, Family family, std::uint64_t m, std::uint64_t r,
                         UnitPool pool) {
  FamilyEnumerator stream(field, family, m, r, pool);
  std::uint64_t exhaustive = 0;
  while (stream.next()) ++exhaustive;
  return {closed_form_count(field, family, m, stream.r(), pool), exhaustive};
}

FamilyCheck check_family(const Field& field, Family family, std::uint64_t m, std::uint64_t r,
                         const CheckOptions& options, const ConstructionVisitor& visit) {
  FamilyEnumerator stream(field, family, m, r, options.pool);
  FamilyCheck result;
  result.closed_form = closed_form_count(field, family, m, stream.r(), options.pool);

  const unsigned workers = worker_count(options.threads);
  std::vector<Verifier> verifiers;
  if (options.verify) verifiers.assign(workers, Verifier(field));
  std::set<std::vector<std::pair<std::uint64_t, std::uint64_t>>> seen;

  const std::size_t batch_size = 256 * std::size_t{workers};
  std::vector<Construction> batch;
  std::vector<VerificationReport> reports;
  bool exhausted = false;
  while (!exhausted) {
    batch.clear();
    while (batch.size() < batch_size) {
      auto c = stream.next();
      if (!c) {
        exhausted = true;
        break;
      }
      batch.push_back(std::move(*c));
    }
    if (options.verify) {
      reports.assign(batch.size(), {});
      parallel_slices(batch.size(), workers, [&](unsigned w, std::size_t begin, std::size_t end) {
        for (std::size_t i = begin; i < end; ++i) reports[i] = verifiers[w].verify(batch[i]);
      });
    }
    for (std::size_t i = 0; i < batch.size(); ++i) {
      ++result.count;
      if (options.verify && !reports[i].passed()) ++result.failures;
      if (options.distinct) {
        std::vector<std::pair<std::uint64_t, std::uint64_t>> key;
        for (const auto& t : batch[i].poly.terms()) key.emplace_back(t.exponent, t.coefficient);
        seen.insert(std::move(key));
      }
      if (visit) visit(batch[i], options.verify ? &reports[i] : nullptr);
    }
  }
  result.verified = options.verify && result.failures == 0;
  if (options.distinct) result.distinct = seen.size();
  return result;
}

std::vector<FamilyRow> reproduce_table(const Field& field, const CheckOptions& options) {
  std::vector<FamilyRow> rows;
  for (const auto& [family, r] : {std::pair{Family::Bin, std::uint64_t{2}}, std::pair{Family::Tri, std::uint64_t{3}}}) {
    for (const auto& [m, d] : factor_pairs(field, r)) {
      if (euler_phi(m) < r) continue;
      const FamilyCheck check = check_family(field, family, m, r, options);
      if (check.count == 0) continue;
      CycleType type;
      type.add(1, 1);
      type.add(m, d);
      rows.push_back({family, m, d, std::move(type), check.count, check.closed_form, check.verified,
                      check.distinct});
    }
  }
  return rows;
}

}  // namespace permcycle
