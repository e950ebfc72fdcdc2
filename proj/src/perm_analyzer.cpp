#include "permcycle/perm_analyzer.hpp"

#include <algorithm>
#include <map>

namespace permcycle {

PowerTable::PowerTable(const Field& field, std::span<const std::uint64_t> exponents)
    : field_(field) {
  const std::uint64_t q = field.q();
  const std::uint64_t n = q - 1;
  // exp_table[i] = g^i; x^e at x = g^i is g^(i*e mod n).
  std::vector<Encoding> exp_table(n);
  Encoding x = 1;
  for (std::uint64_t i = 0; i < n; ++i) {
    exp_table[i] = x;
    x = field.mul(x, field.generator_encoding());
  }
  for (const auto e : exponents) {
    if (std::find(exponents_.begin(), exponents_.end(), e) != exponents_.end()) continue;
    std::vector<Encoding> column(q);
    column[0] = e == 0 ? 1 : 0;
    const std::uint64_t step = e % n;
    std::uint64_t idx = 0;
    for (std::uint64_t i = 0; i < n; ++i) {
      column[exp_table[i]] = exp_table[idx];
      idx += step;
      if (idx >= n) idx -= n;
    }
    exponents_.push_back(e);
    columns_.push_back(std::move(column));
  }
}

const std::vector<Encoding>* PowerTable::column(std::uint64_t exponent) const noexcept {
  for (std::size_t i = 0; i < exponents_.size(); ++i) {
    if (exponents_[i] == exponent) return &columns_[i];
  }
  return nullptr;
}

void eval_into(const SparsePolynomial& f, const PowerTable* powers, std::vector<Encoding>& image) {
  const Field& field = f.field();
  if (powers) require_same_field(field, powers->field());
  const std::uint64_t q = field.q();
  image.assign(q, 0);
  for (const auto& term : f.terms()) {
    const std::vector<Encoding>* column = powers ? powers->column(term.exponent) : nullptr;
    if (column) {
      for (Encoding x = 0; x < q; ++x) {
        image[x] = field.add(image[x], field.mul(term.coefficient, (*column)[x]));
      }
    } else if (term.exponent == 1) {
      for (Encoding x = 0; x < q; ++x) image[x] = field.add(image[x], field.mul(term.coefficient, x));
    } else {
      for (Encoding x = 0; x < q; ++x) {
        image[x] = field.add(image[x], field.mul(term.coefficient, field.pow(x, term.exponent)));
      }
    }
  }
}

PermTable eval_table(const SparsePolynomial& f) {
  PermTable t{f.field(), {}};
  eval_into(f, nullptr, t.image);
  return t;
}

PermTable eval_table(const SparsePolynomial& f, const PowerTable& powers) {
  PermTable t{f.field(), {}};
  eval_into(f, &powers, t.image);
  return t;
}

bool is_permutation(std::span<const Encoding> image) {
  std::vector<bool> seen(image.size(), false);
  for (const auto y : image) {
    if (y >= image.size() || seen[y]) return false;
    seen[y] = true;
  }
  return true;
}

bool is_permutation(const PermTable& t) { return is_permutation(t.image); }

CycleType cycle_type(std::span<const Encoding> image) {
  if (!is_permutation(image)) throw Error(ErrorCode::NotAPermutation, "table is not a bijection");
  std::vector<bool> visited(image.size(), false);
  std::map<std::uint64_t, std::uint64_t> counts;
  for (Encoding start = 0; start < image.size(); ++start) {
    if (visited[start]) continue;
    std::uint64_t length = 0;
    for (Encoding x = start; !visited[x]; x = image[x]) {
      visited[x] = true;
      ++length;
    }
    ++counts[length];
  }
  return CycleType::from_lengths(counts);
}

CycleType cycle_type(const PermTable& t) { return cycle_type(t.image); }

std::vector<Encoding> fixed_points(std::span<const Encoding> image) {
  std::vector<Encoding> out;
  for (Encoding x = 0; x < image.size(); ++x) {
    if (image[x] == x) out.push_back(x);
  }
  return out;
}

std::vector<Encoding> fixed_points(const PermTable& t) { return fixed_points(t.image); }

bool compose_is_identity(std::span<const Encoding> a, std::span<const Encoding> b) {
  if (a.size() != b.size()) return false;
  const std::size_t n = a.size();
  for (Encoding x = 0; x < n; ++x) {
    if (a[x] >= n || b[x] >= n) return false;
    if (a[b[x]] != x || b[a[x]] != x) return false;
  }
  return true;
}

bool compose_is_identity(const PermTable& t1, const PermTable& t2) {
  require_same_field(t1.field, t2.field);
  return compose_is_identity(t1.image, t2.image);
}

namespace {

void require_index(const Field& field, std::uint64_t d) {
  if (d == 0 || (field.q() - 1) % d != 0) {
    throw Error(ErrorCode::BadDivisibility,
                "index " + std::to_string(d) + " does not divide " + std::to_string(field.q() - 1));
  }
}

}  // namespace

CosetDecomposition coset_decomposition(const Field& field, std::uint64_t d) {
  require_index(field, d);
  const std::uint64_t m = (field.q() - 1) / d;
  const Encoding step = field.pow(field.generator_encoding(), d);
  CosetDecomposition out{d, std::vector<std::vector<Encoding>>(d)};
  Encoding leader = 1;
  for (std::uint64_t i = 0; i < d; ++i) {
    auto& coset = out.cosets[i];
    coset.reserve(m);
    Encoding x = leader;
    for (std::uint64_t j = 0; j < m; ++j) {
      coset.push_back(x);
      x = field.mul(x, step);
    }
    leader = field.mul(leader, field.generator_encoding());
  }
  return out;
}

std::vector<FieldElement> coset_multipliers(const SparsePolynomial& f, std::uint64_t d) {
  const Field& field = f.field();
  require_index(field, d);
  const std::uint64_t m = (field.q() - 1) / d;
  const Encoding g = field.generator_encoding();
  const Encoding g_inv = field.inv(g);
  const Encoding step = field.pow(g, d);
  const Encoding step_inv = field.inv(step);

  std::vector<FieldElement> out;
  out.reserve(d);
  Encoding leader = 1;
  Encoding leader_inv = 1;
  for (std::uint64_t i = 0; i < d; ++i) {
    Encoding x = leader;
    Encoding x_inv = leader_inv;
    const Encoding multiplier = field.mul(f.evaluate(x), x_inv);
    for (std::uint64_t j = 1; j < m; ++j) {
      x = field.mul(x, step);
      x_inv = field.mul(x_inv, step_inv);
      if (field.mul(f.evaluate(x), x_inv) != multiplier) {
        throw Error(ErrorCode::NotCosetMultiplicative,
                    "f(x)/x is not constant on coset H_" + std::to_string(i));
      }
    }
    out.emplace_back(field, multiplier);
    leader = field.mul(leader, g);
    leader_inv = field.mul(leader_inv, g_inv);
  }
  return out;
}

bool follows_coset_law(const Field& field, std::span<const Encoding> image,
                       std::span<const Encoding> multipliers) {
  const std::uint64_t d = multipliers.size();
  if (image.size() != field.q() || d == 0 || (field.q() - 1) % d != 0) return false;
  if (image[0] != 0) return false;
  Encoding x = 1;
  std::uint64_t coset = 0;
  for (std::uint64_t e = 0; e + 1 < field.q(); ++e) {
    if (image[x] != field.mul(multipliers[coset], x)) return false;
    x = field.mul(x, field.generator_encoding());
    if (++coset == d) coset = 0;
  }
  return true;
}

CycleType multiplication_cycle_type(const Field& field, const FieldElement& u,
                                    std::uint64_t subgroup_order) {
  require_same_field(field, u.field());
  if (subgroup_order == 0 || (field.q() - 1) % subgroup_order != 0) {
    throw Error(ErrorCode::BadDivisibility,
                std::to_string(subgroup_order) + " does not divide " + std::to_string(field.q() - 1));
  }
  if (u.is_zero() || field.pow(u.encoding(), subgroup_order) != 1) {
    throw Error(ErrorCode::UnitOutsideSubgroup,
                u.to_string() + " is not in the subgroup of order " + std::to_string(subgroup_order));
  }
  // Index subgroup elements by walking its generator h.
  const Encoding h = field.pow(field.generator_encoding(), (field.q() - 1) / subgroup_order);
  std::vector<Encoding> sorted;
  sorted.reserve(subgroup_order);
  Encoding x = 1;
  for (std::uint64_t j = 0; j < subgroup_order; ++j) {
    sorted.push_back(x);
    x = field.mul(x, h);
  }
  std::sort(sorted.begin(), sorted.end());
  auto index_of = [&](Encoding e) {
    return static_cast<std::size_t>(std::lower_bound(sorted.begin(), sorted.end(), e) - sorted.begin());
  };
  std::vector<Encoding> image(subgroup_order);
  for (std::size_t i = 0; i < sorted.size(); ++i) image[i] = index_of(field.mul(u.encoding(), sorted[i]));
  return cycle_type(image);
}

}  // namespace permcycle
