#include "permcycle/field.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <cmath>
#include <limits>
#include <numeric>
#include <unordered_map>

namespace permcycle {

namespace {

using Poly = std::vector<std::uint64_t>;  // least degree first, over F_p

// True iff the monic `divisor` divides `f` over F_p.
bool divides(const Poly& f, const Poly& divisor, std::uint64_t p) {
  Poly r = f;
  const std::size_t dg = divisor.size() - 1;
  // dg >= 1, so the unsigned countdown cannot wrap.
  for (std::size_t deg = r.size() - 1; deg >= dg; --deg) {
    const std::uint64_t c = r[deg] % p;
    if (c != 0) {
      for (std::size_t i = 0; i <= dg; ++i) {
        const std::uint64_t t = c * divisor[i] % p;
        r[deg - dg + i] = (r[deg - dg + i] + p - t) % p;
      }
    }
  }
  for (std::size_t i = 0; i < dg; ++i) {
    if (r[i] % p != 0) return false;
  }
  return true;
}

// No monic factor of degree 1..k/2, by exhaustive trial.
bool is_irreducible(const Poly& monic, std::uint64_t p) {
  const std::size_t k = monic.size() - 1;
  for (std::size_t j = 1; j <= k / 2; ++j) {
    Poly candidate(j + 1, 0);
    candidate[j] = 1;
    while (true) {
      if (divides(monic, candidate, p)) return false;
      std::size_t i = 0;
      while (i < j && ++candidate[i] == p) candidate[i++] = 0;
      if (i == j) break;
    }
  }
  return true;
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

std::uint64_t parse_u64(std::string_view s, std::string_view whole) {
  s = trim(s);
  std::uint64_t value = 0;
  const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
  if (s.empty() || ec != std::errc{} || ptr != s.data() + s.size()) {
    throw Error(ErrorCode::SyntaxError, "bad integer '" + std::string(s) + "' in element '" +
                                            std::string(whole) + "'");
  }
  return value;
}

}  // namespace

Field Field::finish(detail::FieldData data) {
  if (data.q > kMaxOrder) {
    throw Error(ErrorCode::FieldTooLarge, "q = " + std::to_string(data.q) + " exceeds desk scale");
  }
  data.barrett = std::numeric_limits<std::uint64_t>::max() / data.p;
  data.p_pow[0] = 1;
  for (unsigned i = 1; i <= data.k; ++i) data.p_pow[i] = data.p_pow[i - 1] * data.p;
  data.q_minus_1_factors = factorize(data.q - 1);
  Field provisional(std::make_shared<const detail::FieldData>(data));
  data.generator = find_generator(provisional).encoding();
  return Field(std::make_shared<const detail::FieldData>(std::move(data)));
}

Field Field::prime(std::uint64_t p) {
  if (!is_prime(p)) throw Error(ErrorCode::NotPrime, std::to_string(p) + " is not prime");
  if (p == 2) throw Error(ErrorCode::EvenCharacteristic, "characteristic 2 is not supported");
  if (p > kMaxOrder) throw Error(ErrorCode::FieldTooLarge, std::to_string(p));
  detail::FieldData data;
  data.p = p;
  data.k = 1;
  data.q = p;
  return finish(std::move(data));
}

Field Field::extension(std::uint64_t p, unsigned k,
                       std::optional<std::vector<std::uint64_t>> modulus) {
  if (!is_prime(p)) throw Error(ErrorCode::NotPrime, std::to_string(p) + " is not prime");
  if (p == 2) throw Error(ErrorCode::EvenCharacteristic, "characteristic 2 is not supported");
  if (k == 0) throw Error(ErrorCode::BadModulus, "extension degree must be at least 1");
  if (k == 1 && !modulus) return prime(p);
  if (k > kMaxDegree) throw Error(ErrorCode::FieldTooLarge, "extension degree too large");
  std::uint64_t q = 1;
  for (unsigned i = 0; i < k; ++i) {
    if (q > kMaxOrder / p) {
      throw Error(ErrorCode::FieldTooLarge,
                  std::to_string(p) + "^" + std::to_string(k) + " exceeds desk scale");
    }
    q *= p;
  }

  Poly monic;
  if (modulus) {
    monic = *modulus;
    if (monic.size() == k) monic.push_back(1);
    if (monic.size() != k + 1 || monic.back() != 1) {
      throw Error(ErrorCode::BadModulus, "modulus must be monic of degree " + std::to_string(k));
    }
    for (const auto c : monic) {
      if (c >= p) throw Error(ErrorCode::BadModulus, "modulus coefficient out of range");
    }
    if (!is_irreducible(monic, p)) {
      throw Error(ErrorCode::ReducibleModulus, "modulus is reducible over F_" + std::to_string(p));
    }
  } else {
    monic.assign(k + 1, 0);
    monic[k] = 1;
    while (!is_irreducible(monic, p)) {
      std::size_t i = 0;
      while (i < k && ++monic[i] == p) monic[i++] = 0;
    }
  }
  if (k == 1) return prime(p);

  detail::FieldData data;
  data.p = p;
  data.k = k;
  data.q = q;
  data.modulus = std::move(monic);
  return finish(std::move(data));
}

Field Field::of_order(std::uint64_t q) {
  if (q >= 2 && q % 2 == 0 && prime_power_root(q).prime == 2) {
    throw Error(ErrorCode::EvenCharacteristic, "q = " + std::to_string(q) + " is even");
  }
  const auto root = prime_power_root(q);
  if (root.prime == 0) {
    throw Error(ErrorCode::NotPrimePower, std::to_string(q) + " is not a prime power");
  }
  return root.exponent == 1 ? prime(root.prime) : extension(root.prime, root.exponent);
}

std::string Field::modulus_text() const {
  if (k() == 1) return "";
  std::string out;
  for (std::size_t deg = data_->modulus.size(); deg-- > 0;) {
    const auto c = data_->modulus[deg];
    if (c == 0) continue;
    if (!out.empty()) out += "+";
    if (deg == 0) {
      out += std::to_string(c);
      continue;
    }
    if (c != 1) out += std::to_string(c);
    out += "t";
    if (deg > 1) out += "^" + std::to_string(deg);
  }
  return out;
}

FieldElement Field::generator() const { return FieldElement(*this, data_->generator); }

FieldElement Field::element(Encoding e) const {
  if (e >= q()) {
    throw Error(ErrorCode::SyntaxError,
                "encoding " + std::to_string(e) + " out of range for q = " + std::to_string(q()));
  }
  return FieldElement(*this, e);
}

FieldElement Field::from_integer(std::int64_t n) const {
  const auto p_signed = static_cast<std::int64_t>(p());
  std::int64_t r = n % p_signed;
  if (r < 0) r += p_signed;
  return FieldElement(*this, static_cast<Encoding>(r));
}

FieldElement Field::from_coefficients(std::span<const std::uint64_t> coeffs) const {
  if (coeffs.size() > k()) {
    throw Error(ErrorCode::SyntaxError, "too many coefficients for extension degree " +
                                            std::to_string(k()));
  }
  std::vector<std::uint64_t> reduced(coeffs.begin(), coeffs.end());
  for (auto& c : reduced) c %= p();
  return FieldElement(*this, encode(reduced));
}

FieldElement Field::zero() const { return FieldElement(*this, 0); }
FieldElement Field::one() const { return FieldElement(*this, 1); }

FieldElement Field::parse_element(std::string_view text) const {
  const std::string_view whole = text;
  text = trim(text);
  if (text.empty()) throw Error(ErrorCode::SyntaxError, "empty element");
  if (text.starts_with("enc:")) return element(parse_u64(text.substr(4), whole));
  if (text.starts_with("g^")) return FieldElement(*this, pow(generator_encoding(), parse_u64(text.substr(2), whole)));
  if (text.find(',') != std::string_view::npos) {
    std::vector<std::uint64_t> coeffs;
    std::size_t start = 0;
    while (true) {
      const auto comma = text.find(',', start);
      coeffs.push_back(parse_u64(text.substr(start, comma - start), whole));
      if (comma == std::string_view::npos) break;
      start = comma + 1;
    }
    return from_coefficients(coeffs);
  }
  const bool negative = text.front() == '-';
  if (negative) text.remove_prefix(1);
  const std::uint64_t value = parse_u64(text, whole) % p();
  const FieldElement e(*this, value);
  return negative ? permcycle::neg(e) : e;
}

std::string Field::format_element(Encoding e) const {
  if (k() == 1 || e < p()) return std::to_string(e);
  auto coeffs = coefficients(e);
  while (coeffs.size() > 1 && coeffs.back() == 0) coeffs.pop_back();
  std::string out;
  for (std::size_t i = 0; i < coeffs.size(); ++i) {
    if (i) out += ",";
    out += std::to_string(coeffs[i]);
  }
  return out;
}

std::vector<std::uint64_t> Field::coefficients(Encoding e) const {
  std::vector<std::uint64_t> out(k());
  for (auto& c : out) {
    c = e % p();
    e /= p();
  }
  return out;
}

Encoding Field::encode(std::span<const std::uint64_t> coeffs) const {
  Encoding e = 0;
  for (std::size_t i = 0; i < coeffs.size() && i < k(); ++i) e += (coeffs[i] % p()) * data_->p_pow[i];
  return e;
}

Encoding Field::add_ext(Encoding a, Encoding b, bool subtract) const noexcept {
  const std::uint64_t p = data_->p;
  Encoding out = 0;
  for (unsigned i = 0; i < data_->k; ++i) {
    const std::uint64_t da = a % p;
    const std::uint64_t db = b % p;
    a /= p;
    b /= p;
    std::uint64_t s = subtract ? da + p - db : da + db;
    if (s >= p) s -= p;
    out += s * data_->p_pow[i];
  }
  return out;
}

Encoding Field::mul_ext(Encoding a, Encoding b) const noexcept {
  const std::uint64_t p = data_->p;
  const unsigned k = data_->k;
  std::array<std::uint64_t, kMaxDegree> da{};
  std::array<std::uint64_t, kMaxDegree> db{};
  for (unsigned i = 0; i < k; ++i) {
    da[i] = a % p;
    a /= p;
    db[i] = b % p;
    b /= p;
  }
  // p^2 < 2^32 for k >= 2, so k unreduced products fit easily.
  std::array<std::uint64_t, 2 * kMaxDegree> prod{};
  for (unsigned i = 0; i < k; ++i) {
    if (da[i] == 0) continue;
    for (unsigned j = 0; j < k; ++j) prod[i + j] += da[i] * db[j];
  }
  for (unsigned i = 0; i + 1 < 2 * k; ++i) prod[i] %= p;
  const auto& mod = data_->modulus;
  for (unsigned deg = 2 * k - 2; deg >= k; --deg) {
    const std::uint64_t c = prod[deg];
    if (c == 0) continue;
    for (unsigned i = 0; i < k; ++i) {
      prod[deg - k + i] = (prod[deg - k + i] + (p - c) * mod[i]) % p;
    }
  }
  Encoding out = 0;
  for (unsigned i = k; i-- > 0;) out = out * p + prod[i];
  return out;
}

Encoding Field::pow(Encoding a, std::uint64_t n) const noexcept {
  Encoding result = 1;
  while (n > 0) {
    if (n & 1) result = mul(result, a);
    n >>= 1;
    if (n) a = mul(a, a);
  }
  return result;
}

std::uint64_t Field::order(Encoding a) const noexcept {
  std::uint64_t n = data_->q - 1;
  for (const auto& [prime, exponent] : data_->q_minus_1_factors) {
    for (unsigned e = 0; e < exponent; ++e) {
      if (pow(a, n / prime) != 1) break;
      n /= prime;
    }
  }
  return n;
}

bool Field::same_as(const Field& other) const noexcept {
  if (data_ == other.data_) return true;
  return data_->p == other.data_->p && data_->k == other.data_->k &&
         data_->modulus == other.data_->modulus;
}

FieldElement::FieldElement(Field field, Encoding encoding)
    : field_(std::move(field)), encoding_(encoding) {}

void require_same_field(const Field& a, const Field& b) {
  if (!a.same_as(b)) {
    throw Error(ErrorCode::FieldMismatch, "operands belong to F_" + std::to_string(a.q()) +
                                              " and F_" + std::to_string(b.q()));
  }
}

FieldElement add(const FieldElement& a, const FieldElement& b) {
  require_same_field(a.field(), b.field());
  return FieldElement(a.field(), a.field().add(a.encoding(), b.encoding()));
}

FieldElement sub(const FieldElement& a, const FieldElement& b) {
  require_same_field(a.field(), b.field());
  return FieldElement(a.field(), a.field().sub(a.encoding(), b.encoding()));
}

FieldElement mul(const FieldElement& a, const FieldElement& b) {
  require_same_field(a.field(), b.field());
  return FieldElement(a.field(), a.field().mul(a.encoding(), b.encoding()));
}

FieldElement neg(const FieldElement& a) {
  return FieldElement(a.field(), a.field().neg(a.encoding()));
}

FieldElement inv(const FieldElement& a) {
  if (a.is_zero()) throw Error(ErrorCode::ZeroInverse, "0 has no inverse");
  return FieldElement(a.field(), a.field().inv(a.encoding()));
}

FieldElement pow(const FieldElement& a, std::uint64_t n) {
  return FieldElement(a.field(), a.field().pow(a.encoding(), n));
}

std::uint64_t element_order(const FieldElement& a) {
  if (a.is_zero()) throw Error(ErrorCode::ZeroOrder, "0 has no multiplicative order");
  return a.field().order(a.encoding());
}

FieldElement find_generator(const Field& field) {
  const std::uint64_t n = field.q() - 1;
  for (Encoding e = 1; e < field.q(); ++e) {
    bool primitive = true;
    for (const auto& pp : field.q_minus_1_factors()) {
      if (field.pow(e, n / pp.prime) == 1) {
        primitive = false;
        break;
      }
    }
    if (primitive) return FieldElement(field, e);
  }
  // Unreachable: F_q^* is cyclic.
  throw std::logic_error("no generator found");
}

std::vector<FieldElement> subgroup_elements(const Field& field, std::uint64_t m) {
  if (m == 0 || (field.q() - 1) % m != 0) {
    throw Error(ErrorCode::OrderNotDividing,
                std::to_string(m) + " does not divide " + std::to_string(field.q() - 1));
  }
  const Encoding h = field.pow(field.generator_encoding(), (field.q() - 1) / m);
  std::vector<FieldElement> out;
  out.reserve(m);
  Encoding x = 1;
  for (std::uint64_t j = 0; j < m; ++j) {
    out.emplace_back(field, x);
    x = field.mul(x, h);
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<FieldElement> elements_of_order(const Field& field, std::uint64_t m) {
  if (m == 0 || (field.q() - 1) % m != 0) return {};
  const Encoding h = field.pow(field.generator_encoding(), (field.q() - 1) / m);
  std::vector<FieldElement> out;
  Encoding x = 1;
  for (std::uint64_t j = 0; j < m; ++j) {
    if (std::gcd(j, m) == 1) out.emplace_back(field, x);
    x = field.mul(x, h);
  }
  std::sort(out.begin(), out.end());
  return out;
}

FieldElement root_of_unity(const Field& field, std::uint64_t r) {
  if (r == 0 || (field.q() - 1) % r != 0) {
    throw Error(ErrorCode::OrderNotDividing,
                std::to_string(r) + " does not divide " + std::to_string(field.q() - 1));
  }
  return FieldElement(field, field.pow(field.generator_encoding(), (field.q() - 1) / r));
}

std::uint64_t discrete_log(const FieldElement& x) {
  if (x.is_zero()) throw Error(ErrorCode::ZeroLog, "log of 0 is undefined");
  const Field& field = x.field();
  const std::uint64_t n = field.q() - 1;
  auto steps = static_cast<std::uint64_t>(std::sqrt(static_cast<double>(n)));
  while (steps * steps < n) ++steps;

  std::unordered_map<Encoding, std::uint64_t> baby;
  baby.reserve(steps);
  Encoding power = 1;
  for (std::uint64_t j = 0; j < steps; ++j) {
    baby.emplace(power, j);
    power = field.mul(power, field.generator_encoding());
  }
  // power == g^steps; walk x * g^(-steps * i).
  const Encoding giant = field.inv(power);
  Encoding gamma = x.encoding();
  for (std::uint64_t i = 0; i <= steps; ++i) {
    if (const auto it = baby.find(gamma); it != baby.end()) return (i * steps + it->second) % n;
    gamma = field.mul(gamma, giant);
  }
  throw std::logic_error("discrete log not found");
}

}  // namespace permcycle
