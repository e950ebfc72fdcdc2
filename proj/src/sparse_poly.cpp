#include "permcycle/sparse_poly.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>

namespace permcycle {

SparsePolynomial SparsePolynomial::canonicalize(
    const Field& field, const std::vector<std::pair<std::int64_t, FieldElement>>& raw) {
  std::vector<Term> terms;
  terms.reserve(raw.size());
  for (const auto& [exponent, coeff] : raw) {
    require_same_field(field, coeff.field());
    if (exponent < 0) {
      throw Error(ErrorCode::NegativeExponent, "exponent " + std::to_string(exponent));
    }
    terms.push_back({static_cast<std::uint64_t>(exponent), coeff.encoding()});
  }
  return canonicalize(field, std::move(terms));
}

SparsePolynomial SparsePolynomial::canonicalize(const Field& field, std::vector<Term> raw) {
  std::stable_sort(raw.begin(), raw.end(),
                   [](const Term& a, const Term& b) { return a.exponent > b.exponent; });
  SparsePolynomial out(field);
  for (const auto& t : raw) {
    if (!out.terms_.empty() && out.terms_.back().exponent == t.exponent) {
      out.terms_.back().coefficient = field.add(out.terms_.back().coefficient, t.coefficient);
    } else {
      out.terms_.push_back(t);
    }
  }
  std::erase_if(out.terms_, [](const Term& t) { return t.coefficient == 0; });
  return out;
}

Encoding SparsePolynomial::evaluate(Encoding x) const noexcept {
  Encoding sum = 0;
  for (const auto& t : terms_) sum = field_.add(sum, field_.mul(t.coefficient, field_.pow(x, t.exponent)));
  return sum;
}

FieldElement SparsePolynomial::evaluate(const FieldElement& x) const {
  require_same_field(field_, x.field());
  return FieldElement(field_, evaluate(x.encoding()));
}

std::string SparsePolynomial::format() const {
  if (terms_.empty()) return "0";
  std::string out;
  for (const auto& t : terms_) {
    if (!out.empty()) out += "+";
    const std::string coeff = field_.format_element(t.coefficient);
    if (t.exponent == 0) {
      out += coeff;
      continue;
    }
    if (t.coefficient != 1) {
      out += coeff;
      if (coeff.find(',') != std::string::npos) out += "*";
    }
    out += "x";
    if (t.exponent > 1) out += "^" + std::to_string(t.exponent);
  }
  return out;
}

namespace {

class PolyParser {
 public:
  PolyParser(const Field& field, std::string_view text) : field_(field), original_(text) {
    for (std::size_t i = 0; i < text.size(); ++i) {
      if (!std::isspace(static_cast<unsigned char>(text[i]))) {
        stripped_ += text[i];
        positions_.push_back(i);
      }
    }
  }

  SparsePolynomial run() {
    std::vector<Term> terms;
    if (stripped_.empty()) fail("empty polynomial");
    bool negative = false;
    if (peek() == '-' || peek() == '+') negative = take() == '-';
    while (true) {
      Term term = parse_term();
      if (negative) term.coefficient = field_.neg(term.coefficient);
      terms.push_back(term);
      if (at_end()) break;
      const char sep = take();
      if (sep != '+' && sep != '-') fail("expected '+' or '-'");
      negative = sep == '-';
    }
    return SparsePolynomial::canonicalize(field_, std::move(terms));
  }

 private:
  bool at_end() const { return pos_ >= stripped_.size(); }
  char peek() const { return at_end() ? '\0' : stripped_[pos_]; }
  char take() { return stripped_[pos_++]; }

  [[noreturn]] void fail(const std::string& what) const {
    const std::size_t where = pos_ < positions_.size() ? positions_[pos_] : original_.size();
    throw Error(ErrorCode::SyntaxError, what + " at position " + std::to_string(where) + " in '" +
                                            std::string(original_) + "'");
  }

  std::uint64_t parse_exponent() {
    const std::size_t start = pos_;
    while (!at_end() && std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
    if (start == pos_) fail("expected exponent");
    std::uint64_t value = 0;
    const auto [ptr, ec] =
        std::from_chars(stripped_.data() + start, stripped_.data() + pos_, value);
    if (ec != std::errc{}) fail("exponent out of range");
    return value;
  }

  Term parse_term() {
    // Coefficient: everything up to 'x' or the next top-level sign.
    const std::size_t start = pos_;
    while (!at_end() && peek() != 'x' && peek() != '+' && !(peek() == '-' && pos_ > start)) {
      ++pos_;
    }
    std::string_view coeff_text(stripped_.data() + start, pos_ - start);
    if (coeff_text.ends_with('*')) {
      coeff_text.remove_suffix(1);
      if (peek() != 'x') fail("expected 'x' after '*'");
    }
    Encoding coeff = 1;
    if (!coeff_text.empty()) {
      try {
        coeff = field_.parse_element(coeff_text).encoding();
      } catch (const Error&) {
        pos_ = start;
        fail("bad coefficient '" + std::string(coeff_text) + "'");
      }
    }
    if (peek() != 'x') {
      if (coeff_text.empty()) fail("expected term");
      return {0, coeff};
    }
    take();
    std::uint64_t exponent = 1;
    if (peek() == '^') {
      take();
      exponent = parse_exponent();
    }
    return {exponent, coeff};
  }

  const Field& field_;
  std::string_view original_;
  std::string stripped_;
  std::vector<std::size_t> positions_;
  std::size_t pos_ = 0;
};

}  // namespace

SparsePolynomial SparsePolynomial::parse(const Field& field, std::string_view text) {
  return PolyParser(field, text).run();
}

}  // namespace permcycle
