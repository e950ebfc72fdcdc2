#include "permcycle/cycle_type.hpp"

#include <algorithm>
#include <charconv>

#include "permcycle/error.hpp"

namespace permcycle {

CycleType CycleType::from_lengths(const std::map<std::uint64_t, std::uint64_t>& counts) {
  CycleType out;
  for (const auto& [length, multiplicity] : counts) out.add(length, multiplicity);
  return out;
}

void CycleType::add(std::uint64_t length, std::uint64_t multiplicity) {
  if (multiplicity == 0) return;
  const auto it = std::lower_bound(parts_.begin(), parts_.end(), length,
                                   [](const CyclePart& p, std::uint64_t l) { return p.length < l; });
  if (it != parts_.end() && it->length == length) {
    it->multiplicity += multiplicity;
  } else {
    parts_.insert(it, {length, multiplicity});
  }
}

std::uint64_t CycleType::total() const noexcept {
  std::uint64_t sum = 0;
  for (const auto& part : parts_) sum += part.length * part.multiplicity;
  return sum;
}

std::uint64_t CycleType::multiplicity_of(std::uint64_t length) const noexcept {
  for (const auto& part : parts_) {
    if (part.length == length) return part.multiplicity;
  }
  return 0;
}

std::string CycleType::to_string() const {
  std::string out;
  for (const auto& part : parts_) {
    if (!out.empty()) out += "+";
    out += std::to_string(part.length);
    if (part.multiplicity != 1) out += "^" + std::to_string(part.multiplicity);
  }
  return out;
}

CycleType CycleType::parse(std::string_view text) {
  CycleType out;
  auto number = [&](std::string_view s) {
    std::uint64_t v = 0;
    const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (s.empty() || ec != std::errc{} || ptr != s.data() + s.size() || v == 0) {
      throw Error(ErrorCode::SyntaxError, "bad cycle type '" + std::string(text) + "'");
    }
    return v;
  };
  std::size_t start = 0;
  while (start <= text.size()) {
    const auto plus = text.find('+', start);
    const auto part = text.substr(start, plus == std::string_view::npos ? text.npos : plus - start);
    const auto caret = part.find('^');
    if (caret == std::string_view::npos) {
      out.add(number(part), 1);
    } else {
      out.add(number(part.substr(0, caret)), number(part.substr(caret + 1)));
    }
    if (plus == std::string_view::npos) break;
    start = plus + 1;
  }
  return out;
}

}  // namespace permcycle
