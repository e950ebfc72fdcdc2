#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <string_view>
#include <vector>

namespace permcycle {

struct CyclePart {
  std::uint64_t length;
  std::uint64_t multiplicity;

  friend bool operator==(const CyclePart&, const CyclePart&) = default;
};

/// Multiset of cycle lengths, canonically sorted by length with equal
/// lengths merged. Text form "1+3^4"; the exponent is omitted for
/// multiplicity 1.
class CycleType {
 public:
  CycleType() = default;

  static CycleType from_lengths(const std::map<std::uint64_t, std::uint64_t>& counts);
  /// Parses the canonical text form; unmerged or unsorted input is
  /// normalized. Throws SyntaxError.
  static CycleType parse(std::string_view text);

  void add(std::uint64_t length, std::uint64_t multiplicity);

  const std::vector<CyclePart>& parts() const noexcept { return parts_; }
  /// Sum of length * multiplicity, i.e. the size of the permuted set.
  std::uint64_t total() const noexcept;
  std::uint64_t multiplicity_of(std::uint64_t length) const noexcept;
  std::string to_string() const;

  friend bool operator==(const CycleType&, const CycleType&) = default;

 private:
  std::vector<CyclePart> parts_;
};

}  // namespace permcycle
