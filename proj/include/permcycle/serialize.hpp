#pragma once

// JSON and TSV forms of the library's values. Key order is fixed so that
// identical inputs always produce byte-identical output.

#include <string>
#include <vector>

#include <json.hpp>

#include "permcycle/construction.hpp"
#include "permcycle/family_enum.hpp"
#include "permcycle/sparse_poly.hpp"

namespace permcycle {

using Json = nlohmann::ordered_json;

/// {"terms": [[exponent, coefficient encoding], ...], "text": "..."}
Json poly_to_json(const SparsePolynomial& f);
/// Reads the "terms" array; "text" is ignored.
SparsePolynomial poly_from_json(const Field& field, const Json& j);

Json field_to_json(const Field& field);
Json construction_to_json(const Construction& c);
Json report_to_json(const VerificationReport& r);
Json row_to_json(const FamilyRow& row);

/// Header plus one line per row, tab separated, LF terminated. Columns:
/// family, m, d, cycle_type, count, verified (+ distinct when requested).
std::string rows_to_tsv(const std::vector<FamilyRow>& rows, bool with_distinct);

}  // namespace permcycle
