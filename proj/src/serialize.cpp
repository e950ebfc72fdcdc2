#include "permcycle/serialize.hpp"

#include <sstream>

namespace permcycle {

Json poly_to_json(const SparsePolynomial& f) {
  Json terms = Json::array();
  for (const auto& t : f.terms()) terms.push_back(Json::array({t.exponent, t.coefficient}));
  Json out;
  out["terms"] = std::move(terms);
  out["text"] = f.format();
  return out;
}

SparsePolynomial poly_from_json(const Field& field, const Json& j) {
  if (!j.is_object() || !j.contains("terms") || !j["terms"].is_array()) {
    throw Error(ErrorCode::SyntaxError, "polynomial JSON needs a \"terms\" array");
  }
  std::vector<Term> terms;
  for (const auto& t : j["terms"]) {
    if (!t.is_array() || t.size() != 2 || !t[0].is_number_unsigned() || !t[1].is_number_unsigned()) {
      throw Error(ErrorCode::SyntaxError, "each term must be [exponent, encoding]");
    }
    terms.push_back({t[0].get<std::uint64_t>(), field.element(t[1].get<Encoding>()).encoding()});
  }
  return SparsePolynomial::canonicalize(field, std::move(terms));
}

Json field_to_json(const Field& field) {
  Json out;
  out["q"] = field.q();
  out["p"] = field.p();
  out["k"] = field.k();
  out["modulus"] = field.k() == 1 ? Json(nullptr) : Json(field.modulus());
  out["generator"] = field.generator_encoding();
  return out;
}

Json construction_to_json(const Construction& c) {
  Json out;
  out["q"] = c.field.q();
  out["p"] = c.field.p();
  out["k"] = c.field.k();
  out["modulus"] = c.field.k() == 1 ? Json(nullptr) : Json(c.field.modulus());
  out["family"] = family_tag(c.family);
  out["r"] = c.r;
  out["m"] = c.m;
  out["d"] = c.d;
  Json units = Json::array();
  for (const auto& u : c.units) units.push_back(u.encoding());
  out["units"] = std::move(units);
  out["unit_orders"] = c.unit_orders;
  out["poly"] = poly_to_json(c.poly);
  out["inverse_poly"] = poly_to_json(c.inverse_poly);
  out["predicted_cycle_type"] = c.predicted.to_string();
  out["term_count"] = c.term_count();
  out["phi_at_least_r"] = c.phi_at_least_r;
  return out;
}

Json report_to_json(const VerificationReport& r) {
  Json out;
  out["is_permutation"] = r.is_permutation;
  out["cycle_type"] = r.cycle_type ? Json(r.cycle_type->to_string()) : Json(nullptr);
  out["fixed_points"] = r.fixed_points;
  out["matches_predicted"] = r.matches_predicted;
  out["inverse_ok"] = r.inverse_ok;
  out["coset_law_ok"] = r.coset_law_ok;
  return out;
}

Json row_to_json(const FamilyRow& row) {
  Json out;
  out["family"] = family_tag(row.family);
  out["m"] = row.m;
  out["d"] = row.d;
  out["cycle_type"] = row.cycle_type.to_string();
  out["count"] = row.count;
  out["closed_form"] = row.closed_form;
  out["verified"] = row.verified;
  if (row.distinct) out["distinct"] = *row.distinct;
  return out;
}

std::string rows_to_tsv(const std::vector<FamilyRow>& rows, bool with_distinct) {
  std::ostringstream out;
  out << "family\tm\td\tcycle_type\tcount\tverified";
  if (with_distinct) out << "\tdistinct";
  out << '\n';
  for (const auto& row : rows) {
    out << family_tag(row.family) << '\t' << row.m << '\t' << row.d << '\t' << row.cycle_type.to_string()
        << '\t' << row.count << '\t' << (row.verified ? "true" : "false");
    if (with_distinct) out << '\t' << row.distinct.value_or(0);
    out << '\n';
  }
  return out.str();
}

}  // namespace permcycle
