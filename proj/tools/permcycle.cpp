// permcycle: construct, verify and enumerate permutation polynomials of
// prescribed cycle type over odd-order finite fields.
//
// Exit status: 0 success, 1 a verification or permutation check failed,
// 2 usage or precondition error.

#include <cstdint>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "permcycle/construction.hpp"
#include "permcycle/family_enum.hpp"
#include "permcycle/field.hpp"
#include "permcycle/perm_analyzer.hpp"
#include "permcycle/serialize.hpp"
#include "permcycle/sparse_poly.hpp"

namespace {

using namespace permcycle;

constexpr int kExitOk = 0;
constexpr int kExitCheckFailed = 1;
constexpr int kExitUsage = 2;

struct FieldOptions {
  std::optional<std::uint64_t> q;
  std::optional<std::uint64_t> p;
  std::optional<unsigned> k;
  std::optional<std::string> modulus;
};

struct Options {
  FieldOptions field;
  std::string format;
  std::string family;
  std::uint64_t m = 0;
  std::uint64_t r = 0;
  std::string units;
  std::string poly;
  std::string expect;
  bool no_verify = false;
  bool verify_all = false;
  bool distinct = false;
  bool mixed = false;
};

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

void add_field_options(CLI::App* cmd, FieldOptions& f) {
  auto* q = cmd->add_option("--q", f.q, "field order (odd prime power)");
  auto* p = cmd->add_option("--p", f.p, "characteristic (odd prime)");
  auto* k = cmd->add_option("--k", f.k, "extension degree (default 1)")->needs(p);
  cmd->add_option("--modulus", f.modulus, "irreducible modulus, coefficients least degree first")->needs(p);
  q->excludes(p)->excludes(k);
}

std::vector<std::uint64_t> parse_number_list(const std::string& text) {
  std::vector<std::uint64_t> out;
  std::stringstream in(text);
  std::string item;
  while (std::getline(in, item, ',')) {
    try {
      std::size_t used = 0;
      out.push_back(std::stoull(item, &used));
      if (used != item.size()) throw std::invalid_argument(item);
    } catch (const std::exception&) {
      throw UsageError("bad number '" + item + "' in '" + text + "'");
    }
  }
  return out;
}

Field select_field(const FieldOptions& f) {
  if (f.q) return Field::of_order(*f.q);
  if (!f.p) throw UsageError("select a field with --q or --p/--k");
  const unsigned k = f.k.value_or(1);
  std::optional<std::vector<std::uint64_t>> modulus;
  if (f.modulus) modulus = parse_number_list(*f.modulus);
  if (k == 1 && !modulus) return Field::prime(*f.p);
  return Field::extension(*f.p, k, modulus);
}

// ';' separates units when present, so extension-field coefficient lists
// can be written "1,2;0,1". Otherwise ',' separates.
std::vector<FieldElement> parse_units(const Field& field, const std::string& text) {
  const char sep = text.find(';') != std::string::npos ? ';' : ',';
  std::vector<FieldElement> out;
  std::stringstream in(text);
  std::string item;
  while (std::getline(in, item, sep)) out.push_back(field.parse_element(item));
  if (out.empty()) throw UsageError("no units given");
  return out;
}

void print(const Json& j) { std::cout << j.dump() << '\n'; }

int cmd_field(const Options& o) {
  const Field field = select_field(o.field);
  const std::uint64_t n = field.q() - 1;
  const auto divs = divisors(field.q_minus_1_factors());
  auto pairs_for = [&](std::uint64_t r) {
    Json pairs = Json::array();
    for (const auto& [m, d] : factor_pairs(field, r)) pairs.push_back(Json::array({m, d}));
    return pairs;
  };

  if (o.format == "json") {
    Json out = field_to_json(field);
    Json factors = Json::array();
    for (const auto& pp : field.q_minus_1_factors()) factors.push_back(Json::array({pp.prime, pp.exponent}));
    out["q_minus_1_factors"] = std::move(factors);
    Json table = Json::array();
    for (const auto m : divs) {
      Json row;
      row["m"] = m;
      row["d"] = n / m;
      row["phi"] = euler_phi(m);
      table.push_back(std::move(row));
    }
    out["divisors"] = std::move(table);
    Json pairs;
    pairs["BIN"] = pairs_for(2);
    pairs["TRI"] = pairs_for(3);
    pairs["GEOM_SUM"] = pairs_for(1);
    out["pairs"] = std::move(pairs);
    print(out);
    return kExitOk;
  }

  std::cout << "q\t" << field.q() << '\n'
            << "p\t" << field.p() << '\n'
            << "k\t" << field.k() << '\n'
            << "modulus\t" << (field.k() == 1 ? "-" : field.modulus_text()) << '\n'
            << "generator\t" << field.generator_encoding() << '\n';
  std::cout << "m\td\tphi\tBIN\tTRI\n";
  for (const auto m : divs) {
    const std::uint64_t d = n / m;
    std::cout << m << '\t' << d << '\t' << euler_phi(m) << '\t' << (d % 2 == 0 ? "yes" : "no") << '\t'
              << (d % 3 == 0 ? "yes" : "no") << '\n';
  }
  return kExitOk;
}

int cmd_construct(const Options& o) {
  const Field field = select_field(o.field);
  const Family family = parse_family(o.family);
  const auto units = parse_units(field, o.units);
  const std::uint64_t r = family == Family::Cyclo ? o.r : 0;
  if (family == Family::Cyclo && r == 0) throw UsageError("--family cyclo needs --r");
  const Construction c = construct(field, family, o.m, r, units);

  Json out = construction_to_json(c);
  bool ok = true;
  if (o.no_verify) {
    out["verified"] = nullptr;
  } else {
    Verifier verifier(field);
    const auto report = verifier.verify(c);
    ok = report.passed();
    out["verified"] = ok;
    out["verification"] = report_to_json(report);
  }
  if (o.format == "text") {
    std::cout << "family\t" << family_tag(c.family) << '\n'
              << "poly\t" << c.poly.format() << '\n'
              << "inverse_poly\t" << c.inverse_poly.format() << '\n'
              << "predicted_cycle_type\t" << c.predicted.to_string() << '\n'
              << "verified\t" << (o.no_verify ? "skipped" : ok ? "true" : "false") << '\n';
  } else {
    print(out);
  }
  if (!ok) {
    std::cerr << "VERIFICATION FAILED for " << c.poly.format() << " over F_" << field.q()
              << ": the construction does not behave as predicted\n";
    return kExitCheckFailed;
  }
  return kExitOk;
}

int cmd_verify(const Options& o) {
  const Field field = select_field(o.field);
  const SparsePolynomial f = SparsePolynomial::parse(field, o.poly);
  const PermTable table = eval_table(f);
  const bool bijective = is_permutation(table);
  std::optional<CycleType> type;
  if (bijective) type = cycle_type(table);
  std::optional<bool> matches;
  if (!o.expect.empty()) matches = type && *type == CycleType::parse(o.expect);

  if (o.format == "text") {
    std::cout << "poly\t" << f.format() << '\n'
              << "is_permutation\t" << (bijective ? "true" : "false") << '\n'
              << "cycle_type\t" << (type ? type->to_string() : "-") << '\n';
    if (bijective) {
      std::cout << "fixed_points\t";
      const auto fixed = fixed_points(table);
      for (std::size_t i = 0; i < fixed.size(); ++i) std::cout << (i ? "," : "") << fixed[i];
      std::cout << '\n';
    }
    if (matches) std::cout << "matches_predicted\t" << (*matches ? "true" : "false") << '\n';
  } else {
    Json out;
    out["is_permutation"] = bijective;
    out["cycle_type"] = type ? Json(type->to_string()) : Json(nullptr);
    out["fixed_points"] = bijective ? Json(fixed_points(table)) : Json::array();
    out["matches_predicted"] = matches ? Json(*matches) : Json(nullptr);
    print(out);
  }
  return bijective && matches.value_or(true) ? kExitOk : kExitCheckFailed;
}

int cmd_enumerate(const Options& o) {
  const Field field = select_field(o.field);
  const Family family = parse_family(o.family);
  if (family == Family::Cyclo && o.r == 0) throw UsageError("--family cyclo needs --r");
  CheckOptions check;
  check.verify = !o.no_verify;
  check.distinct = o.distinct;
  check.pool = o.mixed ? UnitPool::Mixed : UnitPool::EqualOrder;

  const FamilyCheck result = check_family(
      field, family, o.m, o.r, check, [](const Construction& c, const VerificationReport* report) {
        Json line = construction_to_json(c);
        line["verified"] = report ? Json(report->passed()) : Json(nullptr);
        print(line);
      });
  Json summary;
  summary["family"] = family_tag(family);
  summary["m"] = o.m;
  summary["d"] = (field.q() - 1) / o.m;
  summary["pool"] = o.mixed ? "mixed" : "equal_order";
  summary["count"] = result.count;
  summary["closed_form"] = result.closed_form;
  summary["verified"] = check.verify ? Json(result.verified) : Json(nullptr);
  summary["failures"] = result.failures;
  if (result.distinct) summary["distinct"] = *result.distinct;
  Json wrapper;
  wrapper["summary"] = std::move(summary);
  print(wrapper);
  if (check.verify && !result.verified) {
    std::cerr << "VERIFICATION FAILED for " << result.failures << " construction(s)\n";
    return kExitCheckFailed;
  }
  return kExitOk;
}

int cmd_table(const Options& o) {
  const Field field = select_field(o.field);
  if (o.no_verify && o.verify_all) throw UsageError("--verify-all and --no-verify conflict");
  CheckOptions check;
  check.verify = !o.no_verify;
  check.distinct = o.distinct;
  const auto rows = reproduce_table(field, check);
  if (o.format == "json") {
    Json out = Json::array();
    for (const auto& row : rows) out.push_back(row_to_json(row));
    print(out);
  } else {
    std::cout << rows_to_tsv(rows, o.distinct);
  }
  for (const auto& row : rows) {
    if (row.count != row.closed_form) {
      std::cerr << "COUNT MISMATCH for " << family_tag(row.family) << " m=" << row.m << ": enumerated "
                << row.count << ", closed form " << row.closed_form << '\n';
      return kExitCheckFailed;
    }
    if (check.verify && !row.verified) {
      std::cerr << "VERIFICATION FAILED for " << family_tag(row.family) << " m=" << row.m << '\n';
      return kExitCheckFailed;
    }
  }
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Permutation polynomials of prescribed cycle type over odd-order finite fields"};
  app.require_subcommand(1);
  Options o;

  auto* field = app.add_subcommand("field", "describe a field and the valid (m, d) pairs");
  add_field_options(field, o.field);
  field->add_option("--format", o.format, "text or json")
      ->check(CLI::IsMember({"text", "json"}))
      ->default_val("text");

  auto* construct_cmd = app.add_subcommand("construct", "build one construction and verify it");
  add_field_options(construct_cmd, o.field);
  construct_cmd->add_option("--family", o.family, "bin, tri, cyclo or geomsum")->required();
  construct_cmd->add_option("--m", o.m, "order of the subgroup H_0")->required();
  construct_cmd->add_option("--r", o.r, "number of coset classes (cyclo)");
  construct_cmd->add_option("--units", o.units, "units, e.g. 3,9 or g^4,g^8 or 1,2;0,1")->required();
  construct_cmd->add_flag("--no-verify", o.no_verify, "skip the exhaustive check");
  construct_cmd->add_option("--format", o.format, "json or text")
      ->check(CLI::IsMember({"json", "text"}))
      ->default_val("json");

  auto* verify = app.add_subcommand("verify", "check whether a polynomial permutes the field");
  add_field_options(verify, o.field);
  verify->add_option("--poly", o.poly, "polynomial, e.g. \"3x^7+6x\"")->required();
  verify->add_option("--expect", o.expect, "expected cycle type, e.g. 1+3^4");
  verify->add_option("--format", o.format, "json or text")
      ->check(CLI::IsMember({"json", "text"}))
      ->default_val("json");

  auto* enumerate = app.add_subcommand("enumerate", "stream every member of a family as JSON lines");
  add_field_options(enumerate, o.field);
  enumerate->add_option("--family", o.family, "bin, tri, cyclo or geomsum")->required();
  enumerate->add_option("--m", o.m, "order of the subgroup H_0")->required();
  enumerate->add_option("--r", o.r, "number of coset classes (cyclo)");
  enumerate->add_flag("--mixed", o.mixed, "draw units from all of H_0, not only order-m elements");
  enumerate->add_flag("--no-verify", o.no_verify, "skip the exhaustive check");
  enumerate->add_flag("--distinct", o.distinct, "also count distinct polynomials");

  auto* table = app.add_subcommand("table", "count and verify every BIN and TRI family of a field");
  add_field_options(table, o.field);
  table->add_flag("--verify-all", o.verify_all, "verify every member (default)");
  table->add_flag("--no-verify", o.no_verify, "count only");
  table->add_flag("--distinct", o.distinct, "add a column of distinct polynomial counts");
  table->add_option("--format", o.format, "tsv or json")
      ->check(CLI::IsMember({"tsv", "json"}))
      ->default_val("tsv");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    if (*field) return cmd_field(o);
    if (*construct_cmd) return cmd_construct(o);
    if (*verify) return cmd_verify(o);
    if (*enumerate) return cmd_enumerate(o);
    if (*table) return cmd_table(o);
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  }
  return kExitUsage;
}
