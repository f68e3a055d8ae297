// Knot-table ingestion (TSV) and the deterministic verdict report.
#pragma once

#include <eqknot/conditions.hpp>

#include <json.hpp>

#include <istream>
#include <optional>
#include <string>
#include <vector>

namespace eqknot {

struct KnotRecord {
  std::string name;
  std::string polyText;  // "?" or empty when the polynomial is not available
  std::optional<long> period;
  std::string notes;
};

// TSV columns: name, polynomial, optional period, optional notes.
// Blank lines and lines starting with '#' are skipped.
std::vector<KnotRecord> load_knot_table(std::istream& in);

struct ReportResult {
  nlohmann::ordered_json json;
  bool allValid;  // every row with a polynomial passes is_abstract_alexander
};

// Per-knot blocks in input order: abstract-Alexander check, Fox witnesses,
// mod-q congruence and witness for the row's period, 2-equivariant
// slice/ribbon verdicts over all symmetric divisors.  Output is
// deterministic; timings are included only when withTimings is set.
ReportResult run_report(const std::vector<KnotRecord>& rows, long max_q = kDefaultMaxQ,
                        bool withTimings = false);

}  // namespace eqknot
