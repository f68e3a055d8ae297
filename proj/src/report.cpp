#include <eqknot/parse.hpp>
#include <eqknot/report.hpp>

#include <chrono>
#include <cstdlib>
#include <string>
#include <vector>

namespace eqknot {

namespace {

std::vector<std::string> split_tabs(const std::string& line) {
  std::vector<std::string> out;
  size_t start = 0;
  while (true) {
    size_t tab = line.find('\t', start);
    if (tab == std::string::npos) {
      out.push_back(line.substr(start));
      return out;
    }
    out.push_back(line.substr(start, tab - start));
    start = tab + 1;
  }
}

nlohmann::ordered_json fox_verdict_json(const Verdict<SliceWitness>& v) {
  nlohmann::ordered_json out;
  out["verdict"] = v.yes ? "YES" : "NO";
  out["candidates"] = v.candidates;
  if (v.yes)
    out["witness"] = format_poly(v.witness->p);
  else
    out["certificate"] = v.certificate;
  return out;
}

nlohmann::ordered_json pair_verdict_json(const Verdict<FoxPair>& v) {
  nlohmann::ordered_json out;
  out["verdict"] = v.yes ? "YES" : "NO";
  out["candidates"] = v.candidates;
  if (v.yes) {
    out["witnessP"] = format_poly(v.witness->p);
    out["witnessQ"] = format_poly(v.witness->q);
  } else {
    out["certificate"] = v.certificate;
  }
  return out;
}

}  // namespace

std::vector<KnotRecord> load_knot_table(std::istream& in) {
  std::vector<KnotRecord> rows;
  std::string line;
  size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty() || line[0] == '#') continue;
    std::vector<std::string> f = split_tabs(line);
    if (f[0].empty()) throw ParseError(lineno, "knot table: empty name");
    KnotRecord r;
    r.name = f[0];
    r.polyText = f.size() > 1 ? f[1] : "";
    if (f.size() > 2 && !f[2].empty()) {
      char* end = nullptr;
      long p = std::strtol(f[2].c_str(), &end, 10);
      if (end == nullptr || *end != '\0' || p < 1)
        throw ParseError(lineno, "knot table: bad period \"" + f[2] + "\"");
      r.period = p;
    }
    if (f.size() > 3) r.notes = f[3];
    rows.push_back(std::move(r));
  }
  return rows;
}

ReportResult run_report(const std::vector<KnotRecord>& rows, long max_q, bool withTimings) {
  nlohmann::ordered_json report;
  report["schema"] = "eqknot-report/1";
  report["maxQ"] = max_q;
  nlohmann::ordered_json knots = nlohmann::ordered_json::array();
  bool allValid = true;

  for (const KnotRecord& row : rows) {
    auto started = std::chrono::steady_clock::now();
    nlohmann::ordered_json k;
    k["name"] = row.name;
    if (row.period)
      k["period"] = *row.period;
    else
      k["period"] = nullptr;
    if (!row.notes.empty()) k["notes"] = row.notes;

    if (row.polyText.empty() || row.polyText == "?") {
      k["status"] = "missing-polynomial";
      knots.push_back(std::move(k));
      continue;
    }
    ZPoly delta = parse_poly(row.polyText);
    k["delta"] = format_poly(canon(delta));
    bool abstract_ok = is_abstract_alexander(delta);
    k["abstractAlexander"] = abstract_ok;
    if (!abstract_ok) {
      k["status"] = "invalid";
      allValid = false;
      knots.push_back(std::move(k));
      continue;
    }
    k["status"] = "ok";

    std::vector<SliceWitness> ws = fox_witnesses(delta);
    nlohmann::ordered_json wlist = nlohmann::ordered_json::array();
    for (const SliceWitness& w : ws) wlist.push_back(format_poly(w.p));
    k["foxWitnesses"] = std::move(wlist);
    k["fox"] = fox_verdict_json(check_fox_slice(delta));

    if (row.period) {
      long q = *row.period;
      nlohmann::ordered_json m;
      m["q"] = q;
      bool congruent = modq_congruent(delta, q);
      m["congruent"] = congruent;
      if (congruent) {
        try {
          m["witness"] = format_poly2(modq_witness(delta, q, max_q).a);
        } catch (const precondition_error& e) {
          m["witnessError"] = e.what();
        }
      }
      k["modq"] = std::move(m);
    }

    nlohmann::ordered_json eq2 = nlohmann::ordered_json::array();
    for (const ZPoly& d : symmetric_divisors(delta)) {
      nlohmann::ordered_json entry;
      entry["divisor"] = format_poly(d);
      entry["slice"] = pair_verdict_json(check_2eq_slice(delta, d));
      entry["ribbon"] = pair_verdict_json(check_2eq_ribbon(delta, d));
      eq2.push_back(std::move(entry));
    }
    k["eq2"] = std::move(eq2);

    if (withTimings) {
      auto elapsed = std::chrono::steady_clock::now() - started;
      k["timingMs"] =
          std::chrono::duration_cast<std::chrono::milliseconds>(elapsed).count();
    }
    knots.push_back(std::move(k));
  }
  report["knots"] = std::move(knots);
  return ReportResult{std::move(report), allValid};
}

}  // namespace eqknot
