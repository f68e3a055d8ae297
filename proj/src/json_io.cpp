#include <eqknot/json_io.hpp>
#include <eqknot/parse.hpp>

namespace eqknot {

namespace {

long get_long(const nlohmann::json& j, const char* key) {
  if (!j.is_object() || !j.contains(key) || !j[key].is_number_integer())
    throw ParseError(0, std::string("expected integer field \"") + key + "\"");
  return j[key].get<long>();
}

}  // namespace

nlohmann::ordered_json crossings_to_json(const CrossingList& c) {
  nlohmann::ordered_json arr = nlohmann::ordered_json::array();
  for (const CrossingRecord& r : c.records)
    arr.push_back({{"sign", r.sign}, {"g", r.gExp}, {"t", r.tExp}});
  return arr;
}

CrossingList crossings_from_json(const nlohmann::json& j, long q) {
  if (!j.is_array()) throw ParseError(0, "crossings: expected a JSON array");
  CrossingList c;
  c.q = q;
  for (const auto& e : j) {
    long sign = get_long(e, "sign");
    if (sign != 1 && sign != -1) throw ParseError(0, "crossings: sign must be +-1");
    c.records.push_back(
        CrossingRecord{static_cast<int>(sign), get_long(e, "g"), get_long(e, "t")});
  }
  return c;
}

nlohmann::ordered_json boxes_to_json(const BoxDiagram& b) {
  nlohmann::ordered_json out;
  out["q"] = b.q;
  out["unit"] = {{"sign", b.normSign}, {"g", b.normGExp}};
  nlohmann::ordered_json boxes = nlohmann::ordered_json::array();
  for (size_t i = 0; i < b.boxes.size(); ++i) {
    nlohmann::ordered_json entries = nlohmann::ordered_json::array();
    for (const BoxEntry& e : b.boxes[i]) {
      if (!e.a.fits_slong_p()) throw invariant_error("boxes_to_json: entry too large");
      entries.push_back({{"j", e.j}, {"a", e.a.get_si()}});
    }
    boxes.push_back({{"i", static_cast<long>(i)}, {"entries", std::move(entries)}});
  }
  out["boxes"] = std::move(boxes);
  return out;
}

BoxDiagram boxes_from_json(const nlohmann::json& j) {
  BoxDiagram b;
  b.q = get_long(j, "q");
  if (b.q < 1) throw ParseError(0, "boxes: q must be >= 1");
  if (j.contains("unit")) {
    long s = get_long(j["unit"], "sign");
    if (s != 1 && s != -1) throw ParseError(0, "boxes: unit sign must be +-1");
    b.normSign = static_cast<int>(s);
    b.normGExp = get_long(j["unit"], "g");
  }
  if (!j.contains("boxes") || !j["boxes"].is_array())
    throw ParseError(0, "boxes: expected array field \"boxes\"");
  b.boxes.assign(static_cast<size_t>(b.q), {});
  for (const auto& box : j["boxes"]) {
    long i = get_long(box, "i");
    if (i < 0 || i >= b.q) throw ParseError(0, "boxes: box index out of range");
    if (!box.contains("entries") || !box["entries"].is_array())
      throw ParseError(0, "boxes: expected array field \"entries\"");
    for (const auto& e : box["entries"])
      b.boxes[static_cast<size_t>(i)].push_back(BoxEntry{get_long(e, "j"), Int(get_long(e, "a"))});
  }
  return b;
}

nlohmann::ordered_json complex_to_json(const BasedChainComplex& c) {
  nlohmann::ordered_json out;
  out["ranks"] = c.ranks;
  nlohmann::ordered_json mats = nlohmann::ordered_json::array();
  for (const RMatrix& m : c.boundaries) {
    nlohmann::ordered_json rows = nlohmann::ordered_json::array();
    for (const auto& row : m) {
      nlohmann::ordered_json r = nlohmann::ordered_json::array();
      for (const RatFun& x : row) r.push_back(format_ratfun(x));
      rows.push_back(std::move(r));
    }
    mats.push_back(std::move(rows));
  }
  out["matrices"] = std::move(mats);
  return out;
}

BasedChainComplex complex_from_json(const nlohmann::json& j) {
  if (!j.is_object() || !j.contains("ranks") || !j["ranks"].is_array())
    throw ParseError(0, "complex: expected array field \"ranks\"");
  BasedChainComplex c;
  for (const auto& r : j["ranks"]) {
    if (!r.is_number_integer() || r.get<long>() < 0)
      throw ParseError(0, "complex: ranks must be nonnegative integers");
    c.ranks.push_back(r.get<long>());
  }
  if (!j.contains("matrices") || !j["matrices"].is_array())
    throw ParseError(0, "complex: expected array field \"matrices\"");
  size_t expected = c.ranks.empty() ? 0 : c.ranks.size() - 1;
  if (j["matrices"].size() != expected)
    throw ParseError(0, "complex: expected one matrix per adjacent rank pair");
  for (size_t k = 0; k < expected; ++k) {
    const auto& mj = j["matrices"][k];
    if (!mj.is_array() || mj.size() != static_cast<size_t>(c.ranks[k + 1]))
      throw ParseError(0, "complex: matrix row count mismatch");
    RMatrix m;
    for (const auto& rowj : mj) {
      if (!rowj.is_array() || rowj.size() != static_cast<size_t>(c.ranks[k]))
        throw ParseError(0, "complex: matrix column count mismatch");
      std::vector<RatFun> row;
      for (const auto& cell : rowj) {
        if (!cell.is_string()) throw ParseError(0, "complex: entries must be strings");
        row.push_back(parse_ratfun(cell.get<std::string>()));
      }
      m.push_back(std::move(row));
    }
    c.boundaries.push_back(std::move(m));
  }
  return c;
}

nlohmann::ordered_json realization_to_json(const Realization& r) {
  nlohmann::ordered_json out;
  out["q"] = r.boxes.q;
  out["boxes"] = boxes_to_json(r.boxes);
  out["crossings"] = crossings_to_json(r.crossings);
  out["murasugi"] = format_poly2(r.murasugi);
  out["knotPoly"] = format_poly(r.knotPoly);
  out["quotientPoly"] = format_poly(r.quotientPoly);
  return out;
}

}  // namespace eqknot
