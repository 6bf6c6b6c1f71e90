#include "decayideal/ideal_json.hpp"

#include <json.hpp>

#include "decayideal/errors.hpp"

namespace decayideal {

namespace {

using ordered_json = nlohmann::ordered_json;

ordered_json ideal_object(const MonomialIdeal& ideal) {
  ordered_json out;
  out["variables"] = ideal.ring().names();
  ordered_json gens = ordered_json::array();
  for (std::size_t i = 0; i < ideal.size(); ++i) {
    auto r = ideal.row(i);
    gens.push_back(std::vector<Exponent>(r.begin(), r.end()));
  }
  out["generators"] = std::move(gens);
  return out;
}

}  // namespace

std::string ideal_to_json(const MonomialIdeal& ideal) { return ideal_object(ideal).dump(); }

MonomialIdeal ideal_from_json(std::string_view text) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw InvalidArgument(std::string("malformed ideal JSON: ") + e.what());
  }
  if (!doc.is_object() || !doc.contains("variables") || !doc.contains("generators")) {
    throw InvalidArgument("ideal JSON needs \"variables\" and \"generators\"");
  }
  const auto& vars = doc["variables"];
  const auto& gens = doc["generators"];
  if (!vars.is_array() || !gens.is_array()) {
    throw InvalidArgument("\"variables\" and \"generators\" must be arrays");
  }
  std::vector<std::string> names;
  for (const auto& v : vars) {
    if (!v.is_string()) throw InvalidArgument("variable names must be strings");
    names.push_back(v.get<std::string>());
  }
  Ring ring(std::move(names));
  std::vector<std::vector<Exponent>> rows;
  for (const auto& g : gens) {
    if (!g.is_array() || g.size() != ring.size()) {
      throw InvalidArgument("each generator must list one exponent per variable");
    }
    std::vector<Exponent> row;
    for (const auto& e : g) {
      if (!e.is_number_unsigned()) {
        throw InvalidArgument("exponents must be nonnegative integers");
      }
      row.push_back(e.get<Exponent>());
    }
    rows.push_back(std::move(row));
  }
  return MonomialIdeal::from_exponents(ring, rows);
}

std::string construction_to_json(const ConstructionData& data) {
  ordered_json out = ideal_object(data.ideal);
  ordered_json meta;
  meta["q"] = data.q.entries();
  meta["n"] = data.q.n();
  meta["m"] = data.m;
  meta["t"] = data.t;
  meta["J"] = data.J;
  meta["K"] = data.K;
  out["meta"] = std::move(meta);
  return out.dump();
}

}  // namespace decayideal
