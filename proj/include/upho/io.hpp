#ifndef UPHO_IO_HPP_
#define UPHO_IO_HPP_

#include <algorithm>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "json.hpp"

#include "upho/error.hpp"
#include "upho/poset.hpp"
#include "upho/series.hpp"

namespace upho {

using Json = nlohmann::ordered_json;

/// {"depth", "ranks", "covers", "embedding"}; covers sorted.
inline Json to_json(const RankedPoset& p) {
  Json out;
  out["depth"] = p.depth();
  out["ranks"] = p.ranks();
  Json covers = Json::array();
  for (const auto& [u, v] : p.covers()) covers.push_back({u, v});
  out["covers"] = std::move(covers);
  out["embedding"] = p.has_embedding() ? Json(p.embedding()) : Json(nullptr);
  return out;
}

inline RankedPoset poset_from_json(const Json& j) {
  try {
    if (!j.is_object() || !j.contains("ranks") || !j.contains("covers"))
      throw Error(ErrorCode::MalformedInput, "poset JSON needs \"ranks\" and \"covers\"");
    auto ranks = j.at("ranks").get<std::vector<Rank>>();
    if (j.contains("depth") && j.at("depth").get<std::size_t>() != ranks.size())
      throw Error(ErrorCode::MalformedInput, "\"depth\" disagrees with the number of ranks");
    std::vector<Cover> covers;
    for (const auto& c : j.at("covers")) {
      if (!c.is_array() || c.size() != 2) throw Error(ErrorCode::MalformedInput, "cover must be a pair");
      covers.emplace_back(c[0].get<Vertex>(), c[1].get<Vertex>());
    }
    std::optional<Embedding> embedding;
    if (j.contains("embedding") && !j.at("embedding").is_null())
      embedding = j.at("embedding").get<Embedding>();
    return RankedPoset(std::move(ranks), std::move(covers), std::move(embedding));
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorCode::ParseError, e.what());
  }
}

inline RankedPoset parse_poset(const std::string& text) {
  Json j;
  try {
    j = Json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorCode::ParseError, e.what());
  }
  return poset_from_json(j);
}

inline RankedPoset load_poset(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::MalformedInput, "cannot open " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return parse_poset(ss.str());
}

/// Decimal strings, so magnitudes survive any JSON reader.
inline Json to_json(const IntSeries& s) {
  Json out = Json::array();
  for (const auto& c : s.coefficients) out.push_back(c.str());
  return out;
}

inline Json to_json(const IntPolynomial& p) {
  Json out = Json::array();
  for (const auto& c : p.coefficients()) out.push_back(c.str());
  return out;
}

inline IntSeries series_from_json(const Json& j) {
  std::vector<BigInt> c;
  try {
    for (const auto& x : j) c.emplace_back(x.is_string() ? BigInt(x.get<std::string>()) : BigInt(x.get<long long>()));
  } catch (const std::exception& e) {
    throw Error(ErrorCode::ParseError, std::string("bad series entry: ") + e.what());
  }
  return IntSeries(std::move(c));
}

}  // namespace upho

#endif  // UPHO_IO_HPP_
