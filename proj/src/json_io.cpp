#include "cantorlab/json_io.hpp"

#include "cantorlab/errors.hpp"

namespace cantorlab {

namespace {

const json& require(const json& j, const char* field) {
  if (!j.is_object() || !j.contains(field))
    throw MalformedQueryError(std::string("missing field \"") + field + "\"");
  return j.at(field);
}

}  // namespace

json to_json(const PartialBijection& f) {
  json entries = json::array();
  for (const auto& [s, t] : f.entries()) entries.push_back({s, t});
  return {{"entries", entries}};
}

PartialBijection pbij_from_json(const json& j) {
  std::vector<PartialBijection::Entry> entries;
  for (const auto& e : require(j, "entries")) {
    if (!e.is_array() || e.size() != 2)
      throw MalformedQueryError("entries must be [source,target] pairs");
    entries.emplace_back(e[0].get<std::uint32_t>(),
                         e[1].get<std::uint32_t>());
  }
  return PartialBijection::from_entries(std::move(entries));
}

json to_json(const FiniteInverseSemigroup& s) {
  return {{"size", s.size}, {"product", s.product}, {"inverse", s.inverse}};
}

FiniteInverseSemigroup fis_from_json(const json& j) {
  FiniteInverseSemigroup s;
  s.size = require(j, "size").get<std::size_t>();
  s.product =
      require(j, "product").get<std::vector<std::vector<std::uint32_t>>>();
  s.inverse = require(j, "inverse").get<std::vector<std::uint32_t>>();
  s.validate();
  return s;
}

json to_json(const FiniteSemilattice& e) {
  return {{"size", e.size()}, {"meet", e.meet_table()}};
}

FiniteSemilattice semilattice_from_json(const json& j) {
  auto meet =
      require(j, "meet").get<std::vector<std::vector<std::uint32_t>>>();
  if (j.contains("size") && j.at("size").get<std::size_t>() != meet.size())
    throw MalformedQueryError("size disagrees with meet table");
  return FiniteSemilattice::from_meet_table(std::move(meet));
}

json to_json(const MunnElement& m) {
  return {{"map", to_json(m.map)},
          {"source_apex", m.source_apex},
          {"target_apex", m.target_apex}};
}

json to_json(const Clopen& c) {
  return {{"words", c.words()}};
}

Clopen clopen_from_json(const json& j) {
  if (j.is_array())  // bare word list also accepted
    return Clopen::from_words(j.get<std::vector<std::string>>());
  return Clopen::from_words(
      require(j, "words").get<std::vector<std::string>>());
}

json to_json(const PrefixMap& h) {
  json rules = json::array();
  for (const auto& [dw, iw] : h.rules()) rules.push_back({dw, iw});
  return {{"rules", rules}};
}

PrefixMap prefix_map_from_json(const json& j) {
  std::vector<PrefixMap::Rule> rules;
  for (const auto& r : require(j, "rules")) {
    if (!r.is_array() || r.size() != 2)
      throw MalformedQueryError("rules must be [domain,image] word pairs");
    rules.emplace_back(r[0].get<std::string>(), r[1].get<std::string>());
  }
  return PrefixMap::from_rules(std::move(rules));
}

json to_json(const TruncatedLatticeMap& m) {
  json entries = json::array();
  for (const auto& [k, v] : m.entries())
    entries.push_back({to_json(k), to_json(v)});
  return {{"depth", m.depth()}, {"entries", entries}};
}

TruncatedLatticeMap tlm_from_json(const json& j) {
  std::vector<TruncatedLatticeMap::Entry> entries;
  for (const auto& e : require(j, "entries")) {
    if (!e.is_array() || e.size() != 2)
      throw MalformedQueryError("entries must be [key,value] clopen pairs");
    entries.emplace_back(clopen_from_json(e[0]), clopen_from_json(e[1]));
  }
  return TruncatedLatticeMap::from_entries(
      require(j, "depth").get<int>(), std::move(entries));
}

json to_json(const Rational& r) {
  return {{"num", r.num}, {"den", r.den}};
}

namespace {

const char* condition_name(ConvCondition c) {
  switch (c) {
    case ConvCondition::i: return "i";
    case ConvCondition::ii: return "ii";
    case ConvCondition::i_inverse: return "i-inverse";
    case ConvCondition::ii_inverse: return "ii-inverse";
  }
  return "?";
}

}  // namespace

json to_json(const ConvergenceVerdict& v) {
  json out = {{"status", v.refuted ? "refuted" : "consistent"}};
  if (v.witness) {
    out["witness"] = {{"point", v.witness->point},
                      {"index", v.witness->index},
                      {"condition", condition_name(v.witness->condition)}};
  }
  return out;
}

}  // namespace cantorlab
