#pragma once

// JSON forms of the library's values. Permutations are cycle strings with
// 1-based points; indices of generators are 1-based. Schemas live in
// schemas/.

#include <cstdint>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "stringc/census.hpp"
#include "stringc/coxeter.hpp"
#include "stringc/cpr.hpp"
#include "stringc/cstring.hpp"
#include "stringc/errors.hpp"

namespace stringc {

using Json = nlohmann::json;

namespace detail {

inline const Json& field(const Json& j, const char* key, const char* what) {
  if (!j.is_object()) throw InvalidArgument(std::string(what) + " must be a JSON object");
  auto it = j.find(key);
  if (it == j.end()) throw InvalidArgument(std::string(what) + " is missing \"" + key + "\"");
  return *it;
}

inline std::uint64_t unsigned_field(const Json& j, const char* key, const char* what) {
  const auto& v = field(j, key, what);
  if (!v.is_number_unsigned())
    throw InvalidArgument(std::string(what) + " \"" + key + "\" must be a non-negative integer");
  return v.get<std::uint64_t>();
}

}  // namespace detail

/// {"degree", "rank", "generators", "schlafli", "degenerate"}.
inline Json to_json(const GeneratorString& s) {
  Json gens = Json::array();
  for (const auto& g : s.gens()) gens.push_back(to_cycle_string(g));
  return {{"degree", s.degree()},
          {"rank", s.rank()},
          {"generators", gens},
          {"schlafli", schlafli(s)},
          {"degenerate", is_degenerate(s)}};
}

/// Reads "degree" and "generators"; other keys are ignored.
inline GeneratorString generator_string_from_json(const Json& j) {
  const auto degree = detail::unsigned_field(j, "degree", "generator string");
  const auto& gens = detail::field(j, "generators", "generator string");
  if (!gens.is_array()) throw InvalidArgument("\"generators\" must be an array");
  std::vector<Permutation> out;
  for (const auto& g : gens) {
    if (!g.is_string()) throw InvalidArgument("generators must be cycle strings");
    out.push_back(parse_cycles(g.get<std::string>(), static_cast<std::size_t>(degree)));
  }
  return GeneratorString(static_cast<std::size_t>(degree), std::move(out));
}

/// {"rank", "entries": [[i, j, m], ...]} listing the entries m_ij != 2 with
/// i < j.
inline Json to_json(const CoxeterMatrix& m) {
  Json entries = Json::array();
  for (std::size_t i = 0; i < m.rank(); ++i)
    for (std::size_t j = i + 1; j < m.rank(); ++j)
      if (m(i, j) != 2) entries.push_back({i + 1, j + 1, m(i, j)});
  return {{"rank", m.rank()}, {"entries", entries}};
}

inline CoxeterMatrix coxeter_matrix_from_json(const Json& j) {
  const auto rank = detail::unsigned_field(j, "rank", "Coxeter matrix");
  CoxeterMatrix m(static_cast<std::size_t>(rank));
  const auto& entries = detail::field(j, "entries", "Coxeter matrix");
  if (!entries.is_array()) throw InvalidArgument("\"entries\" must be an array");
  for (const auto& e : entries) {
    if (!e.is_array() || e.size() != 3)
      throw InvalidArgument("Coxeter matrix entries are [i, j, m] triples");
    for (const auto& x : e)
      if (!x.is_number_unsigned()) throw InvalidArgument("Coxeter matrix entries must be integers");
    auto i = e[0].get<std::size_t>(), jj = e[1].get<std::size_t>();
    if (i < 1 || jj < 1 || i > rank || jj > rank)
      throw InvalidArgument("Coxeter matrix index out of range");
    m.set(i - 1, jj - 1, e[2].get<std::uint32_t>());
  }
  return m;
}

inline Json to_json(const CensusRecord& r) {
  return {{"rank", r.representative.rank()},
          {"schlafli", r.schlafli},
          {"self_dual", r.self_dual},
          {"degenerate", r.degenerate},
          {"note", r.note},
          {"representative", to_json(r.representative)}};
}

/// The atlas: every record, ranks ascending.
inline Json atlas_json(const CensusResult& res) {
  Json out = Json::array();
  for (const auto& [rank, records] : res.by_rank)
    for (const auto& r : records) out.push_back(to_json(r));
  return out;
}

/// {"m", "edges": [[i, j, k], ...]}.
inline Json to_json(const CPRGraph& g) {
  Json edges = Json::array();
  for (const auto& e : g.edges) edges.push_back({e.from, e.to, e.label});
  return {{"m", g.vertices}, {"edges", edges}};
}

inline CPRGraph cpr_from_json(const Json& j) {
  CPRGraph g;
  g.vertices = static_cast<std::size_t>(detail::unsigned_field(j, "m", "CPR graph"));
  const auto& edges = detail::field(j, "edges", "CPR graph");
  if (!edges.is_array()) throw InvalidArgument("\"edges\" must be an array");
  for (const auto& e : edges) {
    if (!e.is_array() || e.size() != 3)
      throw InvalidArgument("CPR edges are [i, j, k] triples");
    for (const auto& x : e)
      if (!x.is_number_unsigned()) throw InvalidArgument("CPR edge fields must be integers");
    g.edges.push_back({e[0].get<Point>(), e[1].get<Point>(), e[2].get<std::size_t>()});
  }
  return g;
}

/// A permutation realization of a Coxeter group.
inline Json to_json(const Realization& r) {
  Json gens = Json::array();
  for (const auto& g : r.group.generators()) gens.push_back(to_cycle_string(g));
  Json parabolic = Json::array();
  for (auto i : r.parabolic) parabolic.push_back(i + 1);
  return {{"name", r.type.name()},
          {"degree", r.group.degree()},
          {"order", r.group.order()},
          {"generators", gens},
          {"coxeter_matrix", to_json(named_diagram(r.type))},
          {"parabolic", parabolic},
          {"regular", r.regular},
          {"note", r.note}};
}

}  // namespace stringc
