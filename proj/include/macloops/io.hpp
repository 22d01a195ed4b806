#ifndef MACLOOPS_IO_HPP
#define MACLOOPS_IO_HPP

// JSON forms of the domain types:
//   complex   {"m": 5, "maximal_faces": [[1,2],[2,3],...]}
//   chain     [{"D": [1], "S": [3], "coeff": 1}, ...]
//   cochain   [{"u": [1], "v": [3], "coeff": 1}, ...]
//   template  {"fixed": [{"coeff": -1, "expr": "[[3,1],[4,[5,2]]]"}, ...],
//              "unknowns": [{"id": "k1", "expr": "..."}, ...]}
// Vertices are 1-based; writers emit sorted lists for determinism.

#include <fstream>
#include <stdexcept>
#include <string>

#include <json.hpp>

#include "macloops/cellular.hpp"
#include "macloops/koszul.hpp"
#include "macloops/relations.hpp"
#include "macloops/simplicial.hpp"

namespace macloops {

using nlohmann::json;

inline json to_json(const SimplicialComplex& k) {
  json faces = json::array();
  for (const auto& f : k.maximal_faces()) faces.push_back(f);
  return json{{"m", k.m()}, {"maximal_faces", faces}};
}

inline SimplicialComplex complex_from_json(const json& j) {
  if (!j.is_object() || !j.contains("m") || !j.contains("maximal_faces"))
    throw std::invalid_argument(
        "complex JSON needs \"m\" and \"maximal_faces\"");
  std::vector<VertexSet> faces;
  for (const auto& f : j.at("maximal_faces"))
    faces.push_back(f.get<VertexSet>());
  return SimplicialComplex(j.at("m").get<int>(), std::move(faces));
}

inline json to_json(const CellularChain& chain) {
  json out = json::array();
  for (const auto& [c, n] : chain)
    out.push_back(
        {{"D", c.disc_set}, {"S", c.circle_set}, {"coeff", n}});
  return out;
}

inline CellularChain chain_from_json(const json& j) {
  CellularChain out;
  for (const auto& term : j) {
    Cell c{make_vertex_set(term.value("D", std::vector<int>{})),
           make_vertex_set(term.value("S", std::vector<int>{}))};
    chain_add(out, c, term.at("coeff").get<long long>());
  }
  return out;
}

inline json to_json(const KoszulElement& e) {
  json out = json::array();
  for (const auto& [mono, n] : e)
    out.push_back(
        {{"u", mono.exterior_set}, {"v", mono.face_set}, {"coeff", n}});
  return out;
}

inline KoszulElement koszul_from_json(const json& j) {
  KoszulElement out;
  for (const auto& term : j) {
    KoszulMonomial mono{make_vertex_set(term.value("u", std::vector<int>{})),
                        make_vertex_set(term.value("v", std::vector<int>{}))};
    koszul_add(out, mono, term.at("coeff").get<long long>());
  }
  return out;
}

inline json to_json(const RelationTemplate& t) {
  json fixed = json::array();
  for (const auto& [coeff, expr] : t.fixed_terms)
    fixed.push_back({{"coeff", coeff}, {"expr", to_string(expr)}});
  json unknowns = json::array();
  for (const auto& [id, expr] : t.parametrized_terms)
    unknowns.push_back({{"id", id}, {"expr", to_string(expr)}});
  return json{{"fixed", fixed}, {"unknowns", unknowns}};
}

inline RelationTemplate template_from_json(const json& j) {
  RelationTemplate t;
  for (const auto& term : j.value("fixed", json::array()))
    t.fixed_terms.push_back({term.at("coeff").get<long long>(),
                             parse_commutator(term.at("expr").get<std::string>())});
  for (const auto& term : j.value("unknowns", json::array()))
    t.parametrized_terms.push_back(
        {term.at("id").get<std::string>(),
         parse_commutator(term.at("expr").get<std::string>())});
  return t;
}

inline json load_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open file: " + path);
  json j;
  try {
    in >> j;
  } catch (const json::parse_error& e) {
    throw std::invalid_argument("malformed JSON in " + path + ": " + e.what());
  }
  return j;
}

}  // namespace macloops

#endif  // MACLOOPS_IO_HPP
