#ifndef DRINFELD_JSON_IO_HPP
#define DRINFELD_JSON_IO_HPP

// JSON encodings. Polynomials are arrays of coefficient codes, ascending;
// elements of K are {"num": [...], "den": [...]}. The "text" fields are for
// reading only and are ignored on import.

#include <json.hpp>

#include "hecke.hpp"

namespace drinfeld {

using json = nlohmann::json;

inline json toJson(const Poly& p) {
  json a = json::array();
  for (int i = 0; i <= p.degree(); ++i) a.push_back(p.coeff(i));
  return a;
}

inline Poly polyFromJson(const FiniteField& f, const json& j) {
  std::vector<FqCode> c;
  for (const auto& x : j) {
    const int v = x.get<int>();
    if (v < 0 || v >= f.q()) throw std::invalid_argument("coefficient code out of range");
    c.push_back(static_cast<FqCode>(v));
  }
  return Poly(f, c);
}

inline json toJson(const RatFunc& x) {
  if (x.is_zero()) return {{"num", json::array()}, {"den", json::array({1})}};
  return {{"num", toJson(x.num())}, {"den", toJson(x.den())}};
}

inline RatFunc ratFromJson(const FiniteField& f, const json& j) {
  return RatFunc(polyFromJson(f, j.at("num")), polyFromJson(f, j.at("den")));
}

inline json toJson(const MatK& m) {
  json rows = json::array();
  for (int i = 0; i < m.rows(); ++i) {
    json row = json::array();
    for (int j = 0; j < m.cols(); ++j) row.push_back(toJson(m(i, j)));
    rows.push_back(row);
  }
  return {{"rows", m.rows()}, {"cols", m.cols()}, {"entries", rows}};
}

inline MatK matFromJson(const FiniteField& f, const json& j) {
  MatK m(j.at("rows").get<int>(), j.at("cols").get<int>(), RatFunc(f));
  const auto& e = j.at("entries");
  for (int i = 0; i < m.rows(); ++i)
    for (int c = 0; c < m.cols(); ++c) m(i, c) = ratFromJson(f, e.at(i).at(c));
  return m;
}

inline json toJson(const Certificate& c) {
  return {{"lemma", c.lemma}, {"params", c.params}, {"status", c.status()}, {"witness", c.witness}};
}

inline json toJson(const QuotientGraph& G) {
  json vs = json::array(), es = json::array();
  for (const auto& v : G.vertices)
    vs.push_back({{"j", v.j}, {"c", toJson(v.c)}, {"d", toJson(v.d)}, {"stab_order", v.stab_order}});
  for (const auto& e : G.edges) {
    json x = {{"i", e.i},           {"c", toJson(e.c)},           {"d", toJson(e.d)},
              {"stab_order", e.stab_order}, {"stable", e.stable}, {"origin", e.origin},
              {"terminus", e.terminus}};
    if (e.stable) x["label"] = {{"c", toJson(e.label_c)}, {"d", toJson(e.label_d)}, {"text", "[" + e.label_c.to_string() + "," + e.label_d.to_string() + "]"}};
    es.push_back(x);
  }
  return {{"q", G.q}, {"n", G.n}, {"depth", G.depth}, {"vertices", vs}, {"edges", es}};
}

inline QuotientGraph graphFromJson(const json& j) {
  QuotientGraph G;
  G.q = j.at("q").get<int>();
  G.n = j.at("n").get<int>();
  G.depth = j.at("depth").get<int>();
  const FiniteField& f = FiniteField::get(G.q);
  for (const auto& v : j.at("vertices"))
    G.vertices.push_back({v.at("j").get<int>(), polyFromJson(f, v.at("c")), polyFromJson(f, v.at("d")), v.at("stab_order").get<long long>()});
  for (const auto& e : j.at("edges")) {
    EdgeOrbit eo{e.at("i").get<int>(), polyFromJson(f, e.at("c")), polyFromJson(f, e.at("d")),
                 e.at("stab_order").get<long long>(), e.at("stable").get<bool>(), Poly(f), Poly(f),
                 e.at("origin").get<int>(), e.at("terminus").get<int>()};
    if (eo.stable) {
      eo.label_c = polyFromJson(f, e.at("label").at("c"));
      eo.label_d = polyFromJson(f, e.at("label").at("d"));
    }
    G.edges.push_back(eo);
  }
  return G;
}

inline json toJson(const UniPoly<RatFunc>& p) {
  json a = json::array();
  for (int i = 0; i <= p.degree(); ++i) a.push_back(toJson(p.coeff(i)));
  return a;
}

inline json toJson(const OrdinaryCertificate& c) {
  json h = json::array();
  for (const auto& f : c.hecke) {
    json x = {{"operator", f.name}, {"status", f.status}};
    if (!f.scalar.empty()) x["scalar"] = f.scalar;
    h.push_back(x);
  }
  return {{"r", c.r},
          {"dim", c.d},
          {"charpoly", toJson(c.chi)},
          {"charpoly_text", c.chi.to_string()},
          {"chi_plus_text", c.chi_plus.to_string()},
          {"divisibility", c.divisibility},
          {"positive_slope", c.positive_slope},
          {"unipotence_kill", c.unipotence_kill},
          {"hecke", h},
          {"valid", c.valid()},
          {"witness", c.witness}};
}

/// Basis cocycles as values on the depth-0 orbit representatives.
inline json basisToJson(const CocycleSpace& S) {
  json out = {{"q", S.context().q()}, {"n", S.context().n()}, {"k", S.k()}, {"depth", S.depth()}, {"dim", S.dim()}};
  json cols = json::array();
  const int w = S.vk().dim();
  for (int j = 0; j < S.dim(); ++j) {
    json entry;
    if (!S.labels().empty())
      entry["label"] = {{"c", toJson(S.labels()[j].first)}, {"d", toJson(S.labels()[j].second)}};
    json values = json::array();
    for (std::size_t b = 0; b < S.depth0Orbits().size(); ++b) {
      json v = json::array();
      for (int l = 0; l < w; ++l) v.push_back(toJson(S.basis()(static_cast<int>(b) * w + l, j)));
      values.push_back({{"orbit", {{"i", 0}, {"c", toJson(S.depth0Orbits()[b].first)}, {"d", toJson(S.depth0Orbits()[b].second)}}}, {"value", v}});
    }
    entry["values"] = values;
    cols.push_back(entry);
  }
  out["basis"] = cols;
  return out;
}

}  // namespace drinfeld

#endif  // DRINFELD_JSON_IO_HPP
