#include "binomeul/serialize.hpp"

#include <sstream>

namespace binomeul {

std::string to_string(const mpq_class& q) {
  mpq_class c = q;
  c.canonicalize();
  return c.get_str();
}

Json to_json(const IntPolynomial& p) {
  Json coeffs = Json::array();
  for (const auto& c : p.coeffs()) coeffs.push_back(c.get_str());
  return Json{{"coeffs", coeffs}};
}

Json to_json(const GammaExpansion& g) {
  Json gammas = Json::array();
  for (const auto& c : g.gammas) gammas.push_back(c.get_str());
  return Json{{"n", g.n}, {"gammas", gammas}};
}

Json to_json(const SymF& f) {
  Json p = Json::object();
  // Largest partitions first, the order partitions() uses.
  for (auto it = f.terms().rbegin(); it != f.terms().rend(); ++it) p[partition_key(it->first)] = to_string(it->second);
  return Json{{"degree", std::max(f.degree(), 0)}, {"p", p}};
}

Json schur_json(const SymF& f) {
  Json s = Json::object();
  const auto e = schur_coefficients(f);
  for (auto it = e.coeffs.rbegin(); it != e.coeffs.rend(); ++it) s[partition_key(it->first)] = to_string(it->second);
  return Json{{"s", s}};
}

Json to_json(const TPoly& p, Basis basis) {
  Json out = Json::array();
  for (const auto& c : p.coeffs()) out.push_back(basis == Basis::p ? to_json(c) : schur_json(c));
  return out;
}

Json to_json(const ZSeries& s, Basis basis) {
  Json terms = Json::array();
  for (const auto& t : s.terms) terms.push_back(to_json(t, basis));
  return Json{{"N", s.truncation()}, {"terms", terms}};
}

Json to_json(const SimplicialComplex& c) {
  Json vertices = Json::array();
  for (const auto& v : c.vertices()) vertices.push_back(v.token());
  Json facets = Json::array();
  for (const auto& f : c.facets()) {
    Json face = Json::array();
    for (int i : f) face.push_back(c.vertices()[i].token());
    facets.push_back(face);
  }
  return Json{{"vertices", vertices}, {"facets", facets}};
}

std::string facet_text(const SimplicialComplex& c) {
  std::ostringstream os;
  for (const auto& f : c.facets()) {
    for (std::size_t k = 0; k < f.size(); ++k) os << (k ? " " : "") << c.vertices()[f[k]].token();
    os << '\n';
  }
  return os.str();
}

std::string csv_coeffs(const IntPolynomial& p) {
  std::string s;
  for (std::size_t k = 0; k < p.coeffs().size(); ++k) s += (k ? ";" : "") + p.coeffs()[k].get_str();
  return s;
}

std::string csv_row(int n, int r, const std::string& statistic, const IntPolynomial& p) {
  return std::to_string(n) + "," + std::to_string(r) + "," + statistic + "," + csv_coeffs(p);
}

}  // namespace binomeul
