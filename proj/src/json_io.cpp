#include "ppoly/json_io.hpp"

namespace ppoly {

Json extpoly_json(const ExtPoly& p) {
  Json obj = Json::object();
  obj["offset"] = -1;
  Json coeffs = Json::array();
  for (const Rat& c : p.coeff) coeffs.push_back(rat_to_string(c));
  obj["coeffs"] = coeffs;
  return obj;
}

Json formal_sum_json(const FormalMatrixSum& s) {
  Json arr = Json::array();
  for (const auto& [m, c] : s.terms) {
    Json term = Json::object();
    term["matrix"] = {m.a, m.b, m.c, m.d};
    term["coeff"] = c;
    arr.push_back(term);
  }
  return arr;
}

Json report_json(const Report& rep) {
  Json arr = Json::array();
  for (const auto& c : rep.checks) {
    Json item = Json::object();
    item["name"] = c.name;
    item["pass"] = c.pass;
    if (!c.asserted) item["asserted"] = false;
    item["witness"] = c.witness;
    arr.push_back(item);
  }
  return arr;
}

QVectorPoly vectorpoly_from_json(const Json& j, i64 N, int w) {
  QQ dom;
  QVectorPoly p(dom, N, w);
  for (int A = 0; A < p.ncosets(); A++) {
    std::string key = label_str(N, A);
    if (!j.contains(key)) throw std::domain_error("vectorpoly_from_json: missing coset " + key);
    const Json& coeffs = j.at(key);
    if (static_cast<int>(coeffs.size()) != w + 1) throw std::domain_error("vectorpoly_from_json: wrong length");
    for (int d = 0; d <= w; d++) p.at(A, d) = rat_from_string(coeffs[d].get<std::string>());
  }
  return p;
}

}  // namespace ppoly
