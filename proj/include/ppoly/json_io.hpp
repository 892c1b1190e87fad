#ifndef PPOLY_JSON_IO_HPP
#define PPOLY_JSON_IO_HPP

#include <json.hpp>

#include "ppoly/congruence.hpp"

namespace ppoly {

// Insertion-ordered JSON keeps CLI output byte-stable run to run.
using Json = nlohmann::ordered_json;

template <class D>
Json matrix_json(const DMat<D>& m) {
  Json rows = Json::array();
  for (int i = 0; i < m.rows; i++) {
    Json row = Json::array();
    for (int j = 0; j < m.cols; j++) row.push_back(m.dom.to_string(m.at(i, j)));
    rows.push_back(row);
  }
  return rows;
}

template <class D>
Json vectorpoly_json(const VectorPoly<D>& p) {
  Json obj = Json::object();
  for (int A = 0; A < p.ncosets(); A++) {
    Json coeffs = Json::array();
    for (int j = 0; j <= p.w; j++) coeffs.push_back(p.dom.to_string(p.at(A, j)));
    obj[label_str(p.N, A)] = coeffs;
  }
  return obj;
}

Json extpoly_json(const ExtPoly& p);
Json formal_sum_json(const FormalMatrixSum& s);
Json report_json(const Report& rep);

// Parses a VectorPoly over Q from the serialization written by
// vectorpoly_json.
QVectorPoly vectorpoly_from_json(const Json& j, i64 N, int w);

}  // namespace ppoly

#endif
