/**
 * Copyright 2026, the holevo authors.
 *
 * This source code is licensed under the Apache License, Version 2.0 found in
 * the LICENSE.txt file in the root directory of this source tree.
 */

#include "holevo/ensemble_io.hpp"

#include <fstream>
#include <sstream>

#include "json.hpp"
#include "holevo/qubit.hpp"

namespace holevo {
namespace {

using nlohmann::json;

std::pair<std::size_t, std::size_t> line_column(std::string_view text, std::size_t byte) {
  std::size_t line = 1;
  std::size_t column = 1;
  for (std::size_t k = 0; k + 1 < byte && k < text.size(); ++k) {
    if (text[k] == '\n') {
      ++line;
      column = 1;
    } else {
      ++column;
    }
  }
  return {line, column};
}

const json& field(const json& obj, const char* key, const std::string& where) {
  const auto it = obj.find(key);
  if (it == obj.end()) throw ParseError(where + ": missing field \"" + key + "\"");
  return *it;
}

double number(const json& v, const std::string& where) {
  if (!v.is_number()) throw ParseError(where + ": expected a number");
  return v.get<double>();
}

CMatrixd parse_matrix(const json& m, Eigen::Index dim, const std::string& where) {
  if (!m.is_array() || static_cast<Eigen::Index>(m.size()) != dim) {
    throw ParseError(where + ": expected " + std::to_string(dim) + " rows");
  }
  CMatrixd out(dim, dim);
  for (Eigen::Index r = 0; r < dim; ++r) {
    const json& row = m[static_cast<std::size_t>(r)];
    const std::string rw = where + "[" + std::to_string(r) + "]";
    if (!row.is_array() || static_cast<Eigen::Index>(row.size()) != dim) {
      throw ParseError(rw + ": expected " + std::to_string(dim) + " entries");
    }
    for (Eigen::Index c = 0; c < dim; ++c) {
      const json& z = row[static_cast<std::size_t>(c)];
      const std::string zw = rw + "[" + std::to_string(c) + "]";
      if (!z.is_array() || z.size() != 2) throw ParseError(zw + ": expected [re, im]");
      out(r, c) = {number(z[0], zw), number(z[1], zw)};
    }
  }
  return out;
}

}  // namespace

Ensemble parse_ensemble(std::string_view text) {
  json doc;
  try {
    doc = json::parse(text.begin(), text.end());
  } catch (const json::parse_error& e) {
    const auto [line, column] = line_column(text, e.byte);
    throw ParseError("invalid JSON at line " + std::to_string(line) + ", column " + std::to_string(column) + ": " +
                         e.what(),
                     line, column);
  }
  if (!doc.is_object()) throw ParseError("ensemble document must be a JSON object");
  const json& dim_field = field(doc, "dim", "document");
  if (!dim_field.is_number_integer() || dim_field.get<long long>() < 1) {
    throw ParseError("document: \"dim\" must be a positive integer");
  }
  const auto dim = static_cast<Eigen::Index>(dim_field.get<long long>());
  const json& states = field(doc, "states", "document");
  if (!states.is_array() || states.empty()) throw ParseError("document: \"states\" must be a non-empty array");

  bool any_matrix = false;
  bool any_bloch = false;
  RVectord weights(static_cast<Eigen::Index>(states.size()));
  std::vector<DensityMatrixd> rhos;
  for (std::size_t i = 0; i < states.size(); ++i) {
    const std::string where = "states[" + std::to_string(i) + "]";
    const json& s = states[i];
    if (!s.is_object()) throw ParseError(where + ": expected an object");
    weights(static_cast<Eigen::Index>(i)) = number(field(s, "p", where), where + ".p");
    const bool has_matrix = s.contains("matrix");
    const bool has_bloch = s.contains("bloch");
    if (has_matrix == has_bloch) throw ParseError(where + ": exactly one of \"matrix\" or \"bloch\" is required");
    any_matrix |= has_matrix;
    any_bloch |= has_bloch;
    if (any_matrix && any_bloch) throw ParseError(where + ": \"matrix\" and \"bloch\" forms cannot be mixed");
    if (has_matrix) {
      rhos.emplace_back(parse_matrix(s["matrix"], dim, where + ".matrix"));
    } else {
      if (dim != 2) throw ParseError(where + ": \"bloch\" form requires dim 2");
      const json& b = s["bloch"];
      if (!b.is_array() || b.size() != 3) throw ParseError(where + ".bloch: expected [x, y, z]");
      const std::string bw = where + ".bloch";
      rhos.push_back(bloch_to_density(BlochVector({number(b[0], bw), number(b[1], bw), number(b[2], bw)})));
    }
  }
  return Ensemble(ProbVector(weights), std::move(rhos));
}

Ensemble read_ensemble_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open ensemble file '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_ensemble(buf.str());
}

std::string ensemble_to_json(const Ensemble& e) {
  json doc;
  doc["dim"] = e.dim();
  doc["states"] = json::array();
  for (Eigen::Index i = 0; i < e.size(); ++i) {
    const CMatrixd& m = e.states()[static_cast<std::size_t>(i)].matrix();
    json rows = json::array();
    for (Eigen::Index r = 0; r < m.rows(); ++r) {
      json row = json::array();
      for (Eigen::Index c = 0; c < m.cols(); ++c) row.push_back({m(r, c).real(), m(r, c).imag()});
      rows.push_back(row);
    }
    doc["states"].push_back({{"p", e.weights()[i]}, {"matrix", rows}});
  }
  return doc.dump();
}

}  // namespace holevo
