#pragma once

// JSON input documents and verdict documents for the command-line tools.
// Scalars travel as exact strings under the field's serialization rules;
// identical inputs always produce byte-identical documents.

#include <fstream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "permext/error.hpp"
#include "permext/field.hpp"
#include "permext/linalg.hpp"
#include "permext/linear_ext.hpp"
#include "permext/oracle.hpp"
#include "permext/permutation.hpp"
#include "permext/projective.hpp"
#include "permext/reps.hpp"

namespace permext::io {

using json = nlohmann::json;

struct InputDocument {
  FieldSpec field = FieldSpec::rationals();
  std::size_t dim = 0;
  std::vector<Vector> vectors;
  std::vector<ProjPoint> points;
  std::optional<Permutation> permutation;
  std::vector<Matrix> generators;
  std::optional<Vector> seed;
};

namespace detail {

inline Vector vector_from_json(FieldSpec f, std::size_t dim, const json& row,
                               const std::string& context) {
  if (!row.is_array() || row.size() != dim)
    throw ParseError(context + ": expected an array of " + std::to_string(dim) +
                     " scalar strings");
  std::vector<Scalar> coords;
  coords.reserve(dim);
  for (std::size_t j = 0; j < dim; ++j) {
    const json& cell = row[j];
    if (!cell.is_string())
      throw ParseError(context + "[" + std::to_string(j) + "]: scalars must be strings");
    try {
      coords.push_back(Scalar::parse(f, cell.get<std::string>()));
    } catch (const ParseError& e) {
      throw ParseError(context + "[" + std::to_string(j) + "]: " + e.what());
    }
  }
  return Vector(f, std::move(coords));
}

inline Matrix matrix_from_json(FieldSpec f, std::size_t dim, const json& rows,
                               const std::string& context) {
  if (!rows.is_array() || rows.size() != dim)
    throw ParseError(context + ": expected " + std::to_string(dim) + " rows");
  std::vector<Vector> vs;
  vs.reserve(dim);
  for (std::size_t i = 0; i < dim; ++i)
    vs.push_back(vector_from_json(f, dim, rows[i], context + "[" + std::to_string(i) + "]"));
  return Matrix::from_rows(f, vs);
}

}  // namespace detail

inline json to_json(const Vector& v) {
  json row = json::array();
  for (std::size_t i = 0; i < v.size(); ++i) row.push_back(v[i].to_string());
  return row;
}

inline json to_json(const Matrix& m) {
  json rows = json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) rows.push_back(to_json(m.row(i)));
  return rows;
}

inline json to_json(const Permutation& p) {
  json images = json::array();
  for (std::size_t v : p.images()) images.push_back(v);
  return images;
}

/// Parses the canonical input document. `field_override`, when given,
/// replaces the document's "field" entry.
inline InputDocument parse_input_document(const json& doc,
                                          const std::optional<std::string>& field_override = {}) {
  if (!doc.is_object()) throw ParseError("input document: expected a JSON object");
  InputDocument out;

  if (field_override.has_value())
    out.field = FieldSpec::parse(*field_override);
  else if (doc.contains("field") && doc["field"].is_string())
    out.field = FieldSpec::parse(doc["field"].get<std::string>());
  else
    throw ParseError("input document: missing \"field\"");

  if (!doc.contains("dim") || !doc["dim"].is_number_integer() ||
      doc["dim"].get<std::int64_t>() < 2)
    throw ParseError("input document: \"dim\" must be an integer >= 2");
  out.dim = doc["dim"].get<std::size_t>();

  if (doc.contains("vectors")) {
    const json& rows = doc["vectors"];
    if (!rows.is_array()) throw ParseError("vectors: expected an array");
    for (std::size_t i = 0; i < rows.size(); ++i)
      out.vectors.push_back(detail::vector_from_json(out.field, out.dim, rows[i],
                                                     "vectors[" + std::to_string(i) + "]"));
  }

  if (doc.contains("points")) {
    const json& rows = doc["points"];
    if (!rows.is_array()) throw ParseError("points: expected an array");
    for (std::size_t i = 0; i < rows.size(); ++i) {
      const std::string context = "points[" + std::to_string(i) + "]";
      const Vector rep = detail::vector_from_json(out.field, out.dim, rows[i], context);
      if (rep.is_zero()) throw ParseError(context + ": zero vector is not a projective point");
      out.points.emplace_back(rep);
    }
  }

  if (doc.contains("permutation")) {
    const json& images = doc["permutation"];
    if (!images.is_array()) throw ParseError("permutation: expected an image array");
    std::vector<std::size_t> im;
    for (const json& v : images) {
      if (!v.is_number_integer() || v.get<std::int64_t>() < 0)
        throw ParseError("permutation: images must be indices");
      im.push_back(v.get<std::size_t>());
    }
    out.permutation = Permutation(std::move(im));
  }

  if (doc.contains("generators")) {
    const json& gens = doc["generators"];
    if (!gens.is_array()) throw ParseError("generators: expected an array of matrices");
    for (std::size_t i = 0; i < gens.size(); ++i)
      out.generators.push_back(detail::matrix_from_json(out.field, out.dim, gens[i],
                                                        "generators[" + std::to_string(i) + "]"));
  }

  if (doc.contains("seed"))
    out.seed = detail::vector_from_json(out.field, out.dim, doc["seed"], "seed");

  return out;
}

/// Reads and parses a document from disk. JSON syntax errors are rethrown
/// with the file path and line number.
inline InputDocument load_input_document(const std::string& path,
                                         const std::optional<std::string>& field_override = {}) {
  std::ifstream in(path);
  if (!in) throw ParseError(path + ": cannot open file");
  std::stringstream buffer;
  buffer << in.rdbuf();
  const std::string text = buffer.str();
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    std::size_t line = 1;
    for (std::size_t i = 0; i < e.byte && i < text.size(); ++i)
      if (text[i] == '\n') ++line;
    throw ParseError(path + ":" + std::to_string(line) + ": " + e.what());
  }
  try {
    return parse_input_document(doc, field_override);
  } catch (const Error& e) {
    throw ParseError(path + ": " + e.what());
  }
}

inline json classification_document(const LinearClass& cls) {
  json doc;
  doc["verdict"] = to_string(cls.kind);
  doc["rank"] = cls.rank;
  if (cls.witness.has_value()) doc["witness"] = to_json(*cls.witness);
  return doc;
}

inline json classification_document(const ProjClass& cls) {
  json doc;
  doc["verdict"] = to_string(cls.kind);
  if (cls.kind == ProjKind::Simplex) doc["m"] = cls.simplex_m;
  if (cls.witness.has_value()) doc["witness"] = to_json(*cls.witness);
  return doc;
}

inline json extension_document(const std::optional<Matrix>& u) {
  json doc;
  doc["extension"] = u.has_value() ? to_json(*u) : json(nullptr);
  return doc;
}

/// Canonical sweep report; wall-clock time is deliberately left out so
/// repeated runs emit identical bytes.
inline json sweep_report_document(const SweepReport& report) {
  json doc;
  doc["theorem"] = report.theorem;
  doc["n"] = report.n;
  doc["p"] = report.p;
  doc["max_size"] = report.max_size;
  doc["group_order"] = report.group_order;
  doc["universe_size"] = report.universe_size;
  doc["subsets_checked"] = report.subsets_checked;
  doc["pairs_checked"] = report.pairs_checked;
  doc["verdict_counts"] = json::object();
  for (const auto& [verdict, count] : report.verdict_counts)
    doc["verdict_counts"][verdict] = count;
  doc["discrepancies"] = json::array();
  for (const std::string& d : report.discrepancies) doc["discrepancies"].push_back(d);
  return doc;
}

inline json corollary_report_document(const CorollaryReport& r) {
  json hyp;
  hyp["generator_count_ok"] = r.generator_count_ok;
  hyp["relations_ok"] = r.relations_ok;
  hyp["group_order"] = r.group_order;
  hyp["group_order_ok"] = r.group_order_ok;
  hyp["orbit_size"] = r.orbit_size;
  hyp["orbit_ok"] = r.orbit_ok;
  hyp["faithful"] = r.faithful;
  hyp["no_proper_invariant_subspace"] = r.no_proper_invariant_subspace;
  hyp["scan_complete"] = r.scan_complete;
  if (r.invariant_subspace.has_value()) {
    json basis = json::array();
    for (const Vector& v : *r.invariant_subspace) basis.push_back(to_json(v));
    hyp["invariant_subspace"] = basis;
  } else {
    hyp["invariant_subspace"] = nullptr;
  }
  hyp["all_ok"] = r.hypotheses_ok;

  json doc;
  doc["degree"] = r.degree;
  doc["hypotheses"] = hyp;
  if (r.hypotheses_ok) {
    json con;
    con["classification"] = r.classification.value_or("?");
    con["classification_ok"] = r.classification_ok.value_or(false);
    if (r.group_matches_extensions.has_value())
      con["group_matches_extensions"] = *r.group_matches_extensions;
    else
      con["group_matches_extensions"] = nullptr;
    con["all_ok"] = r.conclusions_ok;
    doc["conclusions"] = con;
  } else {
    doc["conclusions"] = nullptr;
  }
  return doc;
}

}  // namespace permext::io
