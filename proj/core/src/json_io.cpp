// SPDX-License-Identifier: Apache-2.0

#include "orbit/json_io.hpp"

#include <nlohmann/json.hpp>

namespace orbit {
namespace {

using nlohmann::json;

json parse_document(const std::string& text) {
  json doc = json::parse(text, nullptr, false);
  if (doc.is_discarded()) throw ParseError("malformed JSON document");
  return doc;
}

// Translates nlohmann type errors into the library's parse error.
template <typename F>
auto guarded(F&& f) {
  try {
    return f();
  } catch (const json::exception& e) {
    throw ParseError(e.what());
  }
}

Rat rat_from_json(const json& value) {
  if (value.is_string()) return parse_rat(value.get<std::string>());
  if (value.is_number_integer())
    return Rat(static_cast<long>(value.get<std::int64_t>()));
  throw ParseError("expected a number encoded as a string");
}

const json& field(const json& doc, const char* name) {
  auto it = doc.find(name);
  if (it == doc.end())
    throw ParseError(std::string("missing field '") + name + "'");
  return *it;
}

}  // namespace

FiniteSequence sequence_from_json(const std::string& text) {
  const json doc = parse_document(text);
  if (!doc.is_object()) throw ParseError("sequence must be an object");
  const json& values = field(doc, "values");
  if (!values.is_array()) throw ParseError("'values' must be an array");
  std::vector<Rat> out;
  out.reserve(values.size());
  for (const json& v : values) out.push_back(rat_from_json(v));
  return FiniteSequence(std::move(out));
}

std::string sequence_to_json(const FiniteSequence& x) {
  json values = json::array();
  for (const Rat& v : x.values()) values.push_back(rat_to_string(v));
  return json{{"values", values}}.dump();
}

std::string rearrangement_to_json(const SortedProfile& p) {
  json profile = json::array();
  for (const Rat& v : p.profile()) profile.push_back(rat_to_string(v));
  json recover = json::array();
  for (const RecoverSlot& slot : p.recover())
    recover.push_back({{"index", slot.source_index}, {"sign", slot.sign}});
  return json{{"n", p.original_length()},
              {"profile", profile},
              {"recover", recover}}
      .dump();
}

std::string verdict_to_json(const OrbitVerdict& v) {
  json doc{{"holds", v.holds}, {"constant", rat_to_string(v.constant)}};
  doc["witness_k"] = v.witness_k ? json(*v.witness_k) : json(nullptr);
  return doc.dump();
}

namespace {

SparseOperator operator_from_doc(const json& doc) {
  if (!doc.is_object()) throw ParseError("operator must be an object");
  const std::int64_t n_in = field(doc, "n_in").get<std::int64_t>();
  const std::int64_t n_out = field(doc, "n_out").get<std::int64_t>();
  if (n_in < 0 || n_out < 0) throw ParseError("negative operator dimension");
  SparseOperator T(n_in, n_out);
  for (const json& row : field(doc, "rows")) {
    const std::int64_t out = field(row, "out").get<std::int64_t>();
    for (const json& entry : field(row, "entries")) {
      if (!entry.is_array() || entry.size() != 2)
        throw ParseError("operator entry must be [index, coefficient]");
      const std::int64_t in = entry[0].get<std::int64_t>();
      Rat coeff = rat_from_json(entry[1]);
      if (coeff == 0) throw ParseError("zero coefficient stored");
      try {
        T.add(out, in, std::move(coeff));
      } catch (const std::invalid_argument& e) {
        throw ParseError(e.what());
      }
    }
  }
  return T;
}

json operator_body(const SparseOperator& T) {
  json rows = json::array();
  for (std::int64_t out = 1; out <= T.n_out(); ++out) {
    const auto& row = T.rows()[static_cast<std::size_t>(out - 1)];
    if (row.empty()) continue;
    json entries = json::array();
    for (const OperatorEntry& e : row)
      entries.push_back(json::array({e.in, rat_to_string(e.coeff)}));
    rows.push_back({{"out", out}, {"entries", entries}});
  }
  return json{{"n_in", T.n_in()}, {"n_out", T.n_out()}, {"rows", rows}};
}

}  // namespace

SparseOperator operator_from_json(const std::string& text) {
  const json doc = parse_document(text);
  return guarded([&] { return operator_from_doc(doc); });
}

std::string operator_to_json(const SparseOperator& T) {
  return operator_body(T).dump();
}

OperatorCertificate certificate_from_json(const std::string& text) {
  const json doc = parse_document(text);
  return guarded([&] {
    OperatorCertificate cert;
    cert.op = operator_from_doc(doc);
    cert.l1_bound = rat_from_json(field(doc, "l1_bound"));
    cert.l0_expansion = field(doc, "l0_expansion").get<std::int64_t>();
    cert.pipeline_json = field(doc, "pipeline").dump();
    return cert;
  });
}

std::string certificate_to_json(const OperatorCertificate& cert) {
  json doc = operator_body(cert.op);
  doc["l1_bound"] = rat_to_string(cert.l1_bound);
  doc["l0_expansion"] = cert.l0_expansion;
  doc["pipeline"] = json::parse(cert.pipeline_json);
  return doc.dump();
}

WeightFamily weight_from_json(const std::string& text) {
  const json doc = parse_document(text);
  return guarded([&]() -> WeightFamily {
    const std::string kind = field(doc, "kind").get<std::string>();
    try {
      if (kind == "power")
        return WeightFamily::power(rat_from_json(field(doc, "p")));
      if (kind == "telescoping-quadratic")
        return WeightFamily::telescoping_quadratic();
      if (kind == "pairwise") {
        std::vector<Rat> alpha, beta;
        for (const json& v : field(doc, "alpha")) alpha.push_back(rat_from_json(v));
        for (const json& v : field(doc, "beta")) beta.push_back(rat_from_json(v));
        return WeightFamily::pairwise(std::move(alpha), std::move(beta));
      }
    } catch (const std::invalid_argument& e) {
      throw ParseError(e.what());
    }
    throw ParseError("unknown weight kind '" + kind + "'");
  });
}

std::string report_to_json(const Report& report) {
  json doc = json::array();
  for (const ReportEntry& e : report)
    doc.push_back({{"check", e.check}, {"pass", e.pass}, {"details", e.details}});
  return doc.dump();
}

std::string envelope_to_json(const PiecewiseLinearConcave& f) {
  json segments = json::array();
  for (const EnvelopeSegment& s : f.segments())
    segments.push_back({{"slope", rat_to_string(s.slope)},
                        {"intercept", rat_to_string(s.intercept)}});
  json cuts = json::array();
  for (const Rat& b : f.breakpoints()) cuts.push_back(rat_to_string(b));
  return json{{"segments", segments}, {"breakpoints", cuts}}.dump();
}

}  // namespace orbit
