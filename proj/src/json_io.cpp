#include "ternmin/json_io.hpp"

#include "ternmin/errors.hpp"

namespace ternmin {
namespace {

std::string dec(const BigInt& v) { return to_decimal(v); }

BigInt big(const Json& j) {
  if (!j.is_string()) throw InvalidInput("expected a decimal string");
  return from_decimal(j.get<std::string>());
}

Json header_fields(const FunctionHeader& h) {
  Json j;
  j["m"] = h.m;
  j["k"] = h.k ? Json(*h.k) : Json(nullptr);
  j["family"] = std::string(to_string(h.family));
  j["S"] = Json(std::vector<int>(h.subset.begin(), h.subset.end()));
  return j;
}

FunctionHeader header_from(const Json& j) {
  FunctionHeader h;
  h.m = j.at("m").get<int>();
  if (j.contains("k") && !j.at("k").is_null()) h.k = j.at("k").get<int>();
  h.family = parse_family(j.at("family").get<std::string>());
  for (int s : j.at("S")) h.subset.insert(s);
  return h;
}

}  // namespace

FunctionHeader FunctionHeader::of(const WeightClassFunction& fn) {
  return {fn.m(), fn.k(), fn.family(), fn.subset()};
}

Json to_json(const WeightClassFunction& fn) {
  Json j = header_fields(FunctionHeader::of(fn));
  std::vector<int> values;
  for (F3 c : fn.class_values()) values.push_back(c.value());
  j["class_values"] = values;
  return j;
}

WeightClassFunction function_from_json(const Json& j) {
  const FunctionHeader h = header_from(j);
  std::vector<F3> values;
  for (int v : j.at("class_values")) {
    if (v < 0 || v > 2) throw InvalidInput("class value outside {0,1,2}");
    values.emplace_back(v);
  }
  if (h.family == Family::custom) return WeightClassFunction::custom(values);
  if (!h.k) throw InvalidInput("family function without k");
  auto fn = WeightClassFunction::make(h.family, h.m, *h.k, h.subset, RangeCheck::unchecked);
  if (!std::equal(values.begin(), values.end(), fn.class_values().begin(), fn.class_values().end())) {
    throw InvalidInput("class_values do not match family definition");
  }
  return fn;
}

Json to_json(const WeightDistributionDoc& doc) {
  Json j = header_fields(doc.header);
  Json dist = Json::array();
  for (const auto& [w, a] : doc.dist.entries) dist.push_back({{"w", dec(w)}, {"A", dec(a)}});
  j["dist"] = dist;
  return j;
}

WeightDistributionDoc weight_distribution_from_json(const Json& j) {
  WeightDistributionDoc doc{header_from(j), {}};
  for (const auto& e : j.at("dist")) doc.dist.entries[big(e.at("w"))] = big(e.at("A"));
  return doc;
}

Json to_json(const CweDoc& doc) {
  Json j = header_fields(doc.header);
  Json terms = Json::array();
  for (const auto& [key, mult] : doc.cwe.terms) {
    terms.push_back({{"t0", dec(key.t0)}, {"t1", dec(key.t1)}, {"t2", dec(key.t2)}, {"mult", dec(mult)}});
  }
  j["terms"] = terms;
  return j;
}

CweDoc cwe_from_json(const Json& j) {
  CweDoc doc{header_from(j), {}};
  for (const auto& t : j.at("terms")) {
    doc.cwe.terms[{big(t.at("t0")), big(t.at("t1")), big(t.at("t2"))}] = big(t.at("mult"));
  }
  return doc;
}

Json to_json(const VerdictDoc& doc) {
  const auto& v = doc.verdict;
  Json j;
  j["minimal"] = v.minimal;
  j["method"] = v.method == Method::brute ? "brute" : "spectral";
  if (v.witness) {
    j["witness"] = Json::array({Json::array({v.witness->first.u, v.witness->first.v}),
                                Json::array({v.witness->second.u, v.witness->second.v})});
  } else {
    j["witness"] = nullptr;
  }
  if (v.spectral_witness) j["spectral_witness"] = *v.spectral_witness;
  j["vacuous"] = v.vacuous;
  j["w_min"] = dec(doc.ab.w_min);
  j["w_max"] = dec(doc.ab.w_max);
  j["violates_ab"] = doc.ab.violates_ab;
  return j;
}

VerdictDoc verdict_from_json(const Json& j) {
  VerdictDoc doc;
  auto& v = doc.verdict;
  v.minimal = j.at("minimal").get<bool>();
  const auto method = j.at("method").get<std::string>();
  if (method != "brute" && method != "spectral") throw InvalidInput("unknown verdict method");
  v.method = method == "brute" ? Method::brute : Method::spectral;
  if (j.contains("witness") && !j.at("witness").is_null()) {
    const auto& w = j.at("witness");
    v.witness = std::make_pair(CodewordIndex{w.at(0).at(0).get<int>(), w.at(0).at(1).get<std::uint64_t>()},
                               CodewordIndex{w.at(1).at(0).get<int>(), w.at(1).at(1).get<std::uint64_t>()});
  }
  if (j.contains("spectral_witness")) {
    v.spectral_witness = j.at("spectral_witness").get<std::array<std::uint64_t, 3>>();
  }
  v.vacuous = j.value("vacuous", false);
  doc.ab.w_min = big(j.at("w_min"));
  doc.ab.w_max = big(j.at("w_max"));
  doc.ab.violates_ab = j.at("violates_ab").get<bool>();
  return doc;
}

Json to_json(const CertificateReport& report) {
  Json j;
  j["lemma_tag"] = std::string(to_string(report.tag));
  j["m_min"] = report.m_min;
  j["m_max"] = report.m_max;
  Json failures = Json::array();
  for (const auto& [m, k] : report.failures) failures.push_back({{"m", m}, {"k", k}});
  j["failures"] = failures;
  Json margins = Json::array();
  for (const auto& [key, slack] : report.margins) {
    margins.push_back({{"m", key.first}, {"k", key.second}, {"slack", dec(slack)}});
  }
  j["margins"] = margins;
  j["min_slack"] = report.min_slack ? Json(dec(*report.min_slack)) : Json(nullptr);
  return j;
}

CertificateReport certificate_from_json(const Json& j) {
  CertificateReport report;
  report.tag = parse_lemma_tag(j.at("lemma_tag").get<std::string>());
  report.m_min = j.at("m_min").get<int>();
  report.m_max = j.at("m_max").get<int>();
  for (const auto& f : j.at("failures")) report.failures.emplace_back(f.at("m").get<int>(), f.at("k").get<int>());
  for (const auto& e : j.at("margins")) {
    report.margins[{e.at("m").get<int>(), e.at("k").get<int>()}] = big(e.at("slack"));
  }
  if (!j.at("min_slack").is_null()) report.min_slack = big(j.at("min_slack"));
  return report;
}

}  // namespace ternmin
