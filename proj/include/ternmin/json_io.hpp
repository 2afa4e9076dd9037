#pragma once

// JSON documents for every report type. BigInt-valued fields are decimal
// strings; structural small integers stay JSON numbers.

#include "ternmin/certificates.hpp"
#include "ternmin/code.hpp"
#include "ternmin/minimality.hpp"
#include "ternmin/weight_class.hpp"

#include <json.hpp>

#include <optional>
#include <vector>

namespace ternmin {

using Json = nlohmann::json;

/// {m, k, S, family, class_values}
Json to_json(const WeightClassFunction& fn);
WeightClassFunction function_from_json(const Json& j);

struct FunctionHeader {
  int m = 0;
  std::optional<int> k;
  Family family = Family::custom;
  WeightSet subset;

  static FunctionHeader of(const WeightClassFunction& fn);
  friend bool operator==(const FunctionHeader&, const FunctionHeader&) = default;
};

struct WeightDistributionDoc {
  FunctionHeader header;
  WeightDistribution dist;
  friend bool operator==(const WeightDistributionDoc&, const WeightDistributionDoc&) = default;
};

struct CweDoc {
  FunctionHeader header;
  CompleteWeightEnumerator cwe;
  friend bool operator==(const CweDoc&, const CweDoc&) = default;
};

struct VerdictDoc {
  MinimalityVerdict verdict;
  AbReport ab;
  friend bool operator==(const VerdictDoc&, const VerdictDoc&) = default;
};

Json to_json(const WeightDistributionDoc& doc);
WeightDistributionDoc weight_distribution_from_json(const Json& j);

Json to_json(const CweDoc& doc);
CweDoc cwe_from_json(const Json& j);

Json to_json(const VerdictDoc& doc);
VerdictDoc verdict_from_json(const Json& j);

Json to_json(const CertificateReport& report);
CertificateReport certificate_from_json(const Json& j);

}  // namespace ternmin
