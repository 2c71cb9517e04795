#pragma once

#include "divatlas/atlas.hpp"
#include "divatlas/enclosing.hpp"
#include "divatlas/tensor.hpp"

#include <json.hpp>

#include <optional>
#include <string>
#include <vector>

namespace divatlas {

using Json = nlohmann::ordered_json;

struct AtlasParams {
  int g = 0;
  int d = 0;
  int k = 0;
  TensorKind kind = TensorKind::skew;  // skew <-> class n(d), sym <-> class t(d)
  bool compat_paper_sym = false;
  bool compat_paper_secdim = false;
  bool canonical = false;

  AtlasOptions options() const;
  friend bool operator==(const AtlasParams&, const AtlasParams&) = default;
};

struct AtlasReport {
  AtlasParams params;
  std::vector<ComponentRecord> components;
  std::vector<IntersectionRecord> intersections;
  ComponentCount counts;
  std::optional<CanonicalReport> canonical;
  std::vector<std::string> notes;

  friend bool operator==(const AtlasReport&, const AtlasReport&) = default;
};

/// Computes the full atlas, including every discrepancy note that applies.
/// Throws std::invalid_argument for out-of-range parameters, including a
/// canonical request with d != 2g - 2.
AtlasReport build_atlas_report(const AtlasParams& params);

/// "n" or "t".
std::string class_name(TensorKind kind);
TensorKind parse_class_name(const std::string& text);

Json to_json(const AtlasReport& report);
/// Throws nlohmann::json exceptions or std::invalid_argument on schema errors.
AtlasReport atlas_report_from_json(const Json& j);
std::string render_text(const AtlasReport& report);

// Tensor file format:
// {"n": int, "k": int, "kind": "skew"|"sym",
//  "terms": [{"index": [ints], "coeff": "p/q"}]}
// index is a strictly increasing subset (skew) or an exponent vector of
// length n (sym).
Tensor tensor_from_json(const Json& j);
Json tensor_to_json(const Tensor& t);

struct EncReport {
  int n = 0;
  int k = 0;
  TensorKind kind = TensorKind::skew;
  int enc = 0;
  std::vector<Vector> basis;
  std::optional<int> sub;
  std::optional<bool> member;
};

EncReport build_enc_report(const Tensor& t, std::optional<int> sub);
Json to_json(const EncReport& report);
std::string render_text(const EncReport& report);

} // namespace divatlas
