#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "lpocert/classify.hpp"
#include "lpocert/lpo.hpp"
#include "lpocert/ordinal.hpp"
#include "lpocert/rewrite.hpp"
#include "lpocert/trs_parse.hpp"

namespace lpo {

struct CertificateOptions {
  unsigned containment_bound = 8;  // ground size for the containment check
  unsigned curve_n = 3;            // dh curve horizon
  std::uint64_t step_cap = 100000;
  std::uint64_t budget = 1000000;  // predecessor-set element budget
};

// Everything the toolkit can assert about one rewrite system. For an
// unorientable system only system_name, orientable and conventions are
// meaningful; for orientable systems over a signature with no symbol of
// arity >= 2 the classification fields give way to classification_error.
struct Certificate {
  std::string system_name;
  bool orientable = false;
  std::vector<std::string> precedence;        // ascending chain if total,
  std::vector<std::string> precedence_pairs;  // "g<f" strings otherwise
  std::optional<Classification> cls;
  std::optional<std::string> classification_error;
  std::string bound_index;  // "w^{1+k}*m" in ordinal text, when classified
  unsigned p_R = 0;
  unsigned containment_checked_to = 0;
  std::vector<CurvePoint> curve;
  std::string conventions;
};

// Orient (or accept a precomputed orientation), classify, compute p_R,
// check containment and measure the dh curve.
Certificate build_certificate(const TRSFile& trs,
                              const OrientationResult& orientation,
                              const CertificateOptions& opts = {});

// Canonical JSON, fixed key order:
//   system_name, orientable, precedence, k, m, max_arity, rk, rk2,
//   bound_index, p_R, containment_checked_to, curve, conventions.
// Absent sections are omitted, never null. Serializing the same
// certificate twice yields identical bytes.
nlohmann::ordered_json certificate_json(const Certificate& cert);

// Human-readable rendering of the same content.
std::string certificate_text(const Certificate& cert);

}  // namespace lpo
