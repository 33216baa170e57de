#include "lpocert/certificate.hpp"

#include "lpocert/errors.hpp"
#include "lpocert/hierarchy.hpp"
#include "lpocert/lpo_approx.hpp"

namespace lpo {

namespace {

const char* kConventions =
    "F_0(n)=n+1; (b+w^(e+1)*c)[n]=b+w^(e+1)*(c-1)+w^e*n; "
    "p_R=1+max over rules of the least p with r <_p l; "
    "curve: dh maximized over ground terms of size<=n";

}  // namespace

Certificate build_certificate(const TRSFile& trs,
                              const OrientationResult& orientation,
                              const CertificateOptions& opts) {
  Certificate cert;
  cert.system_name = trs.name;
  cert.conventions = kConventions;
  cert.orientable = orientation.orientable;
  if (!cert.orientable) return cert;

  cert.precedence = orientation.chain;
  if (cert.precedence.empty())
    for (const auto& [lo, hi] : orientation.sig.pairs())
      cert.precedence_pairs.push_back(lo + "<" + hi);

  try {
    cert.cls = classify(orientation.sig);
    cert.bound_index = bound_index(*cert.cls).str();
  } catch (const DegenerateSignature& e) {
    cert.classification_error = e.what();
  }

  ApproxWorkspace ws(orientation.sig, opts.budget);
  cert.p_R = ws.static_pR(trs.rules);
  ContainmentReport rep =
      check_containment(trs.rules, ws, cert.p_R, opts.containment_bound);
  if (!rep.violations.empty())
    throw Error("containment failed at p=" + std::to_string(cert.p_R) +
                " for step " + rep.violations.front().first.str() + " -> " +
                rep.violations.front().second.str());
  cert.containment_checked_to = opts.containment_bound;
  cert.curve =
      dh_complexity(trs.rules, orientation.sig, opts.curve_n, opts.step_cap);
  return cert;
}

nlohmann::ordered_json certificate_json(const Certificate& cert) {
  nlohmann::ordered_json j;
  j["system_name"] = cert.system_name;
  j["orientable"] = cert.orientable;
  if (!cert.orientable) {
    j["conventions"] = cert.conventions;
    return j;
  }
  j["precedence"] = cert.precedence.empty() ? cert.precedence_pairs
                                            : cert.precedence;
  if (cert.cls) {
    j["k"] = cert.cls->k;
    j["m"] = cert.cls->m;
    j["max_arity"] = cert.cls->max_arity;
    j["rk"] = cert.cls->rk;    // std::map: name-sorted keys
    j["rk2"] = cert.cls->rk2;
    j["bound_index"] = cert.bound_index;
  } else {
    j["classification_error"] = *cert.classification_error;
  }
  j["p_R"] = cert.p_R;
  j["containment_checked_to"] = cert.containment_checked_to;
  auto curve = nlohmann::ordered_json::array();
  for (const CurvePoint& pt : cert.curve)
    curve.push_back({{"n", pt.n}, {"dh", pt.dh}, {"witness", pt.witness.str()}});
  j["curve"] = curve;
  j["conventions"] = cert.conventions;
  return j;
}

std::string certificate_text(const Certificate& cert) {
  std::string out;
  out += "system: " + cert.system_name + "\n";
  out += std::string("orientable: ") + (cert.orientable ? "yes" : "no") + "\n";
  if (!cert.orientable) return out;
  out += "precedence:";
  if (!cert.precedence.empty()) {
    for (std::size_t i = 0; i < cert.precedence.size(); ++i)
      out += (i ? " < " : " ") + cert.precedence[i];
  } else {
    for (const std::string& p : cert.precedence_pairs) out += " " + p;
  }
  out += "\n";
  if (cert.cls) {
    out += "k: " + std::to_string(cert.cls->k) +
           ", m: " + std::to_string(cert.cls->m) +
           ", max_arity: " + std::to_string(cert.cls->max_arity) + "\n";
    out += "bound_index: " + cert.bound_index + "\n";
  } else {
    out += "classification_error: " + *cert.classification_error + "\n";
  }
  out += "p_R: " + std::to_string(cert.p_R) + "\n";
  out += "containment_checked_to: " +
         std::to_string(cert.containment_checked_to) + "\n";
  out += "curve:\n";
  for (const CurvePoint& pt : cert.curve)
    out += "  n=" + std::to_string(pt.n) + " dh=" + std::to_string(pt.dh) +
           " witness=" + pt.witness.str() + "\n";
  return out;
}

}  // namespace lpo
