#ifndef LNGRAPH_JSON_IO_HPP
#define LNGRAPH_JSON_IO_HPP

#include <string>
#include <variant>

#include "lngraph/certificate.hpp"
#include "lngraph/survey.hpp"
#include "lngraph/verify.hpp"

namespace lngraph {

/// Certificate wire format:
///   {"n": int, "kind": "path"|"cycle", "vertices": [[head,tail], ...]}
/// plus "endpoints": [[h,t],[h,t]] for paths and "anchor": [h,t] for
/// cycles. Missing endpoints/anchor default to the sequence ends.
std::string to_json(const PathCertificate& cert);
std::string to_json(const CycleCertificate& cert);

using AnyCertificate = std::variant<PathCertificate, CycleCertificate>;

/// Parses the wire format. Structural problems (bad JSON, wrong types,
/// missing fields) throw CertificateParseError; out-of-range vertices
/// parse fine and are left for the verifier to flag.
AnyCertificate parse_certificate(const std::string& text);

std::string to_json(const VerificationResult& result);
std::string to_json(const SurveyReport& report);

}  // namespace lngraph

#endif
