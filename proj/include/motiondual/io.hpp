#pragma once

// Text, JSON and Graphviz forms of the library's values. Every *_to_json has
// a matching *_from_json that restores an equal value.

#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"

#include "motiondual/chains.hpp"
#include "motiondual/constants.hpp"
#include "motiondual/dual_space.hpp"
#include "motiondual/primal.hpp"
#include "motiondual/signature.hpp"

namespace motiondual::io {

using nlohmann::json;

/// "2,1,0" as an SO(n) signature. The empty string is the SO(1) signature.
Signature parse_signature(std::string_view text, int n);
/// "so5" -> SO(5).
GroupContext parse_group(std::string_view text);

std::string rational_to_string(const Rational& r);
Rational parse_rational(std::string_view text);

/// {"n": 5, "entries": [2, 1]}
json signature_to_json(const Signature& s);
Signature signature_from_json(const json& j);

json walk_to_json(const Walk& w);
Walk walk_from_json(const json& j);

/// Sets as arrays of point ids.
json chain_to_json(const Chain& c);
Chain chain_from_json(const json& j, std::size_t universe);

/// A chain together with the model and end points it certifies.
struct ChainCertificate {
  int n = 0;
  int bound = 0;
  Signature from;
  Signature to;
  Chain chain;
};
json chain_certificate_to_json(const ChainCertificate& c);
ChainCertificate chain_certificate_from_json(const json& j);

json certificate_to_json(const MergeCertificate& c);
MergeCertificate certificate_from_json(const json& j);

json certificate_report_to_json(const CertificateReport& r);

json report_to_json(const ConstantsReport& r);
ConstantsReport report_from_json(const json& j);

/// Points with labels, kinds, signatures and closures, plus ~ edges.
json model_to_json(const DualModel& m);
/// Rebuilds the underlying space from model_to_json output.
FiniteT0Space space_from_json(const json& j);

json star_graph_to_json(const StarGraph& g);

/// Germs as boxes, class points as ellipses, ~ edges undirected and closure
/// containment as dashed arcs from a germ to the class points in its closure.
std::string model_to_dot(const DualModel& m);
std::string star_graph_to_dot(const StarGraph& g);

/// One row per report: N, Orc, D, Orc(M), K_s(M), K(M).
std::string render_table(const std::vector<ConstantsReport>& reports);

}  // namespace motiondual::io
