#pragma once

#include "dpchroma/classifier.hh"
#include "dpchroma/cover.hh"
#include "dpchroma/girth.hh"
#include "dpchroma/polynomial.hh"

#include <json.hpp>

namespace dpchroma::io {

using nlohmann::json;

/// Array of decimal coefficient strings, ascending degree.
json polynomial_json(const Polynomial & p);
Polynomial polynomial_from_json(const json & j);

/// {"m": m, "perms": [[...], ...]} indexed by edge.
json cover_json(const Cover & c);
/// Accepts "perms" as an array over all edges or as an object keyed by
/// edge index (missing edges are the identity). InputError on bad shape.
Cover cover_from_json(const Graph & g, const json & j);

/// {"value": "<decimal>", "method": ..., "cover"?: ..., "minimizers"?: ...}
json count_report_json(const CountReport & r);

json cycle_json(const Cycle & c);
Cycle cycle_from_json(const json & j);

/// {"value": n | "infinite", "witness": [vertices] | null}
json girth_json(const GirthResult & r);
json balance_json(const BalanceVerdict & b);

json oriented_json(const Graph & g, const OrientedEdgeSet & s);

/// {"tree": [edge...], "labeling": [edge...], "witness_cycles": [[v...]...]}
json certificate_json(const DpGoodCertificate & c);
DpGoodCertificate certificate_from_json(const Graph & g, const json & j);

json verdict_json(const Graph & g, const ClassifierVerdict & v);

} // namespace dpchroma::io
