#pragma once

#include <memory>
#include <string>

#include "cyclecover/cover.hpp"

namespace cyclecover {

// One JSON document per solution; schema in docs/formats/certificate.md.
// Stable fields: `graph6`, `k`, `m`, `cycles[][].vertices` (each circuit as
// a directed vertex sequence). `oriented` records whether directions are
// meaningful; post-processing sections are appended by the functions below.
std::string certificate_for(const OrientedCycleCover& ocover,
                            bool oriented = true);
std::string certificate_for(const CycleCover& cover);

struct ParsedCertificate {
    std::shared_ptr<CubicGraph> graph;  // owns the decoded graph
    OrientedCycleCover cover;           // points into *graph
    bool oriented = true;
};

// Decodes and re-verifies the document (structure, adjacency, cover
// validity); throws GraphError with the first failure.
ParsedCertificate parse_certificate(const std::string& text);

// Pipeline steps: each parses the document, computes its section and
// returns the enriched document. Idempotent (an existing section is
// replaced). An unmet precondition records {"skipped": reason} instead.
std::string certificate_with_classification(const std::string& cert);
std::string certificate_with_surface(const std::string& cert);
std::string certificate_with_split(const std::string& cert);
std::string certificate_with_ribbon(const std::string& cert);
std::string certificate_with_flows(const std::string& cert);
std::string certificate_with_checks(const std::string& cert);

}  // namespace cyclecover
