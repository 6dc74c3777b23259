#pragma once

#include "singan/boundary.hpp"
#include "singan/classify.hpp"
#include "singan/reider.hpp"

#include <json.hpp>

#include <optional>
#include <string>

namespace singan {

inline constexpr int kDocumentSchemaVersion = 1;

/// Deterministic JSON document for one germ: graph echo, cycles, invariants,
/// classification, optional triple and verdict. All rationals are exact "p/q"
/// strings; key order is fixed.
nlohmann::ordered_json analysis_document(const GraphFile& file, const SingularityReport& report,
                                         const TripleReport* triple = nullptr,
                                         const ReiderVerdict* verdict = nullptr);

nlohmann::ordered_json verdict_json(const ReiderVerdict& v);
nlohmann::ordered_json smooth_info_json(const SmoothPointInfo& info);

std::string render_text(const GraphFile& file, const SingularityReport& report,
                        const TripleReport* triple = nullptr);

/// Structural check of an analysis document against the shipped schema
/// (required keys, value kinds, rational-string format). Returns problems.
std::vector<std::string> validate_document(const nlohmann::json& doc);

}  // namespace singan
