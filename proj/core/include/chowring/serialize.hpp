#pragma once

#include <nlohmann/json.hpp>

#include <string>
#include <vector>

#include "chowring/graded_ideal.hpp"
#include "chowring/pipeline.hpp"

namespace chowring {

/// Version of the JSON report layout in schemas/report.schema.json.
inline constexpr int kReportSchemaVersion = 1;

/// [{"coeff": "<decimal>", "exps": {"c1": 2, ...}}, ...] in canonical term order.
nlohmann::json polynomial_to_json(const Polynomial& p);
/// Throws ParseError on malformed input.
Polynomial polynomial_from_json(const nlohmann::json& j);

/// HNF rows written as canonical polynomials.
nlohmann::json lattice_to_json(const GradedPieceLattice& lattice);
nlohmann::json comparison_to_json(const IdealComparison& comparison);
nlohmann::json verification_to_json(const VerificationRecord& record);

nlohmann::json provenance_to_json(const std::vector<ProvenanceStep>& steps);
std::vector<ProvenanceStep> provenance_from_json(const nlohmann::json& j);

nlohmann::json presentation_to_json(const RingPresentation& p);

/// Human-readable summary.
std::string presentation_to_text(const RingPresentation& p);

}  // namespace chowring
