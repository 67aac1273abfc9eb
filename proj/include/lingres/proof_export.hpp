#pragma once

#include <string>

#include <json.hpp>

#include "lingres/hedge_algebra.hpp"
#include "lingres/resolution.hpp"

namespace lingres {

// Proof JSON:
//   {"root": <id>, "reliability": "<term>",
//    "nodes": [{"id", "clause", "reliability", "premises": [a, b] | [],
//               "atom": "<name>" | null, "b1": "<term>" | null, "b2": ... }]}
// Nodes are listed in ascending id order.

nlohmann::json proof_to_json(const AlgebraSignature& sig, const ProofTree& proof);
/// Inverse of proof_to_json. Literal positions are recovered from the
/// premise clauses. Throws SyntaxError on schema violations.
ProofTree proof_from_json(const AlgebraSignature& sig, const nlohmann::json& j);

/// One node per clause, one edge per premise -> conclusion.
std::string proof_to_dot(const AlgebraSignature& sig, const ProofTree& proof);

/// Human readable listing, one node per line.
std::string proof_to_text(const AlgebraSignature& sig, const ProofTree& proof);

}  // namespace lingres
