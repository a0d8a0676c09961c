#pragma once

#include <string>

#include "pcbdec/alt_rules.hpp"
#include "pcbdec/problem.hpp"

namespace pcbdec {

// Strict JSON ingestion: unknown fields are rejected, exactly one
// uncertainty variant must be present.
DecisionProblem parse_problem(const std::string& json_text);

// Lossless, deterministic serialization (parse of the output reproduces
// the problem, variant included).
std::string serialize_problem(const DecisionProblem& problem);

// Minimal problem document carrying a bpa; used for combine/transform
// output.
std::string serialize_bpa_problem(const MassFunction& m);

std::string validate_report(const DecisionProblem& problem);
std::string evaluate_report(const DecisionProblem& problem);
std::string compare_report(const RuleComparison& cmp);
std::string decompose_report(const PcbDecomposition& d);

} // namespace pcbdec
