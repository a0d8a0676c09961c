#pragma once

#include <optional>
#include <string>
#include <vector>

#include "pcbdec/acts.hpp"
#include "pcbdec/pcb.hpp"
#include "pcbdec/utility.hpp"

namespace pcbdec {

enum class UncertaintyVariant { bpa, pcb, likelihood };

// Raw likelihood inputs, kept for lossless serialization.
struct LikelihoodSpec {
    std::vector<double> tau;
    std::vector<Subset> blocks;
    double lambda = 1.0;
};

// Self-contained decision problem: frame, uncertainty (one variant),
// prizes, acts and ambiguity attitude. prizes/acts/attitude are optional
// so that combination- or transform-only inputs stay minimal; evaluation
// requires them.
struct DecisionProblem {
    Frame frame;
    UncertaintyVariant variant = UncertaintyVariant::bpa;
    MassFunction uncertainty; // realized bpa, whatever the input variant
    std::optional<PcbDecomposition> pcb_input;   // set when variant == pcb
    std::optional<LikelihoodSpec> likelihood_input;
    std::optional<PrizeAssignment> prizes;
    std::vector<Act> acts;
    std::optional<TFunction> attitude;
    std::optional<double> alpha;

    const PrizeAssignment& require_prizes() const;
    // Attitude defaults to the neutral c = .5 when unspecified.
    TFunction effective_attitude() const;
    // Referential integrity of acts against frame and prizes.
    void check_acts() const;
};

} // namespace pcbdec
