#pragma once

#include <map>
#include <variant>
#include <vector>

#include "pcbdec/mass.hpp"

namespace pcbdec {

// One block of a partially consonant decomposition: a subset of the
// frame, its probability, and a conditional possibility over its members
// (keyed by outcome index).
struct PcbBlock {
    Subset members = 0;
    double prob = 0.0;
    std::map<std::size_t, double> possibility;
};

// Partition of the frame with block probabilities and per-block
// conditional possibilities. A block with prob > 0 must have a member at
// possibility 1; a single prob-0 block (outcomes outside every focus) is
// exempt.
class PcbDecomposition {
public:
    PcbDecomposition(Frame frame, std::vector<PcbBlock> blocks);

    const Frame& frame() const { return frame_; }
    const std::vector<PcbBlock>& blocks() const { return blocks_; }

private:
    Frame frame_;
    std::vector<PcbBlock> blocks_;
};

// Two overlapping foci with neither containing the other.
struct NotPcb {
    Subset focus_a = 0;
    Subset focus_b = 0;
};

using PcbDetectResult = std::variant<PcbDecomposition, NotPcb>;

// Finds the finest partition under which every focus lies inside one
// block with foci per block forming a nested chain, or reports the
// offending focus pair.
PcbDetectResult detect_pcb(const MassFunction& m);

// As detect_pcb but not-pcb input is a StructureError.
PcbDecomposition decompose(const MassFunction& m);

MassFunction recompose(const PcbDecomposition& d);

// Likelihood vector over the frame, max-normalized on construction
// (proportional vectors are equivalent).
class LikelihoodVector {
public:
    LikelihoodVector(Frame frame, std::vector<double> values);

    const Frame& frame() const { return frame_; }
    const std::vector<double>& values() const { return values_; }

private:
    Frame frame_;
    std::vector<double> values_;
};

// Translates a likelihood into the pcb with the given partition; blocks
// whose best likelihood is 0 drop out. lambda > 0 is the evidence scale
// (1 = no discounting).
MassFunction pcb_from_likelihood(const LikelihoodVector& tau,
                                 const std::vector<Subset>& blocks, double lambda);

// Prior probability vector to all-singleton bpa: m({i}) = rho_i^lambda / sum.
MassFunction prior_to_probability(const Frame& frame, const std::vector<double>& rho,
                                  double lambda);

} // namespace pcbdec
