#pragma once

#include <map>
#include <string>
#include <vector>

#include "pcbdec/pcb.hpp"
#include "pcbdec/utility.hpp"

namespace pcbdec {

// Total map from frame outcomes to prize labels.
class Act {
public:
    Act(std::string name, std::map<std::string, std::string> assignment);

    const std::string& name() const { return name_; }
    const std::map<std::string, std::string>& assignment() const { return assignment_; }

    // Prize delivered at outcome index; throws if the act is not total
    // over the frame.
    const std::string& prize_at(const Frame& frame, std::size_t outcome) const;

    // Preimage of a prize as a subset of the frame.
    Subset preimage(const Frame& frame, const std::string& prize) const;

private:
    std::string name_;
    std::map<std::string, std::string> assignment_;
};

// Branch i gives prize w the possibility max{pi_i(theta) | d(theta)=w}.
TwoStageLottery induce_lottery(const Act& act, const PcbDecomposition& d);

// Flat summary: prize -> plausibility of its preimage. Not normalized.
std::map<std::string, double> flat_lottery(const Act& act, const MassFunction& m);

// A compound lottery realized by events of one pcb: outer event E_i pays
// the inner lottery, whose branch (E_ij, prize) pays the prize on E_ij.
struct CompoundBranch {
    Subset outer_event = 0;
    std::vector<std::pair<Subset, std::string>> inner;
};

// Reduction per belief-function calculus: prize w_j gets Pl(S_j) where
// S_j = union_i (E_i intersect E_ij).
std::map<std::string, double> reduce_compound(const std::vector<CompoundBranch>& compound,
                                              const MassFunction& m);

} // namespace pcbdec
