#include "pcbdec/acts.hpp"

#include <algorithm>

namespace pcbdec {

Act::Act(std::string name, std::map<std::string, std::string> assignment)
    : name_(std::move(name)), assignment_(std::move(assignment)) {
    if (assignment_.empty())
        throw ValidationError("act '" + name_ + "' assigns no outcomes");
}

const std::string& Act::prize_at(const Frame& frame, std::size_t outcome) const {
    auto it = assignment_.find(frame.label(outcome));
    if (it == assignment_.end())
        throw ValidationError("act '" + name_ + "' leaves outcome '" + frame.label(outcome) +
                              "' unmapped");
    return it->second;
}

Subset Act::preimage(const Frame& frame, const std::string& prize) const {
    Subset s = 0;
    for (std::size_t i = 0; i < frame.size(); ++i)
        if (prize_at(frame, i) == prize) s |= singleton(i);
    return s;
}

TwoStageLottery induce_lottery(const Act& act, const PcbDecomposition& d) {
    const Frame& frame = d.frame();
    TwoStageLottery lottery;
    for (const auto& block : d.blocks()) {
        lottery.block_probs.push_back(block.prob);
        std::map<std::string, double> branch;
        for (const auto& [idx, pi] : block.possibility) {
            const std::string& prize = act.prize_at(frame, idx);
            auto [it, inserted] = branch.emplace(prize, pi);
            if (!inserted) it->second = std::max(it->second, pi);
        }
        lottery.branches.push_back(std::move(branch));
    }
    return lottery;
}

std::map<std::string, double> flat_lottery(const Act& act, const MassFunction& m) {
    const Frame& frame = m.frame();
    std::map<std::string, Subset> preimages;
    for (std::size_t i = 0; i < frame.size(); ++i)
        preimages[act.prize_at(frame, i)] |= singleton(i);
    std::map<std::string, double> out;
    for (const auto& [prize, event] : preimages) out[prize] = m.plausibility(event);
    return out;
}

std::map<std::string, double> reduce_compound(const std::vector<CompoundBranch>& compound,
                                              const MassFunction& m) {
    const Subset full = m.frame().full();
    std::map<std::string, Subset> events;
    for (const auto& branch : compound) {
        if ((branch.outer_event & ~full) != 0)
            throw StructureError("compound outer event is not measurable in the frame");
        for (const auto& [inner_event, prize] : branch.inner) {
            if ((inner_event & ~full) != 0)
                throw StructureError("compound inner event is not measurable in the frame");
            events[prize] |= branch.outer_event & inner_event;
        }
    }
    std::map<std::string, double> out;
    for (const auto& [prize, s] : events) out[prize] = s == 0 ? 0.0 : m.plausibility(s);
    return out;
}

} // namespace pcbdec
