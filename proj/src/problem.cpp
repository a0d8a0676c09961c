#include "pcbdec/problem.hpp"

namespace pcbdec {

const PrizeAssignment& DecisionProblem::require_prizes() const {
    if (!prizes)
        throw ValidationError("problem has no prize assignment");
    return *prizes;
}

TFunction DecisionProblem::effective_attitude() const {
    return attitude ? *attitude : TFunction::parametric(0.5);
}

void DecisionProblem::check_acts() const {
    const PrizeAssignment& pa = require_prizes();
    for (const Act& act : acts) {
        for (const auto& [outcome, prize] : act.assignment()) {
            if (!frame.index_of(outcome))
                throw ValidationError("act '" + act.name() + "' references unknown outcome '" +
                                      outcome + "'");
            if (!pa.has(prize))
                throw ValidationError("act '" + act.name() + "' references unknown prize '" +
                                      prize + "'");
        }
        for (std::size_t i = 0; i < frame.size(); ++i)
            act.prize_at(frame, i); // throws on unmapped outcome
    }
}

} // namespace pcbdec
