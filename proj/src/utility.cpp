#include "pcbdec/utility.hpp"

#include <algorithm>
#include <cmath>

namespace pcbdec {

BinaryUtility::BinaryUtility(double lambda, double rho) : lambda_(lambda), rho_(rho) {
    if (lambda_ < -kUtilityTolerance || lambda_ > 1.0 + kUtilityTolerance ||
        rho_ < -kUtilityTolerance || rho_ > 1.0 + kUtilityTolerance)
        throw ValidationError("binary utility components must lie in [0,1]");
    lambda_ = std::clamp(lambda_, 0.0, 1.0);
    rho_ = std::clamp(rho_, 0.0, 1.0);
    if (std::abs(std::max(lambda_, rho_) - 1.0) > kUtilityTolerance)
        throw ValidationError("binary utility requires max(lambda, rho) = 1");
    if (lambda_ >= rho_)
        lambda_ = 1.0;
    else
        rho_ = 1.0;
}

BinaryUtility b_max(const BinaryUtility& a, const BinaryUtility& b) {
    return {std::max(a.lambda(), b.lambda()), std::max(a.rho(), b.rho())};
}

TFunction TFunction::parametric(double c) {
    if (!(c > 0.0 && c < 1.0))
        throw ValidationError("attitude parameter c must lie strictly between 0 and 1");
    TFunction t;
    t.form_ = c;
    return t;
}

TFunction TFunction::tabular(std::vector<std::pair<BinaryUtility, double>> points) {
    points.emplace_back(BinaryUtility::worst(), 0.0);
    points.emplace_back(BinaryUtility::best(), 1.0);
    std::sort(points.begin(), points.end(), [](const auto& a, const auto& b) {
        return a.first.chain_position() < b.first.chain_position();
    });
    // Collapse duplicated pins; anything else at equal position is invalid.
    std::vector<std::pair<BinaryUtility, double>> cleaned;
    for (const auto& p : points) {
        if (!cleaned.empty() &&
            std::abs(cleaned.back().first.chain_position() - p.first.chain_position()) <=
                kUtilityTolerance) {
            if (std::abs(cleaned.back().second - p.second) > kUtilityTolerance)
                throw ValidationError("tabular t assigns two values to the same point");
            continue;
        }
        cleaned.push_back(p);
    }
    for (std::size_t i = 0; i + 1 < cleaned.size(); ++i)
        if (cleaned[i].second >= cleaned[i + 1].second)
            throw ValidationError("tabular t must be strictly increasing along B");
    TFunction t;
    t.form_ = std::move(cleaned);
    return t;
}

double TFunction::operator()(const BinaryUtility& b) const {
    const double s = b.chain_position();
    if (is_parametric()) {
        const double c = parametric_c();
        return s <= 1.0 ? c * s : c + (1.0 - c) * (s - 1.0);
    }
    const auto& pts = points();
    if (s <= pts.front().first.chain_position()) return pts.front().second;
    for (std::size_t i = 0; i + 1 < pts.size(); ++i) {
        const double s0 = pts[i].first.chain_position();
        const double s1 = pts[i + 1].first.chain_position();
        if (s <= s1) {
            const double w = (s - s0) / (s1 - s0);
            return pts[i].second + w * (pts[i + 1].second - pts[i].second);
        }
    }
    return pts.back().second;
}

PrizeAssignment::PrizeAssignment(std::vector<std::string> prizes,
                                 std::map<std::string, BinaryUtility> qu, std::string best,
                                 std::string worst)
    : prizes_(std::move(prizes)), qu_(std::move(qu)), best_(std::move(best)),
      worst_(std::move(worst)) {
    if (best_ == worst_)
        throw ValidationError("best and worst prizes must be distinct");
    for (const auto& p : prizes_)
        if (qu_.count(p) == 0)
            throw ValidationError("prize '" + p + "' has no binary utility");
    if (qu_.count(best_) == 0 || qu_.count(worst_) == 0)
        throw ValidationError("best and worst prizes must appear in the assignment");
    if (!(qu_.at(best_) == BinaryUtility::best()))
        throw ValidationError("best prize must have utility <1,0>");
    if (!(qu_.at(worst_) == BinaryUtility::worst()))
        throw ValidationError("worst prize must have utility <0,1>");
}

const BinaryUtility& PrizeAssignment::qu(const std::string& prize) const {
    auto it = qu_.find(prize);
    if (it == qu_.end())
        throw ValidationError("unknown prize '" + prize + "'");
    return it->second;
}

BinaryUtility qu_lottery(const std::map<std::string, double>& possibilities,
                         const PrizeAssignment& prizes) {
    double max_pi = 0.0;
    for (const auto& [prize, pi] : possibilities) {
        if (pi < 0.0 || pi > 1.0 + kUtilityTolerance)
            throw ValidationError("possibility degree outside [0,1] for prize '" + prize + "'");
        max_pi = std::max(max_pi, pi);
    }
    if (std::abs(max_pi - 1.0) > kUtilityTolerance)
        throw ValidationError("possibilistic lottery is not max-normalized");
    ScaledBinary acc{0.0, 0.0};
    for (const auto& [prize, pi] : possibilities) {
        const ScaledBinary s = b_scale(std::min(pi, 1.0), prizes.qu(prize));
        acc.lambda = std::max(acc.lambda, s.lambda);
        acc.rho = std::max(acc.rho, s.rho);
    }
    return {acc.lambda, acc.rho};
}

double expected_utility(const std::map<std::string, double>& lottery,
                        const std::map<std::string, double>& u) {
    double total = 0.0;
    double value = 0.0;
    for (const auto& [prize, p] : lottery) {
        if (p < 0.0)
            throw ValidationError("negative probability for prize '" + prize + "'");
        auto it = u.find(prize);
        if (it == u.end())
            throw ValidationError("no utility assigned to prize '" + prize + "'");
        total += p;
        value += p * it->second;
    }
    if (std::abs(total - 1.0) > kUtilityTolerance)
        throw ValidationError("probabilistic lottery does not sum to 1");
    return value;
}

void TwoStageLottery::validate() const {
    if (block_probs.size() != branches.size())
        throw ValidationError("two-stage lottery needs one branch per block probability");
    double total = 0.0;
    for (std::size_t i = 0; i < block_probs.size(); ++i) {
        if (block_probs[i] < -kUtilityTolerance)
            throw ValidationError("negative block probability in two-stage lottery");
        total += block_probs[i];
        if (block_probs[i] <= kUtilityTolerance) continue;
        double max_pi = 0.0;
        for (const auto& [prize, pi] : branches[i]) {
            (void)prize;
            max_pi = std::max(max_pi, pi);
        }
        if (std::abs(max_pi - 1.0) > kUtilityTolerance)
            throw ValidationError("positive-probability branch is not max-normalized");
    }
    if (std::abs(total - 1.0) > kUtilityTolerance)
        throw ValidationError("two-stage lottery probabilities do not sum to 1");
}

double mixed_utility(const TwoStageLottery& lottery, const PrizeAssignment& prizes,
                     const TFunction& t) {
    lottery.validate();
    double value = 0.0;
    for (std::size_t i = 0; i < lottery.block_probs.size(); ++i) {
        if (lottery.block_probs[i] <= kUtilityTolerance) continue;
        value += lottery.block_probs[i] * t(qu_lottery(lottery.branches[i], prizes));
    }
    return value;
}

} // namespace pcbdec
