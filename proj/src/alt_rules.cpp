#include "pcbdec/alt_rules.hpp"

#include <algorithm>
#include <cmath>

namespace pcbdec {

MassFunction pignistic(const MassFunction& m) {
    std::map<Subset, double> focal;
    for (const auto& [focus, mass] : m.focal()) {
        const double share = mass / subset_size(focus);
        for (std::size_t i = 0; i < m.frame().size(); ++i)
            if (subset_contains(focus, i)) focal[singleton(i)] += share;
    }
    return MassFunction::renormalized(m.frame(), std::move(focal));
}

MassFunction plausibility_transform(const MassFunction& m) {
    std::map<Subset, double> focal;
    double total = 0.0;
    for (std::size_t i = 0; i < m.frame().size(); ++i) {
        const double pl = m.plausibility(singleton(i));
        if (pl > 0.0) focal[singleton(i)] = pl;
        total += pl;
    }
    if (total <= 0.0)
        throw NumericError("all singleton plausibilities are zero");
    return MassFunction::renormalized(m.frame(), std::move(focal));
}

double choquet_eu(const Act& act, const SetFunction& v, const std::map<std::string, double>& u) {
    const Frame& frame = v.frame();

    // Merge prize preimages at equal utility into single events.
    std::map<double, Subset, std::greater<double>> level_events;
    for (std::size_t i = 0; i < frame.size(); ++i) {
        const std::string& prize = act.prize_at(frame, i);
        auto it = u.find(prize);
        if (it == u.end())
            throw ValidationError("no utility assigned to prize '" + prize + "'");
        level_events[it->second] |= singleton(i);
    }

    double value = 0.0;
    Subset cumulative = 0;
    auto it = level_events.begin();
    while (it != level_events.end()) {
        cumulative |= it->second;
        const double level = it->first;
        ++it;
        const double next = it != level_events.end() ? it->first : 0.0;
        value += (level - next) * v.value(cumulative);
    }
    return value;
}

double jaffray_hurwicz(const Act& act, const MassFunction& m,
                       const std::map<std::string, double>& u, double alpha) {
    if (alpha < 0.0 || alpha > 1.0)
        throw NumericError("pessimism index alpha must lie in [0,1]");
    // The credal-set inf/sup of a belief function are its Bel and Pl
    // Choquet integrals.
    const double lower = choquet_eu(act, to_belief(m), u);
    const double upper = choquet_eu(act, to_plausibility(m), u);
    return alpha * lower + (1.0 - alpha) * upper;
}

namespace {

RuleRanking rank(const std::vector<double>& utilities) {
    RuleRanking r;
    r.order.resize(utilities.size());
    for (std::size_t i = 0; i < utilities.size(); ++i) r.order[i] = i;
    // Stable: declaration order breaks ties.
    std::stable_sort(r.order.begin(), r.order.end(), [&](std::size_t a, std::size_t b) {
        return utilities[a] > utilities[b] + kUtilityTolerance;
    });
    r.tied_with_next.assign(utilities.size(), false);
    for (std::size_t i = 0; i + 1 < r.order.size(); ++i)
        r.tied_with_next[i] =
            std::abs(utilities[r.order[i]] - utilities[r.order[i + 1]]) <= kUtilityTolerance;
    return r;
}

std::vector<double> singleton_probs(const MassFunction& p) {
    std::vector<double> out(p.frame().size());
    for (std::size_t i = 0; i < out.size(); ++i) out[i] = p.mass(singleton(i));
    return out;
}

} // namespace

RuleComparison compare_rules(const DecisionProblem& problem) {
    problem.check_acts();
    const PrizeAssignment& prizes = problem.require_prizes();
    const TFunction t = problem.effective_attitude();
    const double alpha = problem.alpha.value_or(0.5);

    // All rules score prizes on the same scale u(w) = t(qu(w)).
    std::map<std::string, double> u;
    for (const auto& prize : prizes.prizes()) u[prize] = t(prizes.qu(prize));

    const MassFunction& m = problem.uncertainty;
    const PcbDecomposition dec = decompose(m);
    const MassFunction p_bet = pignistic(m);
    const MassFunction p_pl = plausibility_transform(m);
    const SetFunction bel = to_belief(m);
    const SetFunction pl = to_plausibility(m);

    RuleComparison cmp;
    cmp.rule_names = {"mixed", "pignistic-eu", "plausibility-eu", "ceu-bel", "ceu-pl", "hurwicz"};
    cmp.pignistic_probs = singleton_probs(p_bet);
    cmp.plausibility_probs = singleton_probs(p_pl);
    cmp.utilities.assign(cmp.rule_names.size(), {});

    for (const Act& act : problem.acts) {
        cmp.act_names.push_back(act.name());
        cmp.utilities[0].push_back(mixed_utility(induce_lottery(act, dec), prizes, t));
        cmp.utilities[1].push_back(expected_utility(flat_lottery(act, p_bet), u));
        cmp.utilities[2].push_back(expected_utility(flat_lottery(act, p_pl), u));
        cmp.utilities[3].push_back(choquet_eu(act, bel, u));
        cmp.utilities[4].push_back(choquet_eu(act, pl, u));
        cmp.utilities[5].push_back(jaffray_hurwicz(act, m, u, alpha));
    }
    for (const auto& row : cmp.utilities) cmp.rankings.push_back(rank(row));
    return cmp;
}

} // namespace pcbdec
