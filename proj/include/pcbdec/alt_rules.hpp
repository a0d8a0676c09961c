#pragma once

#include <map>
#include <string>
#include <vector>

#include "pcbdec/acts.hpp"
#include "pcbdec/problem.hpp"

namespace pcbdec {

// Probability obtained by splitting each focal mass equally among its
// elements.
MassFunction pignistic(const MassFunction& m);

// Probability obtained by normalizing singleton plausibilities.
MassFunction plausibility_transform(const MassFunction& m);

// Choquet expected utility of an act against a capacity (Bel, Pl or a
// free-standing capacity). Equal-utility prizes are merged into one event
// before the decreasing-level-set sum.
double choquet_eu(const Act& act, const SetFunction& v, const std::map<std::string, double>& u);

// alpha-weighted blend of the lower (Bel) and upper (Pl) Choquet
// integrals; alpha = 1 is maximal pessimism.
double jaffray_hurwicz(const Act& act, const MassFunction& m,
                       const std::map<std::string, double>& u, double alpha);

struct RuleRanking {
    std::vector<std::size_t> order; // act indices, best first
    std::vector<bool> tied_with_next;
};

struct RuleComparison {
    std::vector<std::string> act_names;
    std::vector<std::string> rule_names;
    // utilities[r][a] = utility of act a under rule r
    std::vector<std::vector<double>> utilities;
    std::vector<RuleRanking> rankings;
    // Singleton probabilities of the two transforms, frame order.
    std::vector<double> pignistic_probs;
    std::vector<double> plausibility_probs;
};

// Scores every act under the mixed rule, the two transform-EU rules, the
// two Choquet rules and the Hurwicz blend; prize utilities are t(qu(w)).
RuleComparison compare_rules(const DecisionProblem& problem);

} // namespace pcbdec
