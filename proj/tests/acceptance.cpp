// Acceptance gate: one PASS/FAIL line per criterion, nonzero exit if any
// fail. Expects the urn fixture path as argv[1].
#include <cmath>
#include <cstdio>
#include <fstream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "oracles.hpp"
#include "pcbdec/alt_rules.hpp"
#include "pcbdec/problem_json.hpp"

using namespace pcbdec;

namespace {

int failures = 0;

void report(int criterion, const char* title, bool ok) {
    std::printf("%s  %2d  %s\n", ok ? "PASS" : "FAIL", criterion, title);
    if (!ok) ++failures;
}

bool near(double a, double b, double tol) { return std::abs(a - b) <= tol; }

std::size_t rule_row(const RuleComparison& cmp, const std::string& name) {
    for (std::size_t i = 0; i < cmp.rule_names.size(); ++i)
        if (cmp.rule_names[i] == name) return i;
    return cmp.rule_names.size();
}

Act random_act(std::mt19937& rng, const Frame& frame, const std::vector<std::string>& prizes) {
    std::uniform_int_distribution<std::size_t> pick(0, prizes.size() - 1);
    std::map<std::string, std::string> assignment;
    for (std::size_t i = 0; i < frame.size(); ++i)
        assignment[frame.label(i)] = prizes[pick(rng)];
    return Act("d", std::move(assignment));
}

PrizeAssignment three_prizes() {
    return PrizeAssignment({"w", "m", "l"},
                           {{"w", BinaryUtility::best()},
                            {"m", BinaryUtility(1.0, 0.4)},
                            {"l", BinaryUtility::worst()}},
                           "w", "l");
}

} // namespace

int main(int argc, char** argv) {
    if (argc < 2) {
        std::fprintf(stderr, "usage: acceptance <fixture.json>\n");
        return 2;
    }
    std::ifstream in(argv[1]);
    std::stringstream buf;
    buf << in.rdbuf();
    if (!in.good() && !in.eof()) {
        std::fprintf(stderr, "cannot read %s\n", argv[1]);
        return 2;
    }
    const DecisionProblem urn = parse_problem(buf.str());
    const RuleComparison cmp = compare_rules(urn);
    const std::size_t mixed = rule_row(cmp, "mixed");
    const std::size_t pig = rule_row(cmp, "pignistic-eu");
    const std::size_t plpt = rule_row(cmp, "plausibility-eu");
    const std::size_t cbel = rule_row(cmp, "ceu-bel");
    const std::size_t cpl = rule_row(cmp, "ceu-pl");
    enum { IA = 0, IB = 1, IIA = 2, IIB = 3 };

    { // 1: mixed utilities, exact and as rounded in print
        const std::vector<double> exact{1.0 / 3.0, 4.0 / 15.0, 3.0 / 5.0, 2.0 / 3.0};
        const std::vector<double> rounded{0.33, 0.27, 0.60, 0.67};
        bool ok = cmp.act_names.size() == 4;
        for (int a = 0; ok && a < 4; ++a)
            ok = near(cmp.utilities[mixed][a], exact[a], 1e-9) &&
                 near(cmp.utilities[mixed][a], rounded[a], 5e-3);
        report(1, "urn mixed utilities (exact fractions and rounded values)", ok);
    }
    { // 2: predicted preference pattern
        const auto& u = cmp.utilities[mixed];
        report(2, "urn preference pattern IA > IB and IIB > IIA",
               u[IA] > u[IB] + 1e-9 && u[IIB] > u[IIA] + 1e-9);
    }
    { // 3: pignistic transform and its EU ties
        bool ok = cmp.pignistic_probs.size() == 3;
        for (double p : cmp.pignistic_probs) ok = ok && near(p, 0.33, 5e-3);
        const auto& u = cmp.utilities[pig];
        ok = ok && near(u[IA], 1.0 / 3.0, 1e-9) && near(u[IB], 1.0 / 3.0, 1e-9) &&
             near(u[IIA], 2.0 / 3.0, 1e-9) && near(u[IIB], 2.0 / 3.0, 1e-9);
        report(3, "pignistic transform (.33,.33,.33) with tied EUs", ok);
    }
    { // 4: plausibility transform, EUs and IB > IA
        const std::vector<double> probs{0.2, 0.4, 0.4};
        const std::vector<double> eu{0.2, 0.4, 0.6, 0.8};
        bool ok = cmp.plausibility_probs.size() == 3;
        for (std::size_t i = 0; ok && i < 3; ++i)
            ok = near(cmp.plausibility_probs[i], probs[i], 1e-9);
        for (int a = 0; ok && a < 4; ++a) ok = near(cmp.utilities[plpt][a], eu[a], 1e-9);
        ok = ok && cmp.utilities[plpt][IB] > cmp.utilities[plpt][IA] + 1e-9;
        report(4, "plausibility transform (.20,.40,.40) with EUs and IB > IA", ok);
    }
    { // 5: Choquet values and the lower/upper ranking reversal
        bool ok = near(cmp.utilities[cbel][IA], 1.0 / 3.0, 1e-9) &&
                  near(cmp.utilities[cpl][IA], 1.0 / 3.0, 1e-9) &&
                  near(cmp.utilities[cbel][IB], 0.0, 1e-9) &&
                  near(cmp.utilities[cpl][IB], 2.0 / 3.0, 1e-9) &&
                  cmp.utilities[cbel][IA] > cmp.utilities[cbel][IB] + 1e-9 &&
                  cmp.utilities[cpl][IB] > cmp.utilities[cpl][IA] + 1e-9;
        report(5, "Choquet lower/upper values with ranking reversal on {IA, IB}", ok);
    }
    { // 6: min-rule conditioning equivalence
        std::mt19937 rng(101);
        bool ok = true;
        for (int trial = 0; ok && trial < 200; ++trial) {
            Frame g = oracle::make_frame(2 + trial % 7); // N <= 8
            MassFunction m = oracle::random_pcb(rng, g);
            std::uniform_int_distribution<Subset> ev(1, g.full());
            Subset b = ev(rng);
            if (m.plausibility(b) <= 1e-9) continue;
            SetFunction combined =
                walley_combine(to_commonality(m), to_commonality(MassFunction::categorical(g, b)));
            MassFunction conditioned = condition(m, b);
            for (Subset a = 1; ok && a <= g.full(); ++a)
                ok = near(combined.value(a), conditioned.commonality(a), 1e-9);
        }
        report(6, "min-rule with categorical evidence equals conditioning (200 random pcbs)", ok);
    }
    { // 7: Mobius round-trips
        std::mt19937 rng(103);
        bool ok = true;
        for (int trial = 0; ok && trial < 200; ++trial) {
            Frame g = oracle::make_frame(2 + trial % 9); // N <= 10
            MassFunction m = oracle::random_mass(rng, g, 8);
            MassFunction viaBel = from_belief(to_belief(m));
            MassFunction viaQ = from_commonality(to_commonality(m));
            for (Subset a = 1; ok && a <= g.full(); ++a)
                ok = near(viaBel.mass(a), m.mass(a), 1e-9) && near(viaQ.mass(a), m.mass(a), 1e-9);
        }
        report(7, "Mobius round-trips through Bel and Q (200 random bpas)", ok);
    }
    { // 8: decomposition round-trip and the two extremes
        std::mt19937 rng(107);
        bool ok = true;
        for (int trial = 0; ok && trial < 200; ++trial) {
            Frame g = oracle::make_frame(2 + trial % 7);
            MassFunction m = oracle::random_pcb(rng, g);
            MassFunction back = recompose(decompose(m));
            for (Subset a = 1; ok && a <= g.full(); ++a) ok = near(back.mass(a), m.mass(a), 1e-9);
        }
        if (ok) {
            Frame g = oracle::make_frame(5);
            ok = decompose(oracle::random_probability(rng, g)).blocks().size() == 5 &&
                 decompose(oracle::random_consonant(rng, g)).blocks().size() == 1;
        }
        report(8, "decompose/recompose round-trip; probability s=N, possibility s=1", ok);
    }
    { // 9: every rule collapses to expected utility on probabilities
        std::mt19937 rng(109);
        bool ok = true;
        PrizeAssignment prizes = three_prizes();
        for (int trial = 0; ok && trial < 100; ++trial) {
            Frame g = oracle::make_frame(2 + trial % 6);
            DecisionProblem p{g, UncertaintyVariant::bpa, oracle::random_probability(rng, g)};
            p.prizes = prizes;
            p.acts = {random_act(rng, g, prizes.prizes())};
            p.attitude = TFunction::parametric(0.4);
            RuleComparison c = compare_rules(p);
            const double ref = c.utilities[rule_row(c, "mixed")][0];
            for (const std::string rule :
                 {"pignistic-eu", "plausibility-eu", "ceu-bel", "ceu-pl"})
                ok = ok && near(c.utilities[rule_row(c, rule)][0], ref, 1e-9);
        }
        report(9, "rule collapse on probability problems (100 random)", ok);
    }
    { // 10: prior x likelihood via Dempster equals the Bayes posterior
        std::mt19937 rng(113);
        std::uniform_real_distribution<double> pos(0.05, 1.0);
        bool ok = true;
        for (int trial = 0; ok && trial < 100; ++trial) {
            Frame g = oracle::make_frame(2 + trial % 7);
            std::vector<double> rho(g.size()), tau(g.size());
            double prior_sum = 0.0;
            for (std::size_t i = 0; i < g.size(); ++i) {
                rho[i] = pos(rng);
                tau[i] = pos(rng);
                prior_sum += rho[i];
            }
            std::vector<Subset> blocks;
            for (std::size_t i = 0; i < g.size(); ++i) blocks.push_back(singleton(i));
            MassFunction prior = prior_to_probability(g, rho, 1.0);
            MassFunction lik = pcb_from_likelihood(LikelihoodVector(g, tau), blocks, 1.0);
            MassFunction posterior = dempster_combine(prior, lik);
            double norm = 0.0;
            for (std::size_t i = 0; i < g.size(); ++i) norm += rho[i] * tau[i];
            for (std::size_t i = 0; ok && i < g.size(); ++i)
                ok = near(posterior.mass(singleton(i)), rho[i] * tau[i] / norm, 1e-9);
            (void)prior_sum;
        }
        report(10, "Bayes consistency of prior x likelihood combination (100 random)", ok);
    }
    { // 11: property bundle
        std::mt19937 rng(127);
        std::uniform_real_distribution<double> u01(0.0, 1.0);
        bool ok = true;

        // t strict monotonicity on ordered pairs of the binary scale.
        TFunction t = TFunction::parametric(0.4);
        for (int trial = 0; ok && trial < 1000; ++trial) {
            auto draw = [&] {
                double lam = u01(rng), rho = u01(rng);
                if (lam < rho) lam = 1.0; else rho = 1.0;
                return BinaryUtility(lam, rho);
            };
            BinaryUtility a = draw(), b = draw();
            if (std::abs(a.chain_position() - b.chain_position()) < 1e-9) continue;
            if (b_less(b, a)) std::swap(a, b);
            ok = t(a) < t(b);
        }

        // b_max laws: commutative, associative, idempotent.
        for (int trial = 0; ok && trial < 200; ++trial) {
            auto draw = [&] {
                double lam = u01(rng), rho = u01(rng);
                if (lam < rho) lam = 1.0; else rho = 1.0;
                return BinaryUtility(lam, rho);
            };
            BinaryUtility a = draw(), b = draw(), c = draw();
            ok = b_max(a, b) == b_max(b, a) &&
                 b_max(a, b_max(b, c)) == b_max(b_max(a, b), c) &&
                 b_max(a, a) == a;
        }

        // Swapping one outcome's prize for a weakly better one never
        // lowers the mixed utility.
        PrizeAssignment prizes = three_prizes();
        const std::vector<std::string> ladder{"l", "m", "w"};
        for (int trial = 0; ok && trial < 200; ++trial) {
            Frame g = oracle::make_frame(2 + trial % 6);
            MassFunction m = oracle::random_pcb(rng, g);
            PcbDecomposition dec = decompose(m);
            std::map<std::string, std::string> assignment;
            std::vector<int> levels(g.size());
            std::uniform_int_distribution<int> lvl(0, 2);
            for (std::size_t i = 0; i < g.size(); ++i) {
                levels[i] = lvl(rng);
                assignment[g.label(i)] = ladder[levels[i]];
            }
            const double u0 =
                mixed_utility(induce_lottery(Act("a", assignment), dec), prizes, t);
            std::uniform_int_distribution<std::size_t> pick(0, g.size() - 1);
            const std::size_t o = pick(rng);
            if (levels[o] == 2) continue;
            assignment[g.label(o)] = ladder[levels[o] + 1];
            const double u1 =
                mixed_utility(induce_lottery(Act("b", assignment), dec), prizes, t);
            ok = u1 >= u0 - 1e-9;
        }

        // Lower Choquet integral never exceeds the upper one.
        std::map<std::string, double> util{{"w", 1.0}, {"m", 0.55}, {"l", 0.0}};
        for (int trial = 0; ok && trial < 200; ++trial) {
            Frame g = oracle::make_frame(2 + trial % 7);
            MassFunction m = oracle::random_pcb(rng, g);
            Act d = random_act(rng, g, {"w", "m", "l"});
            ok = choquet_eu(d, to_belief(m), util) <= choquet_eu(d, to_plausibility(m), util) + 1e-9;
        }
        report(11, "property bundle: t monotone, b_max laws, act monotonicity, CEU bounds", ok);
    }

    return failures == 0 ? 0 : 1;
}
