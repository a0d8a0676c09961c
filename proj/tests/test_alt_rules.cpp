#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "oracles.hpp"
#include "pcbdec/alt_rules.hpp"

using namespace pcbdec;

namespace {

const double kTol = 1e-9;

Frame ellsberg_frame() { return Frame({"red", "yellow", "white"}); }

MassFunction ellsberg() {
    return MassFunction(ellsberg_frame(), {{0b001, 1.0 / 3.0}, {0b110, 2.0 / 3.0}});
}

std::vector<Act> ellsberg_acts() {
    return {
        Act("IA", {{"red", "$1"}, {"yellow", "$0"}, {"white", "$0"}}),
        Act("IB", {{"red", "$0"}, {"yellow", "$1"}, {"white", "$0"}}),
        Act("IIA", {{"red", "$1"}, {"yellow", "$0"}, {"white", "$1"}}),
        Act("IIB", {{"red", "$0"}, {"yellow", "$1"}, {"white", "$1"}}),
    };
}

const std::map<std::string, double> kDollarU{{"$1", 1.0}, {"$0", 0.0}};

DecisionProblem ellsberg_problem(double c = 0.4) {
    DecisionProblem p{ellsberg_frame(), UncertaintyVariant::bpa, ellsberg()};
    p.prizes = PrizeAssignment({"$1", "$0"},
                               {{"$1", BinaryUtility::best()}, {"$0", BinaryUtility::worst()}},
                               "$1", "$0");
    p.acts = ellsberg_acts();
    p.attitude = TFunction::parametric(c);
    return p;
}

std::size_t rule_index(const RuleComparison& cmp, const std::string& name) {
    for (std::size_t i = 0; i < cmp.rule_names.size(); ++i)
        if (cmp.rule_names[i] == name) return i;
    REQUIRE(false);
    return 0;
}

Act random_three_prize_act(std::mt19937& rng, const Frame& frame) {
    const std::vector<std::string> prizes{"$0", "mid", "$1"};
    std::uniform_int_distribution<int> pick(0, 2);
    std::map<std::string, std::string> assignment;
    for (std::size_t i = 0; i < frame.size(); ++i)
        assignment[frame.label(i)] = prizes[pick(rng)];
    return Act("d", std::move(assignment));
}

} // namespace

TEST_CASE("pignistic transform") {
    SUBCASE("splits every focus evenly") {
        MassFunction bp = pignistic(ellsberg());
        CHECK(bp.is_probability());
        CHECK(bp.mass(0b001) == doctest::Approx(1.0 / 3.0).epsilon(kTol));
        CHECK(bp.mass(0b010) == doctest::Approx(1.0 / 3.0).epsilon(kTol));
        CHECK(bp.mass(0b100) == doctest::Approx(1.0 / 3.0).epsilon(kTol));
    }
    SUBCASE("fixed on probabilities") {
        std::mt19937 rng(5);
        for (int trial = 0; trial < 40; ++trial) {
            Frame g = oracle::make_frame(2 + trial % 6);
            MassFunction p = oracle::random_probability(rng, g);
            MassFunction bp = pignistic(p);
            for (std::size_t i = 0; i < g.size(); ++i)
                CHECK(bp.mass(singleton(i)) == doctest::Approx(p.mass(singleton(i))).epsilon(kTol));
        }
    }
    SUBCASE("vacuous gives uniform") {
        Frame g = oracle::make_frame(4);
        MassFunction bp = pignistic(MassFunction::vacuous(g));
        for (std::size_t i = 0; i < 4; ++i)
            CHECK(bp.mass(singleton(i)) == doctest::Approx(0.25).epsilon(kTol));
    }
}

TEST_CASE("plausibility transform") {
    SUBCASE("normalized singleton plausibilities") {
        MassFunction pt = plausibility_transform(ellsberg());
        CHECK(pt.is_probability());
        CHECK(pt.mass(0b001) == doctest::Approx(0.2).epsilon(kTol));
        CHECK(pt.mass(0b010) == doctest::Approx(0.4).epsilon(kTol));
        CHECK(pt.mass(0b100) == doctest::Approx(0.4).epsilon(kTol));
    }
    SUBCASE("fixed on probabilities") {
        std::mt19937 rng(7);
        for (int trial = 0; trial < 40; ++trial) {
            Frame g = oracle::make_frame(2 + trial % 6);
            MassFunction p = oracle::random_probability(rng, g);
            MassFunction pt = plausibility_transform(p);
            for (std::size_t i = 0; i < g.size(); ++i)
                CHECK(pt.mass(singleton(i)) == doctest::Approx(p.mass(singleton(i))).epsilon(kTol));
        }
    }
    SUBCASE("differs from pignistic on the urn") {
        MassFunction bp = pignistic(ellsberg());
        MassFunction pt = plausibility_transform(ellsberg());
        CHECK(std::abs(bp.mass(0b010) - pt.mass(0b010)) > 0.05);
    }
}

TEST_CASE("choquet_eu") {
    MassFunction m = ellsberg();
    SetFunction bel = to_belief(m);
    SetFunction pl = to_plausibility(m);
    auto acts = ellsberg_acts();

    SUBCASE("urn values, lower and upper") {
        const std::vector<double> bel_expected{1.0 / 3.0, 0.0, 1.0 / 3.0, 2.0 / 3.0};
        const std::vector<double> pl_expected{1.0 / 3.0, 2.0 / 3.0, 1.0, 2.0 / 3.0};
        for (std::size_t i = 0; i < acts.size(); ++i) {
            CHECK(choquet_eu(acts[i], bel, kDollarU) ==
                  doctest::Approx(bel_expected[i]).epsilon(kTol));
            CHECK(choquet_eu(acts[i], pl, kDollarU) ==
                  doctest::Approx(pl_expected[i]).epsilon(kTol));
        }
    }
    SUBCASE("reversal between lower and upper integrals") {
        CHECK(choquet_eu(acts[0], bel, kDollarU) > choquet_eu(acts[1], bel, kDollarU) + 0.1);
        CHECK(choquet_eu(acts[1], pl, kDollarU) > choquet_eu(acts[0], pl, kDollarU) + 0.1);
    }
    SUBCASE("equal-utility prizes are merged before leveling") {
        // "mid" and "$1" get the same utility, so IA with white relabeled
        // scores like IIA.
        std::map<std::string, double> u{{"$1", 1.0}, {"mid", 1.0}, {"$0", 0.0}};
        Act relabeled("r", {{"red", "$1"}, {"yellow", "$0"}, {"white", "mid"}});
        Act plain("p", {{"red", "$1"}, {"yellow", "$0"}, {"white", "$1"}});
        CHECK(choquet_eu(relabeled, bel, u) ==
              doctest::Approx(choquet_eu(plain, bel, u)).epsilon(kTol));
        CHECK(choquet_eu(relabeled, pl, u) ==
              doctest::Approx(choquet_eu(plain, pl, u)).epsilon(kTol));
    }
    SUBCASE("additive capacity reduces to expected utility") {
        std::mt19937 rng(11);
        std::map<std::string, double> u{{"$1", 1.0}, {"mid", 0.35}, {"$0", 0.0}};
        for (int trial = 0; trial < 60; ++trial) {
            Frame g = oracle::make_frame(2 + trial % 6);
            MassFunction p = oracle::random_probability(rng, g);
            Act d = random_three_prize_act(rng, g);
            double eu = 0.0;
            for (std::size_t i = 0; i < g.size(); ++i)
                eu += p.mass(singleton(i)) * u.at(d.prize_at(g, i));
            CHECK(choquet_eu(d, to_belief(p), u) == doctest::Approx(eu).epsilon(kTol));
            CHECK(choquet_eu(d, to_plausibility(p), u) == doctest::Approx(eu).epsilon(kTol));
        }
    }
    SUBCASE("lower integral never exceeds the upper") {
        std::mt19937 rng(13);
        std::map<std::string, double> u{{"$1", 1.0}, {"mid", 0.6}, {"$0", 0.0}};
        for (int trial = 0; trial < 200; ++trial) {
            Frame g = oracle::make_frame(2 + trial % 7);
            MassFunction rm = oracle::random_mass(rng, g, 6);
            Act d = random_three_prize_act(rng, g);
            CHECK(choquet_eu(d, to_belief(rm), u) <=
                  choquet_eu(d, to_plausibility(rm), u) + kTol);
        }
    }
}

TEST_CASE("jaffray_hurwicz") {
    MassFunction m = ellsberg();
    auto acts = ellsberg_acts();
    SUBCASE("alpha endpoints match the Choquet integrals") {
        SetFunction bel = to_belief(m);
        SetFunction pl = to_plausibility(m);
        for (const auto& act : acts) {
            CHECK(jaffray_hurwicz(act, m, kDollarU, 1.0) ==
                  doctest::Approx(choquet_eu(act, bel, kDollarU)).epsilon(kTol));
            CHECK(jaffray_hurwicz(act, m, kDollarU, 0.0) ==
                  doctest::Approx(choquet_eu(act, pl, kDollarU)).epsilon(kTol));
        }
    }
    SUBCASE("even blend on the urn") {
        const std::vector<double> expected{1.0 / 3.0, 1.0 / 3.0, 2.0 / 3.0, 2.0 / 3.0};
        for (std::size_t i = 0; i < acts.size(); ++i)
            CHECK(jaffray_hurwicz(acts[i], m, kDollarU, 0.5) ==
                  doctest::Approx(expected[i]).epsilon(kTol));
    }
    SUBCASE("alpha out of range rejected") {
        CHECK_THROWS_AS(jaffray_hurwicz(acts[0], m, kDollarU, -0.1), NumericError);
        CHECK_THROWS_AS(jaffray_hurwicz(acts[0], m, kDollarU, 1.1), NumericError);
    }
}

TEST_CASE("compare_rules") {
    SUBCASE("urn table") {
        RuleComparison cmp = compare_rules(ellsberg_problem());
        REQUIRE(cmp.act_names == std::vector<std::string>{"IA", "IB", "IIA", "IIB"});
        const std::map<std::string, std::vector<double>> expected{
            {"mixed", {1.0 / 3.0, 4.0 / 15.0, 3.0 / 5.0, 2.0 / 3.0}},
            {"pignistic-eu", {1.0 / 3.0, 1.0 / 3.0, 2.0 / 3.0, 2.0 / 3.0}},
            {"plausibility-eu", {0.2, 0.4, 0.6, 0.8}},
            {"ceu-bel", {1.0 / 3.0, 0.0, 1.0 / 3.0, 2.0 / 3.0}},
            {"ceu-pl", {1.0 / 3.0, 2.0 / 3.0, 1.0, 2.0 / 3.0}},
            {"hurwicz", {1.0 / 3.0, 1.0 / 3.0, 2.0 / 3.0, 2.0 / 3.0}},
        };
        for (const auto& [rule, values] : expected) {
            const std::size_t r = rule_index(cmp, rule);
            for (std::size_t a = 0; a < values.size(); ++a)
                CHECK(cmp.utilities[r][a] == doctest::Approx(values[a]).epsilon(kTol));
        }
        REQUIRE(cmp.pignistic_probs.size() == 3);
        CHECK(cmp.pignistic_probs[0] == doctest::Approx(1.0 / 3.0).epsilon(kTol));
        CHECK(cmp.plausibility_probs[1] == doctest::Approx(0.4).epsilon(kTol));
    }
    SUBCASE("rankings and ties") {
        RuleComparison cmp = compare_rules(ellsberg_problem());
        const std::size_t mixed = rule_index(cmp, "mixed");
        // mixed: IIB > IIA > IA > IB, no ties
        CHECK(cmp.rankings[mixed].order == std::vector<std::size_t>{3, 2, 0, 1});
        for (bool tied : cmp.rankings[mixed].tied_with_next) CHECK_FALSE(tied);
        const std::size_t pig = rule_index(cmp, "pignistic-eu");
        // pignistic: {IIA, IIB} tie above {IA, IB} tie
        REQUIRE(cmp.rankings[pig].tied_with_next.size() == 4);
        CHECK(cmp.rankings[pig].tied_with_next[0]);
        CHECK_FALSE(cmp.rankings[pig].tied_with_next[1]);
        CHECK(cmp.rankings[pig].tied_with_next[2]);
        CHECK_FALSE(cmp.rankings[pig].tied_with_next[3]);
    }
    SUBCASE("ambiguity attitude separates the mixed rule from every transform") {
        RuleComparison cmp = compare_rules(ellsberg_problem());
        const std::size_t mixed = rule_index(cmp, "mixed");
        const std::size_t ib = 1;
        for (const std::string rule : {"pignistic-eu", "plausibility-eu"}) {
            const std::size_t r = rule_index(cmp, rule);
            CHECK(std::abs(cmp.utilities[mixed][ib] - cmp.utilities[r][ib]) > 0.01);
        }
    }
    SUBCASE("all rules coincide on a probability problem") {
        std::mt19937 rng(17);
        for (int trial = 0; trial < 30; ++trial) {
            Frame g = oracle::make_frame(2 + trial % 5);
            DecisionProblem p{g, UncertaintyVariant::bpa, oracle::random_probability(rng, g)};
            p.prizes = PrizeAssignment(
                {"$1", "mid", "$0"},
                {{"$1", BinaryUtility::best()},
                 {"mid", BinaryUtility(1.0, 0.4)},
                 {"$0", BinaryUtility::worst()}},
                "$1", "$0");
            p.acts = {random_three_prize_act(rng, g)};
            p.attitude = TFunction::parametric(0.5);
            RuleComparison cmp = compare_rules(p);
            const double ref = cmp.utilities[rule_index(cmp, "mixed")][0];
            for (std::size_t r = 0; r < cmp.rule_names.size(); ++r)
                CHECK(cmp.utilities[r][0] == doctest::Approx(ref).epsilon(kTol));
        }
    }
    SUBCASE("alpha flows through to the hurwicz row") {
        DecisionProblem p = ellsberg_problem();
        p.alpha = 1.0;
        RuleComparison cmp = compare_rules(p);
        const std::size_t hw = rule_index(cmp, "hurwicz");
        const std::size_t cb = rule_index(cmp, "ceu-bel");
        for (std::size_t a = 0; a < cmp.act_names.size(); ++a)
            CHECK(cmp.utilities[hw][a] == doctest::Approx(cmp.utilities[cb][a]).epsilon(kTol));
    }
}
