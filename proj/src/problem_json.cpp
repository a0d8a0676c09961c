#include "pcbdec/problem_json.hpp"

#include <set>

#include <json.hpp>

namespace pcbdec {

using json = nlohmann::ordered_json;

namespace {

void reject_unknown_fields(const json& obj, const std::set<std::string>& allowed,
                           const std::string& where) {
    for (const auto& [key, value] : obj.items()) {
        (void)value;
        if (allowed.count(key) == 0)
            throw ParseError("unknown field '" + key + "' in " + where);
    }
}

const json& require_field(const json& obj, const std::string& key, const std::string& where) {
    auto it = obj.find(key);
    if (it == obj.end())
        throw ParseError("missing field '" + key + "' in " + where);
    return *it;
}

double as_number(const json& v, const std::string& where) {
    if (!v.is_number())
        throw ParseError("expected a number for " + where);
    return v.get<double>();
}

std::string as_string(const json& v, const std::string& where) {
    if (!v.is_string())
        throw ParseError("expected a string for " + where);
    return v.get<std::string>();
}

Subset parse_subset(const json& arr, const Frame& frame, const std::string& where) {
    if (!arr.is_array())
        throw ParseError("expected an array of outcome labels for " + where);
    Subset s = 0;
    for (const auto& item : arr) {
        const std::string label = as_string(item, where);
        auto idx = frame.index_of(label);
        if (!idx)
            throw ParseError("unknown outcome '" + label + "' in " + where);
        s |= singleton(*idx);
    }
    return s;
}

json subset_to_json(Subset s, const Frame& frame) {
    json arr = json::array();
    for (std::size_t i = 0; i < frame.size(); ++i)
        if (subset_contains(s, i)) arr.push_back(frame.label(i));
    return arr;
}

MassFunction parse_bpa(const json& arr, const Frame& frame) {
    if (!arr.is_array())
        throw ParseError("'bpa' must be an array of {subset, mass} entries");
    std::map<Subset, double> focal;
    for (const auto& entry : arr) {
        if (!entry.is_object())
            throw ParseError("each bpa entry must be an object");
        reject_unknown_fields(entry, {"subset", "mass"}, "bpa entry");
        const Subset s = parse_subset(require_field(entry, "subset", "bpa entry"), frame,
                                      "bpa entry subset");
        focal[s] += as_number(require_field(entry, "mass", "bpa entry"), "bpa mass");
    }
    return MassFunction(frame, std::move(focal));
}

PcbDecomposition parse_pcb(const json& obj, const Frame& frame) {
    if (!obj.is_object())
        throw ParseError("'pcb' must be an object");
    reject_unknown_fields(obj, {"blocks", "block_probs", "possibilities"}, "pcb");
    const json& jblocks = require_field(obj, "blocks", "pcb");
    const json& jprobs = require_field(obj, "block_probs", "pcb");
    const json& jposs = require_field(obj, "possibilities", "pcb");
    if (!jblocks.is_array() || !jprobs.is_array() || !jposs.is_array() ||
        jblocks.size() != jprobs.size() || jblocks.size() != jposs.size())
        throw ParseError("pcb blocks, block_probs and possibilities must be arrays of equal "
                         "length");
    std::vector<PcbBlock> blocks;
    for (std::size_t i = 0; i < jblocks.size(); ++i) {
        PcbBlock block;
        block.members = parse_subset(jblocks[i], frame, "pcb block");
        block.prob = as_number(jprobs[i], "pcb block probability");
        if (!jposs[i].is_object())
            throw ParseError("pcb possibilities entries must be objects");
        for (const auto& [label, value] : jposs[i].items()) {
            auto idx = frame.index_of(label);
            if (!idx)
                throw ParseError("unknown outcome '" + label + "' in pcb possibilities");
            block.possibility[*idx] = as_number(value, "possibility degree");
        }
        blocks.push_back(std::move(block));
    }
    return PcbDecomposition(frame, std::move(blocks));
}

LikelihoodSpec parse_likelihood(const json& obj, const Frame& frame) {
    if (!obj.is_object())
        throw ParseError("'likelihood' must be an object");
    reject_unknown_fields(obj, {"tau", "blocks", "lambda"}, "likelihood");
    LikelihoodSpec spec;
    const json& jtau = require_field(obj, "tau", "likelihood");
    if (!jtau.is_array() || jtau.size() != frame.size())
        throw ParseError("'tau' must be an array with one entry per frame outcome");
    for (const auto& v : jtau) spec.tau.push_back(as_number(v, "likelihood value"));
    const json& jblocks = require_field(obj, "blocks", "likelihood");
    if (!jblocks.is_array())
        throw ParseError("'blocks' must be an array of outcome arrays");
    for (const auto& b : jblocks)
        spec.blocks.push_back(parse_subset(b, frame, "likelihood block"));
    spec.lambda = obj.contains("lambda") ? as_number(obj["lambda"], "lambda") : 1.0;
    return spec;
}

PrizeAssignment parse_prizes(const json& obj) {
    if (!obj.is_object())
        throw ParseError("'prizes' must be an object");
    reject_unknown_fields(obj, {"labels", "qu", "best", "worst"}, "prizes");
    const json& jlabels = require_field(obj, "labels", "prizes");
    if (!jlabels.is_array())
        throw ParseError("'labels' must be an array of prize names");
    std::vector<std::string> labels;
    for (const auto& l : jlabels) labels.push_back(as_string(l, "prize label"));
    const json& jqu = require_field(obj, "qu", "prizes");
    if (!jqu.is_object())
        throw ParseError("'qu' must map prize names to [lambda, rho] pairs");
    std::map<std::string, BinaryUtility> qu;
    for (const auto& [name, pair] : jqu.items()) {
        if (!pair.is_array() || pair.size() != 2)
            throw ParseError("qu entry for '" + name + "' must be a [lambda, rho] pair");
        qu.emplace(name, BinaryUtility(as_number(pair[0], "qu lambda"),
                                       as_number(pair[1], "qu rho")));
    }
    return PrizeAssignment(std::move(labels), std::move(qu),
                           as_string(require_field(obj, "best", "prizes"), "best prize"),
                           as_string(require_field(obj, "worst", "prizes"), "worst prize"));
}

TFunction parse_attitude(const json& obj) {
    if (!obj.is_object())
        throw ParseError("'attitude' must be an object");
    reject_unknown_fields(obj, {"c", "tabular"}, "attitude");
    const bool has_c = obj.contains("c");
    const bool has_tab = obj.contains("tabular");
    if (has_c == has_tab)
        throw ParseError("attitude needs exactly one of 'c' or 'tabular'");
    if (has_c) return TFunction::parametric(as_number(obj["c"], "attitude c"));
    std::vector<std::pair<BinaryUtility, double>> points;
    for (const auto& p : obj["tabular"]) {
        if (!p.is_object())
            throw ParseError("tabular attitude entries must be objects");
        reject_unknown_fields(p, {"lambda", "rho", "value"}, "tabular attitude entry");
        points.emplace_back(BinaryUtility(as_number(require_field(p, "lambda", "t point"),
                                                    "t point lambda"),
                                          as_number(require_field(p, "rho", "t point"),
                                                    "t point rho")),
                            as_number(require_field(p, "value", "t point"), "t point value"));
    }
    return TFunction::tabular(std::move(points));
}

std::vector<Act> parse_acts(const json& arr) {
    if (!arr.is_array())
        throw ParseError("'acts' must be an array");
    std::vector<Act> acts;
    std::set<std::string> names;
    for (const auto& entry : arr) {
        if (!entry.is_object())
            throw ParseError("each act must be an object");
        reject_unknown_fields(entry, {"name", "assignment"}, "act");
        std::string name = as_string(require_field(entry, "name", "act"), "act name");
        if (!names.insert(name).second)
            throw ParseError("duplicate act name '" + name + "'");
        const json& jassign = require_field(entry, "assignment", "act");
        if (!jassign.is_object())
            throw ParseError("act 'assignment' must map outcomes to prizes");
        std::map<std::string, std::string> assignment;
        for (const auto& [outcome, prize] : jassign.items())
            assignment[outcome] = as_string(prize, "act prize");
        acts.emplace_back(std::move(name), std::move(assignment));
    }
    return acts;
}

json serialize_uncertainty(const DecisionProblem& p) {
    json u = json::object();
    switch (p.variant) {
    case UncertaintyVariant::bpa: {
        json arr = json::array();
        for (const auto& [focus, mass] : p.uncertainty.focal())
            arr.push_back({{"subset", subset_to_json(focus, p.frame)}, {"mass", mass}});
        u["bpa"] = std::move(arr);
        break;
    }
    case UncertaintyVariant::pcb: {
        const PcbDecomposition& d = *p.pcb_input;
        json blocks = json::array(), probs = json::array(), poss = json::array();
        for (const auto& block : d.blocks()) {
            blocks.push_back(subset_to_json(block.members, p.frame));
            probs.push_back(block.prob);
            json pi = json::object();
            for (const auto& [idx, v] : block.possibility) pi[p.frame.label(idx)] = v;
            poss.push_back(std::move(pi));
        }
        u["pcb"] = {{"blocks", std::move(blocks)},
                    {"block_probs", std::move(probs)},
                    {"possibilities", std::move(poss)}};
        break;
    }
    case UncertaintyVariant::likelihood: {
        const LikelihoodSpec& spec = *p.likelihood_input;
        json blocks = json::array();
        for (Subset b : spec.blocks) blocks.push_back(subset_to_json(b, p.frame));
        u["likelihood"] = {{"tau", spec.tau}, {"blocks", std::move(blocks)},
                           {"lambda", spec.lambda}};
        break;
    }
    }
    return u;
}

} // namespace

DecisionProblem parse_problem(const std::string& json_text) {
    json doc;
    try {
        doc = json::parse(json_text);
    } catch (const json::parse_error& e) {
        throw ParseError(std::string("invalid JSON: ") + e.what());
    }
    if (!doc.is_object())
        throw ParseError("problem document must be a JSON object");
    reject_unknown_fields(doc, {"frame", "uncertainty", "prizes", "acts", "attitude", "alpha"},
                          "problem");

    const json& jframe = require_field(doc, "frame", "problem");
    if (!jframe.is_array())
        throw ParseError("'frame' must be an array of outcome labels");
    std::vector<std::string> labels;
    for (const auto& l : jframe) labels.push_back(as_string(l, "frame outcome"));
    Frame frame(std::move(labels));

    const json& junc = require_field(doc, "uncertainty", "problem");
    if (!junc.is_object())
        throw ParseError("'uncertainty' must be an object");
    reject_unknown_fields(junc, {"bpa", "pcb", "likelihood"}, "uncertainty");
    const int variants = int(junc.contains("bpa")) + int(junc.contains("pcb")) +
                         int(junc.contains("likelihood"));
    if (variants != 1)
        throw ParseError("exactly one uncertainty variant (bpa, pcb or likelihood) is required");

    std::optional<DecisionProblem> out;
    if (junc.contains("bpa")) {
        MassFunction m = parse_bpa(junc["bpa"], frame);
        out.emplace(DecisionProblem{frame, UncertaintyVariant::bpa, std::move(m)});
    } else if (junc.contains("pcb")) {
        PcbDecomposition d = parse_pcb(junc["pcb"], frame);
        MassFunction m = recompose(d);
        out.emplace(DecisionProblem{frame, UncertaintyVariant::pcb, std::move(m), std::move(d)});
    } else {
        LikelihoodSpec spec = parse_likelihood(junc["likelihood"], frame);
        MassFunction m =
            pcb_from_likelihood(LikelihoodVector(frame, spec.tau), spec.blocks, spec.lambda);
        out.emplace(DecisionProblem{frame, UncertaintyVariant::likelihood, std::move(m),
                                    std::nullopt, std::move(spec)});
    }

    if (doc.contains("prizes")) out->prizes = parse_prizes(doc["prizes"]);
    if (doc.contains("acts")) out->acts = parse_acts(doc["acts"]);
    if (doc.contains("attitude")) out->attitude = parse_attitude(doc["attitude"]);
    if (doc.contains("alpha")) {
        const double a = as_number(doc["alpha"], "alpha");
        if (a < 0.0 || a > 1.0)
            throw NumericError("alpha must lie in [0,1]");
        out->alpha = a;
    }
    if (out->prizes) out->check_acts();
    else if (!out->acts.empty())
        throw ParseError("acts given without a prize assignment");
    return std::move(*out);
}

std::string serialize_problem(const DecisionProblem& problem) {
    json doc;
    doc["frame"] = problem.frame.labels();
    doc["uncertainty"] = serialize_uncertainty(problem);
    if (problem.prizes) {
        const PrizeAssignment& pa = *problem.prizes;
        json qu = json::object();
        for (const auto& prize : pa.prizes())
            qu[prize] = {pa.qu(prize).lambda(), pa.qu(prize).rho()};
        doc["prizes"] = {{"labels", pa.prizes()},
                         {"qu", std::move(qu)},
                         {"best", pa.best()},
                         {"worst", pa.worst()}};
    }
    if (!problem.acts.empty()) {
        json acts = json::array();
        for (const Act& act : problem.acts) {
            json assignment = json::object();
            for (const auto& [outcome, prize] : act.assignment()) assignment[outcome] = prize;
            acts.push_back({{"name", act.name()}, {"assignment", std::move(assignment)}});
        }
        doc["acts"] = std::move(acts);
    }
    if (problem.attitude) {
        if (problem.attitude->is_parametric()) {
            doc["attitude"] = {{"c", problem.attitude->parametric_c()}};
        } else {
            json tab = json::array();
            for (const auto& [b, v] : problem.attitude->points())
                tab.push_back({{"lambda", b.lambda()}, {"rho", b.rho()}, {"value", v}});
            doc["attitude"] = {{"tabular", std::move(tab)}};
        }
    }
    if (problem.alpha) doc["alpha"] = *problem.alpha;
    return doc.dump(2);
}

std::string serialize_bpa_problem(const MassFunction& m) {
    DecisionProblem p{m.frame(), UncertaintyVariant::bpa, m};
    return serialize_problem(p);
}

std::string validate_report(const DecisionProblem& problem) {
    json doc;
    doc["valid"] = true;
    doc["frame"] = problem.frame.labels();
    doc["focal_count"] = problem.uncertainty.focal().size();
    PcbDetectResult r = detect_pcb(problem.uncertainty);
    if (const auto* d = std::get_if<PcbDecomposition>(&r)) {
        doc["pcb"] = true;
        json blocks = json::array();
        for (const auto& block : d->blocks())
            blocks.push_back(subset_to_json(block.members, problem.frame));
        doc["blocks"] = std::move(blocks);
    } else {
        const auto& bad = std::get<NotPcb>(r);
        doc["pcb"] = false;
        doc["offending_foci"] = json::array({subset_to_json(bad.focus_a, problem.frame),
                                             subset_to_json(bad.focus_b, problem.frame)});
    }
    return doc.dump(2);
}

std::string evaluate_report(const DecisionProblem& problem) {
    problem.check_acts();
    const PrizeAssignment& prizes = problem.require_prizes();
    const TFunction t = problem.effective_attitude();
    PcbDetectResult r = detect_pcb(problem.uncertainty);
    if (std::holds_alternative<NotPcb>(r))
        throw StructureError("uncertainty is not partially consonant; the mixed rule does not "
                             "apply (a pignistic transform would, but is not applied)");
    const PcbDecomposition& dec = std::get<PcbDecomposition>(r);

    json doc;
    json acts = json::array();
    std::vector<double> utilities;
    for (const Act& act : problem.acts) {
        const double u = mixed_utility(induce_lottery(act, dec), prizes, t);
        utilities.push_back(u);
        acts.push_back({{"name", act.name()}, {"mixed_utility", u}});
    }
    doc["acts"] = std::move(acts);

    std::vector<std::size_t> order(utilities.size());
    for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
    std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
        return utilities[a] > utilities[b] + kUtilityTolerance;
    });
    json ranking = json::array();
    for (std::size_t i = 0; i < order.size(); ++i) {
        const bool tied = i + 1 < order.size() &&
                          std::abs(utilities[order[i]] - utilities[order[i + 1]]) <=
                              kUtilityTolerance;
        ranking.push_back({{"name", problem.acts[order[i]].name()},
                           {"mixed_utility", utilities[order[i]]},
                           {"tied_with_next", tied}});
    }
    doc["ranking"] = std::move(ranking);
    return doc.dump(2);
}

std::string compare_report(const RuleComparison& cmp) {
    json doc;
    doc["acts"] = cmp.act_names;
    doc["transforms"] = {{"pignistic", cmp.pignistic_probs},
                         {"plausibility", cmp.plausibility_probs}};
    json rules = json::array();
    for (std::size_t r = 0; r < cmp.rule_names.size(); ++r) {
        json utilities = json::object();
        for (std::size_t a = 0; a < cmp.act_names.size(); ++a)
            utilities[cmp.act_names[a]] = cmp.utilities[r][a];
        json ranking = json::array();
        const RuleRanking& rk = cmp.rankings[r];
        for (std::size_t i = 0; i < rk.order.size(); ++i)
            ranking.push_back({{"name", cmp.act_names[rk.order[i]]},
                               {"tied_with_next", i < rk.tied_with_next.size() &&
                                                      rk.tied_with_next[i]}});
        rules.push_back({{"rule", cmp.rule_names[r]},
                         {"utilities", std::move(utilities)},
                         {"ranking", std::move(ranking)}});
    }
    doc["rules"] = std::move(rules);
    return doc.dump(2);
}

std::string decompose_report(const PcbDecomposition& d) {
    json doc;
    doc["frame"] = d.frame().labels();
    json blocks = json::array();
    for (const auto& block : d.blocks()) {
        json pi = json::object();
        for (const auto& [idx, v] : block.possibility) pi[d.frame().label(idx)] = v;
        blocks.push_back({{"members", subset_to_json(block.members, d.frame())},
                          {"prob", block.prob},
                          {"possibility", std::move(pi)}});
    }
    doc["blocks"] = std::move(blocks);
    return doc.dump(2);
}

} // namespace pcbdec
