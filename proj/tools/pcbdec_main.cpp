// Batch CLI for the pcbdec engine. Talks to the shared library through
// the C API only; table rendering is done from the structured JSON the
// API returns.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "pcbdec_c.h"

namespace {

using json = nlohmann::json;

constexpr int kExitUsage = 64;

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        std::cerr << "error: cannot read file '" << path << "'\n";
        std::exit(kExitUsage);
    }
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

[[noreturn]] void die(pcbdec_status status) {
    std::cerr << "error: " << pcbdec_last_error() << "\n";
    std::exit(static_cast<int>(status));
}

struct Problem {
    pcbdec_problem* handle = nullptr;
    ~Problem() { pcbdec_problem_free(handle); }
};

void load(const std::string& path, Problem& p, double attitude_c, double alpha) {
    const std::string text = read_file(path);
    if (pcbdec_status s = pcbdec_problem_parse(text.c_str(), &p.handle); s != PCBDEC_OK) die(s);
    if (attitude_c >= 0.0)
        if (pcbdec_status s = pcbdec_problem_set_attitude_c(p.handle, attitude_c);
            s != PCBDEC_OK)
            die(s);
    if (alpha >= 0.0)
        if (pcbdec_status s = pcbdec_problem_set_alpha(p.handle, alpha); s != PCBDEC_OK) die(s);
}

std::string take(char* s) {
    std::string out = s ? s : "";
    pcbdec_string_free(s);
    return out;
}

std::string num6(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.6g", v);
    return buf;
}

std::string join_labels(const json& arr) {
    std::string out = "{";
    for (std::size_t i = 0; i < arr.size(); ++i) {
        if (i) out += ",";
        out += arr[i].get<std::string>();
    }
    return out + "}";
}

std::string ranking_line(const json& ranking) {
    std::string out;
    for (std::size_t i = 0; i < ranking.size(); ++i) {
        out += ranking[i]["name"].get<std::string>();
        if (i + 1 < ranking.size())
            out += ranking[i]["tied_with_next"].get<bool>() ? " = " : " > ";
    }
    return out;
}

void print_validate_table(const json& doc) {
    std::cout << "valid: yes\n";
    std::cout << "focal sets: " << doc["focal_count"].get<std::size_t>() << "\n";
    if (doc["pcb"].get<bool>()) {
        std::cout << "partially consonant: yes\nblocks:";
        for (const auto& b : doc["blocks"]) std::cout << " " << join_labels(b);
        std::cout << "\n";
    } else {
        std::cout << "partially consonant: no\n";
        std::cout << "offending foci: " << join_labels(doc["offending_foci"][0]) << " vs "
                  << join_labels(doc["offending_foci"][1]) << "\n";
    }
}

void print_evaluate_table(const json& doc) {
    std::cout << "act          mixed utility\n";
    for (const auto& a : doc["acts"])
        std::printf("%-12s %s\n", a["name"].get<std::string>().c_str(),
                    num6(a["mixed_utility"].get<double>()).c_str());
    std::cout << "ranking: " << ranking_line(doc["ranking"]) << "\n";
}

void print_compare_table(const json& doc) {
    const auto& acts = doc["acts"];
    std::cout << "transforms:\n";
    for (const char* name : {"pignistic", "plausibility"}) {
        std::printf("  %-14s", name);
        for (const auto& p : doc["transforms"][name]) std::printf(" %8s", num6(p.get<double>()).c_str());
        std::cout << "\n";
    }
    std::printf("\n%-16s", "rule");
    for (const auto& a : acts) std::printf(" %10s", a.get<std::string>().c_str());
    std::cout << "  ranking\n";
    for (const auto& rule : doc["rules"]) {
        std::printf("%-16s", rule["rule"].get<std::string>().c_str());
        for (const auto& a : acts)
            std::printf(" %10s",
                        num6(rule["utilities"][a.get<std::string>()].get<double>()).c_str());
        std::cout << "  " << ranking_line(rule["ranking"]) << "\n";
    }
}

int emit(const std::string& payload, const std::string& format, const std::string& command) {
    if (format == "structured" || command == "combine" || command == "transform" ||
        command == "decompose") {
        std::cout << payload << "\n";
        return 0;
    }
    const json doc = json::parse(payload);
    if (command == "validate") print_validate_table(doc);
    else if (command == "evaluate") print_evaluate_table(doc);
    else if (command == "compare") print_compare_table(doc);
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Decision analysis with partially consonant belief functions"};
    app.require_subcommand(1);

    std::string file, file2, format = "table";
    std::string rule = "dempster", method = "pignistic";
    double attitude_c = -1.0, alpha = -1.0;

    auto add_common = [&](CLI::App* cmd) {
        cmd->add_option("--attitude-c", attitude_c, "Override ambiguity attitude c in (0,1)");
        cmd->add_option("--alpha", alpha, "Hurwicz pessimism index in [0,1]");
        cmd->add_option("--format", format, "Output format: table or structured")
            ->check(CLI::IsMember({"table", "structured"}));
    };

    CLI::App* validate = app.add_subcommand("validate", "Validate a problem file");
    validate->add_option("file", file)->required();
    add_common(validate);

    CLI::App* evaluate = app.add_subcommand("evaluate", "Mixed utilities and ranking");
    evaluate->add_option("file", file)->required();
    add_common(evaluate);

    CLI::App* compare = app.add_subcommand("compare", "Rule-comparison table");
    compare->add_option("file", file)->required();
    add_common(compare);

    CLI::App* combine = app.add_subcommand("combine", "Combine two uncertainty inputs");
    combine->add_option("file1", file)->required();
    combine->add_option("file2", file2)->required();
    combine->add_option("--rule", rule, "dempster or walley")
        ->check(CLI::IsMember({"dempster", "walley"}));
    add_common(combine);

    CLI::App* transform = app.add_subcommand("transform", "Probability transform");
    transform->add_option("file", file)->required();
    transform->add_option("--method", method, "pignistic or plausibility")
        ->check(CLI::IsMember({"pignistic", "plausibility"}));
    add_common(transform);

    CLI::App* decomp = app.add_subcommand("decompose", "Partially consonant decomposition");
    decomp->add_option("file", file)->required();
    add_common(decomp);

    CLI11_PARSE(app, argc, argv);

    Problem a;
    load(file, a, attitude_c, alpha);

    char* out = nullptr;
    pcbdec_status status = PCBDEC_OK;
    std::string command;
    if (validate->parsed()) {
        command = "validate";
        status = pcbdec_validate(a.handle, &out);
    } else if (evaluate->parsed()) {
        command = "evaluate";
        status = pcbdec_evaluate(a.handle, &out);
    } else if (compare->parsed()) {
        command = "compare";
        status = pcbdec_compare(a.handle, &out);
    } else if (combine->parsed()) {
        command = "combine";
        Problem b;
        load(file2, b, -1.0, -1.0);
        status = pcbdec_combine(a.handle, b.handle, rule.c_str(), &out);
    } else if (transform->parsed()) {
        command = "transform";
        status = pcbdec_transform(a.handle, method.c_str(), &out);
    } else if (decomp->parsed()) {
        command = "decompose";
        status = pcbdec_decompose(a.handle, &out);
    }

    if (status != PCBDEC_OK) die(status);
    return emit(take(out), format, command);
}
