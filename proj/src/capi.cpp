#include "pcbdec_c.h"

#include <cstring>
#include <string>

#include "pcbdec/alt_rules.hpp"
#include "pcbdec/problem_json.hpp"

struct pcbdec_problem {
    pcbdec::DecisionProblem value;
};

namespace {

thread_local std::string g_last_error;

char* dup_string(const std::string& s) {
    char* out = new char[s.size() + 1];
    std::memcpy(out, s.c_str(), s.size() + 1);
    return out;
}

pcbdec_status fail(pcbdec_status code, const char* what) {
    g_last_error = what;
    return code;
}

template <typename Fn>
pcbdec_status guarded(Fn&& fn) {
    try {
        fn();
        g_last_error.clear();
        return PCBDEC_OK;
    } catch (const pcbdec::Error& e) {
        return fail(static_cast<pcbdec_status>(static_cast<int>(e.code())), e.what());
    } catch (const std::exception& e) {
        return fail(PCBDEC_ERR_INTERNAL, e.what());
    }
}

} // namespace

extern "C" {

pcbdec_status pcbdec_problem_parse(const char* json_text, pcbdec_problem** out) {
    if (!json_text || !out) return fail(PCBDEC_ERR_INTERNAL, "null argument");
    *out = nullptr;
    return guarded([&] {
        *out = new pcbdec_problem{pcbdec::parse_problem(json_text)};
    });
}

void pcbdec_problem_free(pcbdec_problem* problem) { delete problem; }

pcbdec_status pcbdec_problem_set_attitude_c(pcbdec_problem* problem, double c) {
    if (!problem) return fail(PCBDEC_ERR_INTERNAL, "null problem handle");
    return guarded([&] { problem->value.attitude = pcbdec::TFunction::parametric(c); });
}

pcbdec_status pcbdec_problem_set_alpha(pcbdec_problem* problem, double alpha) {
    if (!problem) return fail(PCBDEC_ERR_INTERNAL, "null problem handle");
    return guarded([&] {
        if (alpha < 0.0 || alpha > 1.0)
            throw pcbdec::NumericError("alpha must lie in [0,1]");
        problem->value.alpha = alpha;
    });
}

pcbdec_status pcbdec_validate(const pcbdec_problem* problem, char** report_json) {
    if (!problem || !report_json) return fail(PCBDEC_ERR_INTERNAL, "null argument");
    return guarded([&] { *report_json = dup_string(pcbdec::validate_report(problem->value)); });
}

pcbdec_status pcbdec_evaluate(const pcbdec_problem* problem, char** result_json) {
    if (!problem || !result_json) return fail(PCBDEC_ERR_INTERNAL, "null argument");
    return guarded([&] { *result_json = dup_string(pcbdec::evaluate_report(problem->value)); });
}

pcbdec_status pcbdec_compare(const pcbdec_problem* problem, char** result_json) {
    if (!problem || !result_json) return fail(PCBDEC_ERR_INTERNAL, "null argument");
    return guarded([&] {
        *result_json =
            dup_string(pcbdec::compare_report(pcbdec::compare_rules(problem->value)));
    });
}

pcbdec_status pcbdec_combine(const pcbdec_problem* a, const pcbdec_problem* b,
                             const char* rule, char** result_json) {
    if (!a || !b || !rule || !result_json) return fail(PCBDEC_ERR_INTERNAL, "null argument");
    return guarded([&] {
        const std::string r = rule;
        pcbdec::MassFunction combined = [&] {
            if (r == "dempster")
                return pcbdec::dempster_combine(a->value.uncertainty, b->value.uncertainty);
            if (r == "walley")
                return pcbdec::from_commonality(
                    pcbdec::walley_combine(pcbdec::to_commonality(a->value.uncertainty),
                                           pcbdec::to_commonality(b->value.uncertainty)));
            throw pcbdec::ValidationError("unknown combination rule '" + r +
                                          "' (expected dempster or walley)");
        }();
        *result_json = dup_string(pcbdec::serialize_bpa_problem(combined));
    });
}

pcbdec_status pcbdec_transform(const pcbdec_problem* problem, const char* method,
                               char** result_json) {
    if (!problem || !method || !result_json) return fail(PCBDEC_ERR_INTERNAL, "null argument");
    return guarded([&] {
        const std::string m = method;
        pcbdec::MassFunction p = [&] {
            if (m == "pignistic") return pcbdec::pignistic(problem->value.uncertainty);
            if (m == "plausibility")
                return pcbdec::plausibility_transform(problem->value.uncertainty);
            throw pcbdec::ValidationError("unknown transform '" + m +
                                          "' (expected pignistic or plausibility)");
        }();
        *result_json = dup_string(pcbdec::serialize_bpa_problem(p));
    });
}

pcbdec_status pcbdec_decompose(const pcbdec_problem* problem, char** result_json) {
    if (!problem || !result_json) return fail(PCBDEC_ERR_INTERNAL, "null argument");
    return guarded([&] {
        *result_json = dup_string(
            pcbdec::decompose_report(pcbdec::decompose(problem->value.uncertainty)));
    });
}

pcbdec_status pcbdec_problem_serialize(const pcbdec_problem* problem, char** result_json) {
    if (!problem || !result_json) return fail(PCBDEC_ERR_INTERNAL, "null argument");
    return guarded([&] { *result_json = dup_string(pcbdec::serialize_problem(problem->value)); });
}

void pcbdec_string_free(char* s) { delete[] s; }

const char* pcbdec_last_error(void) { return g_last_error.c_str(); }

} // extern "C"
