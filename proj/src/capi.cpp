#include "stropsat.h"

#include <string>

#include "stropsat/pipeline.hpp"

struct stropsat_config {
    stropsat::RunConfig cfg;
};

struct stropsat_result {
    stropsat::RunReport report;
    std::string text;
    std::string json;
};

namespace {

thread_local std::string g_last_error;

stropsat_status fail(stropsat_status code, const std::string& message) {
    g_last_error = message;
    return code;
}

stropsat_status run_common(const stropsat_config* cfg, stropsat_result** out, bool from_file,
                           const char* input) {
    if (out == nullptr || input == nullptr)
        return fail(STROPSAT_ERR_USAGE, "null argument");
    *out = nullptr;
    stropsat::RunConfig rc = cfg ? cfg->cfg : stropsat::RunConfig{};
    rc.json = false; // rendering format is chosen per accessor
    try {
        stropsat::RunReport report =
            from_file ? stropsat::run_file(input, rc) : stropsat::run_text(input, rc);
        auto* res = new stropsat_result;
        res->report = std::move(report);
        res->text = stropsat::render_text(res->report);
        res->json = stropsat::render_json(res->report);
        *out = res;
        return STROPSAT_OK;
    } catch (const stropsat::ParseError& e) {
        return fail(STROPSAT_ERR_PARSE, e.what());
    } catch (const stropsat::UsageError& e) {
        return fail(STROPSAT_ERR_USAGE, e.what());
    } catch (const stropsat::InternalError& e) {
        return fail(STROPSAT_ERR_INTERNAL, e.what());
    } catch (const std::exception& e) {
        return fail(from_file ? STROPSAT_ERR_IO : STROPSAT_ERR_INTERNAL, e.what());
    }
}

} // namespace

extern "C" {

stropsat_config* stropsat_config_new(void) {
    return new stropsat_config;
}

void stropsat_config_free(stropsat_config* cfg) {
    delete cfg;
}

stropsat_status stropsat_config_set_max_squarings(stropsat_config* cfg, unsigned value) {
    if (cfg == nullptr || value < 1)
        return fail(STROPSAT_ERR_USAGE, "max_squarings must be >= 1");
    cfg->cfg.max_squarings = value;
    return STROPSAT_OK;
}

stropsat_status stropsat_config_set_timeout_ms(stropsat_config* cfg, long value) {
    if (cfg == nullptr || value <= 0)
        return fail(STROPSAT_ERR_USAGE, "timeout must be positive");
    cfg->cfg.timeout_ms = value;
    return STROPSAT_OK;
}

stropsat_status stropsat_config_set_seed(stropsat_config* cfg, long value) {
    if (cfg == nullptr)
        return fail(STROPSAT_ERR_USAGE, "null config");
    cfg->cfg.seed = value;
    return STROPSAT_OK;
}

stropsat_status stropsat_run_text(const char* text, const stropsat_config* cfg,
                                  stropsat_result** out) {
    return run_common(cfg, out, false, text);
}

stropsat_status stropsat_run_file(const char* path, const stropsat_config* cfg,
                                  stropsat_result** out) {
    return run_common(cfg, out, true, path);
}

void stropsat_result_free(stropsat_result* res) {
    delete res;
}

stropsat_verdict stropsat_result_verdict(const stropsat_result* res) {
    switch (res->report.verdict) {
    case stropsat::Verdict::Sat:
        return STROPSAT_VERDICT_SAT;
    case stropsat::Verdict::Unsat:
        return STROPSAT_VERDICT_UNSAT;
    default:
        return STROPSAT_VERDICT_UNKNOWN;
    }
}

const char* stropsat_result_text(const stropsat_result* res) {
    return res->text.c_str();
}

const char* stropsat_result_json(const stropsat_result* res) {
    return res->json.c_str();
}

const char* stropsat_result_reason(const stropsat_result* res) {
    return res->report.reason.c_str();
}

double stropsat_result_solve_ms(const stropsat_result* res) {
    return res->report.solve_ms;
}

double stropsat_result_total_ms(const stropsat_result* res) {
    return res->report.total_ms;
}

const char* stropsat_last_error(void) {
    return g_last_error.c_str();
}

} // extern "C"
