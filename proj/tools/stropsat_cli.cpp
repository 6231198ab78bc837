// stropsat command-line front end; talks to the core only through stropsat.h.

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "stropsat.h"

namespace {

constexpr int kExitDecided = 0;
constexpr int kExitUnknown = 1;
constexpr int kExitUsage = 2;
constexpr int kExitInternal = 3;

struct Options {
    bool json = false;
    long timeout_ms = 0;
    unsigned max_squarings = 32;
    long seed = 0;
};

stropsat_config* make_config(const Options& opt) {
    stropsat_config* cfg = stropsat_config_new();
    stropsat_config_set_max_squarings(cfg, opt.max_squarings);
    if (opt.timeout_ms > 0)
        stropsat_config_set_timeout_ms(cfg, opt.timeout_ms);
    stropsat_config_set_seed(cfg, opt.seed);
    return cfg;
}

// exit code for one file, or kExitUsage/kExitInternal on error
int run_one(const std::string& path, const stropsat_config* cfg, const Options& opt) {
    stropsat_result* res = nullptr;
    stropsat_status st = stropsat_run_file(path.c_str(), cfg, &res);
    if (st != STROPSAT_OK) {
        std::fprintf(stderr, "stropsat: %s: %s\n", path.c_str(), stropsat_last_error());
        return st == STROPSAT_ERR_INTERNAL ? kExitInternal : kExitUsage;
    }
    std::fputs(opt.json ? stropsat_result_json(res) : stropsat_result_text(res), stdout);
    int code = stropsat_result_verdict(res) == STROPSAT_VERDICT_UNKNOWN ? kExitUnknown
                                                                        : kExitDecided;
    stropsat_result_free(res);
    return code;
}

const char* verdict_name(stropsat_verdict v) {
    switch (v) {
    case STROPSAT_VERDICT_SAT:
        return "sat";
    case STROPSAT_VERDICT_UNSAT:
        return "unsat";
    default:
        return "unknown";
    }
}

int run_batch(const std::string& dir, const stropsat_config* cfg) {
    std::error_code ec;
    std::filesystem::directory_iterator it(dir, ec);
    if (ec) {
        std::fprintf(stderr, "stropsat: cannot open directory '%s': %s\n", dir.c_str(),
                     ec.message().c_str());
        return kExitUsage;
    }
    std::vector<std::string> files;
    for (const auto& entry : it)
        if (entry.is_regular_file() && entry.path().extension() == ".smt2")
            files.push_back(entry.path().string());
    std::sort(files.begin(), files.end());

    int sat = 0, unsat = 0, unknown = 0;
    double total_ms = 0;
    for (const std::string& path : files) {
        stropsat_result* res = nullptr;
        if (stropsat_run_file(path.c_str(), cfg, &res) != STROPSAT_OK) {
            std::fprintf(stderr, "stropsat: warning: skipping %s: %s\n", path.c_str(),
                         stropsat_last_error());
            continue;
        }
        stropsat_verdict v = stropsat_result_verdict(res);
        double ms = stropsat_result_total_ms(res);
        total_ms += ms;
        switch (v) {
        case STROPSAT_VERDICT_SAT:
            ++sat;
            break;
        case STROPSAT_VERDICT_UNSAT:
            ++unsat;
            break;
        default:
            ++unknown;
            break;
        }
        std::printf("%-48s %-8s %10.2f ms", std::filesystem::path(path).filename().c_str(),
                    verdict_name(v), ms);
        if (v == STROPSAT_VERDICT_UNKNOWN)
            std::printf("  ; %s", stropsat_result_reason(res));
        std::printf("\n");
        stropsat_result_free(res);
    }
    std::printf("-- %d file(s): %d sat, %d unsat, %d unknown, %.2f ms total\n",
                sat + unsat + unknown, sat, unsat, unknown, total_ms);
    return kExitDecided;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"subtropical satisfiability heuristic for strict polynomial inequalities"};
    app.name("stropsat");

    Options opt;
    app.add_flag("--json", opt.json, "emit the full run report as JSON");
    app.add_option("--timeout-ms", opt.timeout_ms, "wall-clock budget per file");
    app.add_option("--max-squarings", opt.max_squarings, "base search budget (default 32)")
        ->check(CLI::PositiveNumber);
    app.add_option("--seed", opt.seed, "seed for randomized tooling");

    std::vector<std::string> files;
    app.add_option("files", files, "SMT-LIB2 input files");

    std::string batch_dir;
    CLI::App* batch = app.add_subcommand("batch", "run every .smt2 file in a directory");
    batch->add_option("dir", batch_dir, "corpus directory")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e) == 0 ? kExitDecided : kExitUsage;
    }

    if (const char* env_seed = std::getenv("STROPSAT_SEED"))
        opt.seed = std::strtol(env_seed, nullptr, 10);

    stropsat_config* cfg = make_config(opt);
    int code;
    if (batch->parsed()) {
        code = run_batch(batch_dir, cfg);
    } else if (files.empty()) {
        std::fprintf(stderr, "stropsat: no input files (see --help)\n");
        code = kExitUsage;
    } else {
        code = kExitDecided;
        for (const std::string& path : files)
            code = std::max(code, run_one(path, cfg, opt));
    }
    stropsat_config_free(cfg);
    return code;
}
