#include <cstdio>
#include <fstream>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "hopfg/errors.hpp"
#include "hopfg/suites.hpp"

namespace {

// Shared instance/run flags. Every subcommand funnels into one RunConfig so
// equal configurations always execute the same code path.
void add_instance_flags(CLI::App* cmd, hopfg::RunConfig& cfg, std::string& alpha_text,
                        std::string& json_path) {
    cmd->add_option("--r", cfg.r, "rank parameter of the built-in sl2 instance")
        ->capture_default_str();
    cmd->add_option("--alpha", alpha_text, "weight parameter, a rational like 1/2")
        ->capture_default_str();
    cmd->add_option("--json", json_path, "load the instance from a structure-constant file");
}

void add_run_flags(CLI::App* cmd, hopfg::RunConfig& cfg) {
    cmd->add_option("--seed", cfg.seed, "base seed for the randomized checks")
        ->envname("HOPFG_SEED")
        ->capture_default_str();
    cmd->add_option("--samples", cfg.samples, "seeded samples per randomized check")
        ->capture_default_str();
}

int emit(const hopfg::RunConfig& cfg, const hopfg::SuiteResult& res, const std::string& output,
         const std::string& out_path) {
    std::string text =
        output == "json" ? hopfg::render_json(cfg, res) : hopfg::render_text(cfg, res);
    if (out_path.empty()) {
        std::cout << text;
    } else {
        std::ofstream out(out_path, std::ios::binary);
        if (!out) {
            std::cerr << "error: cannot write " << out_path << "\n";
            return 2;
        }
        out << text;
    }
    return res.report.ok() ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact checker for pivotal Hopf group-coalgebras"};
    app.require_subcommand(1);

    hopfg::RunConfig cfg;
    std::string alpha_text = "1/2";
    std::string json_path;
    std::string output = "text";
    std::string out_path;
    std::string instance = "sl2";
    std::string report_mode = "full";

    CLI::App* check = app.add_subcommand("check", "run a check suite on an instance");
    check->add_option("--instance", instance, "built-in instance name (sl2)")
        ->capture_default_str();
    add_instance_flags(check, cfg, alpha_text, json_path);
    check->add_option("--suite", cfg.suite, "axioms | integrals | mtrace | sl2-full | all")
        ->capture_default_str();
    add_run_flags(check, cfg);
    check->add_option("--output", output, "text | json")->capture_default_str();
    check->add_option("--out", out_path, "write the report to a file instead of stdout");

    CLI::App* sl2 = app.add_subcommand("sl2", "quantitative report for the built-in sl2 family");
    add_instance_flags(sl2, cfg, alpha_text, json_path);
    sl2->add_option("--report", report_mode, "full | brief")->capture_default_str();
    sl2->add_option("--out", out_path, "write the report to a file instead of stdout");

    CLI::App* ints = app.add_subcommand("integrals", "solve and verify the integral family");
    add_instance_flags(ints, cfg, alpha_text, json_path);
    ints->add_option("--output", output, "text | json")->capture_default_str();
    ints->add_option("--out", out_path, "write the report to a file instead of stdout");

    CLI::App* mt = app.add_subcommand("mtrace", "trace reduction and decomposition checks");
    add_instance_flags(mt, cfg, alpha_text, json_path);
    add_run_flags(mt, cfg);
    mt->add_option("--output", output, "text | json")->capture_default_str();
    mt->add_option("--out", out_path, "write the report to a file instead of stdout");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return app.exit(e);
        app.exit(e);
        return 2;
    }

    try {
        cfg.alpha = hopfg::parse_rational(alpha_text);
        if (!json_path.empty()) {
            cfg.builtin = false;
            cfg.json_path = json_path;
        } else if (instance != "sl2") {
            throw hopfg::SchemaError("unknown built-in instance '" + instance + "'");
        }
        if (app.got_subcommand(sl2)) {
            cfg.suite = "sl2-full";
            output = "json";
            if (report_mode != "full" && report_mode != "brief")
                throw hopfg::SchemaError("unknown report mode '" + report_mode + "'");
        } else if (app.got_subcommand(ints)) {
            cfg.suite = "integrals";
        } else if (app.got_subcommand(mt)) {
            cfg.suite = "mtrace";
        }
        if (output != "text" && output != "json")
            throw hopfg::SchemaError("unknown output format '" + output + "'");

        hopfg::SuiteResult res = hopfg::run_suite(cfg);
        if (app.got_subcommand(sl2) && report_mode == "brief") res.forms.clear();
        return emit(cfg, res, output, out_path);
    } catch (const hopfg::SchemaError& e) {
        std::cerr << "input error: " << e.what() << "\n";
        return 2;
    } catch (const hopfg::Error& e) {
        std::cerr << "check error: " << e.what() << "\n";
        return 1;
    }
}
