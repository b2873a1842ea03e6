#pragma once

#include <string>
#include <utility>
#include <vector>

#include "hopfg/rational.hpp"
#include "hopfg/report.hpp"
#include "hopfg/uqsl2.hpp"

namespace hopfg {

/*
 * One reproducible run of the checker. An instance is either the built-in
 * quantum sl2 family at (r, alpha) or a structure-constant file; the suite
 * picks which identity groups execute. Seeded randomness enters only through
 * seed and samples, so two runs with equal configs produce equal reports.
 */
struct RunConfig {
    bool builtin = true;
    long r = 2;
    Rational alpha = Rational(1, 2);
    std::string json_path;

    std::string suite = "all";  // axioms | integrals | mtrace | sl2-full | all
    unsigned long seed = 1;
    int samples = 3;
};

// Named exact scalar surfaced in reports (sl2 quantitative values and friends).
struct ReportValue {
    std::string name;
    CycNumber value;
};

struct SuiteResult {
    CheckReport report;
    std::vector<ReportValue> values;
    // Symmetrised right integral per grade, in basis coordinates.
    std::vector<std::pair<std::string, Vec>> forms;
    std::string instance;
    long modulus = 1;
};

// The grade window of the built-in family: the cyclic subgroup of Q/2Z
// generated by alpha-bar, so it is closed under composition and inverse.
std::vector<Grade> sl2_window(const SL2Family& F);

// Execute the configured suite. Throws SchemaError for unusable configs
// (unknown suite name, sl2-full requested on a file instance, bad file).
SuiteResult run_suite(const RunConfig& cfg);

// Render a result as indented JSON (schema "report_version": 1) resp. as a
// short human-readable text block. Both are deterministic functions of the
// config and result.
std::string render_json(const RunConfig& cfg, const SuiteResult& res);
std::string render_text(const RunConfig& cfg, const SuiteResult& res);

}  // namespace hopfg
