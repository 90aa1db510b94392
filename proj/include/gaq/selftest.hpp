#pragma once

#include <functional>
#include <iosfwd>
#include <string>
#include <vector>

#include "gaq/report.hpp"

namespace gaq {

struct CriterionOutcome {
    bool passed = false;
    std::string detail;  // one line: the measured quantities against their tolerances
    Json metrics = Json::object();
};

struct Criterion {
    int id = 0;
    std::string key;
    std::string title;
    std::function<CriterionOutcome()> run;
};

// The fifteen acceptance checks with their tolerances, sample counts and seeds fixed.
const std::vector<Criterion>& acceptance_criteria();

struct CriterionResult {
    int id = 0;
    std::string key, title;
    CriterionOutcome outcome;
    double seconds = 0.0;
    std::string error;  // set when the check threw
};

struct SelftestSummary {
    std::vector<CriterionResult> results;
    double seconds = 0.0;
    bool all_passed() const;
};

// Runs every criterion whose key or title contains `filter` (all when empty).
// Each result line is written to `log` as soon as it is known.
SelftestSummary run_selftest(const std::string& filter, std::ostream* log);

std::string result_line(const CriterionResult& r);
Json summary_json(const SelftestSummary& s, bool with_timing);

}  // namespace gaq
