#pragma once

#include "nilgeo/document.hpp"

#include <set>

namespace nilgeo {

/// One verification record. `claim` names the mathematical statement
/// being checked; `status` is one of pass, fail, expected-fail, value,
/// skip, error. Only fail/error count against the verdict; an
/// expected-fail matches a negative expectation from the manifest.
struct CheckRecord {
    std::string check;
    std::string claim;
    std::string status;
    std::string detail;
    bool counts_as_failure = false;
};

struct Report {
    std::vector<CheckRecord> records;
    bool all_pass = true;
};

/// Expected properties used to turn negative results into assertions
/// (e.g. an entry known to carry no HKT metric).
struct Expectations {
    std::optional<int> step;
    std::optional<bool> abelian;
    std::optional<bool> hkt;
};

struct ReportOptions {
    std::set<std::string> selected;       // empty = run everything
    std::optional<int> max_closure;       // holonomy bound override
    int lefschetz_full_dim = 16;          // run all degrees up to this real dimension
};

/// All check names in execution order.
const std::vector<std::string>& report_check_names();

Report run_report(const AlgebraDocument& doc, const ReportOptions& opts = {},
                  const std::optional<Expectations>& expect = std::nullopt);

/// Expectations from the catalog manifest when the document's name is a
/// catalog entry.
std::optional<Expectations> catalog_expectations(const std::string& name);

std::string render_text(const Report& report);
std::string render_json(const Report& report);

} // namespace nilgeo
