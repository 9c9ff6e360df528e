#pragma once

#include <string>
#include <vector>

namespace homlr {

// One named verdict; witness carries the failing basis tuple and the exact
// nonzero defect, so hand-entered structure constants can be debugged.
struct CheckResult {
    std::string name;
    bool passed = true;
    bool warning = false; // warnings do not count against all_passed()
    std::string witness;  // empty on pass
};

struct Report {
    std::vector<CheckResult> checks;

    void add(const std::string& name, bool passed, const std::string& witness = "") {
        checks.push_back({name, passed, false, passed ? "" : witness});
    }
    void add_warning(const std::string& name, bool ok, const std::string& witness = "") {
        checks.push_back({name, ok, true, ok ? "" : witness});
    }
    void merge(const std::string& prefix, const Report& other) {
        for (const auto& c : other.checks)
            checks.push_back({prefix + "." + c.name, c.passed, c.warning, c.witness});
    }

    bool all_passed() const {
        for (const auto& c : checks)
            if (!c.warning && !c.passed) return false;
        return true;
    }
    int passed_count() const {
        int n = 0;
        for (const auto& c : checks) n += (c.warning || c.passed) ? 1 : 0;
        return n;
    }
    int total() const { return int(checks.size()); }

    std::string first_failure() const {
        for (const auto& c : checks)
            if (!c.warning && !c.passed) return c.name + (c.witness.empty() ? "" : " [" + c.witness + "]");
        return "";
    }
};

} // namespace homlr
