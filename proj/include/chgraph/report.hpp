#pragma once

#include <string>
#include <vector>

#include "vendor_json.hpp"

namespace chgraph {

struct CheckResult {
    std::string check;
    std::string status;  // "pass" | "fail" | "skipped"
    std::string witness;                    // optional
    std::string residual_leading_monomial;  // optional
    int degree = -1;                        // optional

    static CheckResult pass(std::string name, int degree = -1);
    static CheckResult fail(std::string name, std::string witness,
                            std::string residual = "", int degree = -1);
    static CheckResult skipped(std::string name, std::string reason);
};

struct Report {
    std::vector<CheckResult> checks;

    void add(CheckResult r) { checks.push_back(std::move(r)); }
    void merge(const Report& o);
    bool all_passed() const;
    bool any_failed() const;
    nlohmann::json to_json() const;
    std::string to_text() const;
};

}  // namespace chgraph
