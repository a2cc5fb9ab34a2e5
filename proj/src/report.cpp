#include "chgraph/report.hpp"

#include <sstream>

namespace chgraph {

CheckResult CheckResult::pass(std::string name, int degree) {
    return CheckResult{std::move(name), "pass", "", "", degree};
}

CheckResult CheckResult::fail(std::string name, std::string witness,
                              std::string residual, int degree) {
    return CheckResult{std::move(name), "fail", std::move(witness),
                       std::move(residual), degree};
}

CheckResult CheckResult::skipped(std::string name, std::string reason) {
    return CheckResult{std::move(name), "skipped", std::move(reason), "", -1};
}

void Report::merge(const Report& o) {
    for (const auto& c : o.checks) checks.push_back(c);
}

bool Report::all_passed() const {
    for (const auto& c : checks)
        if (c.status == "fail") return false;
    return true;
}

bool Report::any_failed() const { return !all_passed(); }

nlohmann::json Report::to_json() const {
    nlohmann::json arr = nlohmann::json::array();
    for (const auto& c : checks) {
        nlohmann::json j;
        j["check"] = c.check;
        j["status"] = c.status;
        if (!c.witness.empty()) j["witness"] = c.witness;
        if (!c.residual_leading_monomial.empty())
            j["residual_leading_monomial"] = c.residual_leading_monomial;
        if (c.degree >= 0) j["degree"] = c.degree;
        arr.push_back(std::move(j));
    }
    return arr;
}

std::string Report::to_text() const {
    std::ostringstream os;
    for (const auto& c : checks) {
        os << (c.status == "pass" ? "PASS" : c.status == "fail" ? "FAIL" : "SKIP")
           << "  " << c.check;
        if (!c.witness.empty()) os << "  [" << c.witness << "]";
        if (!c.residual_leading_monomial.empty())
            os << "  residual@" << c.residual_leading_monomial;
        if (c.degree >= 0) os << "  (degree " << c.degree << ")";
        os << "\n";
    }
    return os.str();
}

}  // namespace chgraph
