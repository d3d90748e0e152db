#include "gaelcheck/verdict.hpp"

#include <algorithm>

namespace gaelcheck {

void RuleVerdict::add(Violation v) {
    conformant = false;
    if (std::find(violations.begin(), violations.end(), v) == violations.end())
        violations.push_back(std::move(v));
}

bool RuleVerdict::has(const std::string& rule) const {
    return std::any_of(violations.begin(), violations.end(), [&](auto& v) { return v.rule == rule; });
}

std::vector<std::string> RuleVerdict::rules() const {
    std::vector<std::string> out;
    for (auto& v : violations) out.push_back(v.rule);
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

std::string RuleVerdict::summary() const {
    if (conformant) return "conformant";
    std::string s = "violating: ";
    for (std::size_t i = 0; i < violations.size(); ++i) {
        if (i) s += "; ";
        s += violations[i].detail;
    }
    return s;
}

}  // namespace gaelcheck
