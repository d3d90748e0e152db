#pragma once

#include <string>
#include <vector>

namespace gaelcheck {

struct Violation {
    std::string rule;
    std::string detail;
    bool operator==(const Violation&) const = default;
};

struct RuleVerdict {
    bool conformant = true;
    std::vector<Violation> violations;
    std::vector<std::string> evidence;

    void add(Violation v);
    bool has(const std::string& rule) const;
    std::vector<std::string> rules() const;  // distinct rule ids, sorted
    std::string summary() const;              // "conformant" or "violating: ..."
};

}  // namespace gaelcheck
