#pragma once

#include <string>
#include <vector>

namespace ghg {

struct CheckEntry {
    std::string name;
    bool ok = false;
    std::string detail;
};

// Named pass/fail entries; ok is the conjunction.
struct CheckReport {
    bool ok = true;
    std::vector<CheckEntry> entries;
    void add(std::string name, bool ok, std::string detail = {});
    void merge(const CheckReport& o, const std::string& prefix = {});
    int failures() const;
};

}  // namespace ghg
