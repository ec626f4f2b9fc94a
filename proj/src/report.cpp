#include "ghg/report.hpp"

namespace ghg {

void CheckReport::add(std::string name, bool good, std::string detail) {
    entries.push_back({std::move(name), good, std::move(detail)});
    if (!good) ok = false;
}

void CheckReport::merge(const CheckReport& o, const std::string& prefix) {
    for (const auto& e : o.entries) add(prefix + e.name, e.ok, e.detail);
}

int CheckReport::failures() const {
    int n = 0;
    for (const auto& e : entries) n += !e.ok;
    return n;
}

}  // namespace ghg
