#ifndef PARAFOCK_REPORT_HPP
#define PARAFOCK_REPORT_HPP

#include <algorithm>
#include <string>
#include <utility>
#include <vector>

namespace parafock {

/// One verified statement. Failures are data, not exceptions.
struct CheckRecord {
    std::string id;
    bool pass = false;
    std::string detail;
};

struct Report {
    std::string name;
    std::vector<CheckRecord> checks;

    void add(std::string id, bool pass, std::string detail = {})
    {
        checks.push_back({std::move(id), pass, std::move(detail)});
    }

    bool passed() const
    {
        return std::all_of(checks.begin(), checks.end(), [](const CheckRecord& c) { return c.pass; });
    }

    std::size_t failures() const
    {
        return static_cast<std::size_t>(
            std::count_if(checks.begin(), checks.end(), [](const CheckRecord& c) { return !c.pass; }));
    }
};

}  // namespace parafock

#endif
