#ifndef NDG_REPORT_HPP
#define NDG_REPORT_HPP

#include <string>
#include <vector>

namespace ndg {

struct Violation {
    std::string kind;
    std::string detail;
};

struct Report {
    std::vector<Violation> violations;

    bool ok() const { return violations.empty(); }
    void add(std::string kind, std::string detail) {
        violations.push_back({std::move(kind), std::move(detail)});
    }
};

} // namespace ndg

#endif
