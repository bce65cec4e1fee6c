#ifndef HOPFYB_REPORT_HPP
#define HOPFYB_REPORT_HPP

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace hopfyb {

// Location of the first entrywise disagreement of a failed identity:
// input basis multi-index followed by the output index, plus both values.
struct Witness {
    std::vector<int> index;
    std::string lhs, rhs;
};

struct Check {
    std::string name;
    bool passed = true;
    std::optional<Witness> witness;
};

struct AxiomReport {
    std::string subject;
    std::vector<Check> checks;
    long elapsed_ms = 0;

    bool all_passed() const {
        for (const auto& c : checks)
            if (!c.passed) return false;
        return true;
    }
    void add(Check c) { checks.push_back(std::move(c)); }
};

struct internal_inconsistency_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct precondition_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

std::string format_report(const AxiomReport& r);

}  // namespace hopfyb

#endif
