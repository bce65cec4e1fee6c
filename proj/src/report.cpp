#include "hopfyb/report.hpp"

#include <sstream>

namespace hopfyb {

std::string format_report(const AxiomReport& r) {
    std::ostringstream os;
    os << "subject: " << r.subject << "\n";
    for (const auto& c : r.checks) {
        os << "  [" << (c.passed ? "PASS" : "FAIL") << "] " << c.name;
        if (c.witness) {
            os << "  at (";
            for (std::size_t i = 0; i < c.witness->index.size(); ++i) {
                if (i) os << ",";
                os << c.witness->index[i];
            }
            os << ") lhs=" << c.witness->lhs << " rhs=" << c.witness->rhs;
        }
        os << "\n";
    }
    os << "overall: " << (r.all_passed() ? "PASS" : "FAIL") << " (" << r.elapsed_ms << " ms)\n";
    return os.str();
}

}  // namespace hopfyb
