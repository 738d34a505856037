#include "catkit/laws.hpp"

namespace catkit::laws {

std::string status_word(LawStatus s) {
    switch (s) {
        case LawStatus::pass: return "PASS";
        case LawStatus::fail: return "FAIL";
        case LawStatus::insufficient_samples: return "INSUFFICIENT";
        case LawStatus::not_applicable: return "NOT-APPLICABLE";
    }
    return "?";
}

std::string format_report(const LawReport& r) {
    std::string line = status_word(r.status) + " " + r.law;
    if (r.status == LawStatus::pass || r.status == LawStatus::fail ||
        r.status == LawStatus::insufficient_samples)
        line += " samples=" + std::to_string(r.samples_tested);
    if (r.counterexample) {
        const Counterexample& c = *r.counterexample;
        line += " seed=" + std::to_string(c.seed) + " sample=" + std::to_string(c.sample_index);
        if (!c.lhs.empty() || !c.rhs.empty()) line += " lhs=" + c.lhs + " rhs=" + c.rhs;
        if (!c.detail.empty()) line += " detail=" + c.detail;
    }
    if (!r.note.empty()) line += " note=" + r.note;
    return line;
}

std::string format_suite(const LawSuite& s) {
    std::string out = "suite backend=" + s.backend + " seed=" + std::to_string(s.seed) +
                      " requested=" + std::to_string(s.requested) + "\n";
    for (const LawReport& r : s.laws) out += "  " + format_report(r) + "\n";
    return out;
}

} // namespace catkit::laws
