#include "fockdual/report.hpp"

#include <algorithm>
#include <cmath>
#include <iomanip>
#include <sstream>

namespace fockdual {

ReportEntry& Report::add(std::string check_id, std::string anchor, double violation, double tol,
                         std::string note) {
    ReportEntry e;
    e.suite = suite_;
    e.check_id = std::move(check_id);
    e.anchor = std::move(anchor);
    e.violation = violation;
    e.tolerance = tol;
    e.pass = std::isfinite(violation) && violation <= tol;
    e.note = std::move(note);
    entries_.push_back(std::move(e));
    return entries_.back();
}

ReportEntry& Report::add_flag(std::string check_id, std::string anchor, bool ok, std::string note) {
    return add(std::move(check_id), std::move(anchor), ok ? 0.0 : 1.0, 0.0, std::move(note));
}

void Report::append(const Report& other) {
    entries_.insert(entries_.end(), other.entries_.begin(), other.entries_.end());
}

void Report::merge_worst(const Report& other) {
    for (const auto& e : other.entries_) {
        auto it = std::find_if(entries_.begin(), entries_.end(),
                               [&](const ReportEntry& o) { return o.check_id == e.check_id; });
        if (it == entries_.end()) {
            entries_.push_back(e);
            entries_.back().suite = suite_;
            continue;
        }
        const bool keep_new = !std::isfinite(e.violation) || e.violation > it->violation || (!e.pass && it->pass);
        const bool pass = it->pass && e.pass;
        if (keep_new) {
            const std::string suite = it->suite;
            *it = e;
            it->suite = suite;
        }
        it->pass = pass;
    }
}

void Report::set_suite(const std::string& suite) {
    suite_ = suite;
    for (auto& e : entries_) e.suite = suite;
}

bool Report::passed() const {
    return std::all_of(entries_.begin(), entries_.end(), [](const ReportEntry& e) { return e.pass; });
}

const ReportEntry* Report::find(const std::string& check_id) const {
    for (const auto& e : entries_)
        if (e.check_id == check_id) return &e;
    return nullptr;
}

double Report::max_violation(const std::string& prefix) const {
    double m = 0.0;
    for (const auto& e : entries_)
        if (e.check_id.rfind(prefix, 0) == 0) m = std::max(m, e.violation);
    return m;
}

std::vector<std::string> Report::failing_checks() const {
    std::vector<std::string> out;
    for (const auto& e : entries_)
        if (!e.pass) out.push_back(e.check_id);
    return out;
}

std::string Report::to_text() const {
    std::ostringstream os;
    for (const auto& e : entries_) {
        os << (e.pass ? "PASS " : "FAIL ") << std::left << std::setw(20) << e.suite << ' '
           << std::setw(34) << e.check_id << " viol=" << std::scientific << std::setprecision(2)
           << e.violation << " tol=" << e.tolerance << "  [" << e.anchor << "]";
        if (!e.note.empty()) os << "  " << e.note;
        os << '\n';
    }
    return os.str();
}

}  // namespace fockdual
