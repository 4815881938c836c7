#pragma once

#include <string>
#include <vector>

namespace fockdual {

/// One verified claim: the worst violation seen over a sweep, against its tolerance.
struct ReportEntry {
    std::string suite;
    std::string check_id;
    std::string anchor;  // the identity being checked, written out
    double violation = 0.0;
    double tolerance = 0.0;
    bool pass = true;
    std::string note;
};

class Report {
public:
    Report() = default;
    explicit Report(std::string suite) : suite_(std::move(suite)) {}

    const std::string& suite() const { return suite_; }
    const std::vector<ReportEntry>& entries() const { return entries_; }
    std::vector<ReportEntry>& entries() { return entries_; }

    /// Records violation <= tol as a pass.
    ReportEntry& add(std::string check_id, std::string anchor, double violation, double tol,
                     std::string note = {});
    /// Records a boolean claim; violation is 0 or 1.
    ReportEntry& add_flag(std::string check_id, std::string anchor, bool ok, std::string note = {});

    void append(const Report& other);
    /// Folds entries with matching ids into one, keeping the worst violation.
    void merge_worst(const Report& other);
    /// Replaces the suite name on every entry.
    void set_suite(const std::string& suite);

    bool passed() const;
    const ReportEntry* find(const std::string& check_id) const;
    /// Worst violation among entries whose id starts with the prefix.
    double max_violation(const std::string& prefix = {}) const;
    std::vector<std::string> failing_checks() const;

    std::string to_text() const;

private:
    std::string suite_;
    std::vector<ReportEntry> entries_;
};

}  // namespace fockdual
