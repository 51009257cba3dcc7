#pragma once

#include <string>
#include <vector>

namespace tmfops {

enum class CheckStatus { PASS, FAIL, SKIPPED };

std::string status_name(CheckStatus s);

struct ReportCheck {
    long degree = 0;     // degree, weight or precision the check ran at
    std::string basis;   // basis label or assertion name
    std::string expected;
    std::string got;
    CheckStatus status = CheckStatus::PASS;
};

struct OperationReport {
    std::string suite;
    long window_lo = 0;
    long window_hi = 0;
    std::vector<ReportCheck> checks;

    // status derived from exact string equality of expected and got
    void add(long degree, std::string basis, std::string expected, std::string got);
    void add_skipped(long degree, std::string basis, std::string note);
    void merge(const OperationReport& other);

    bool passed() const; // no FAIL entries (SKIPPED allowed)
    long count(CheckStatus s) const;
    std::string summary() const; // "suite: N checks, P pass, F fail, S skipped"

    std::string to_json() const;
    std::string to_csv() const;
    std::string to_table() const;
};

} // namespace tmfops
