#include "tmfops/report.hpp"

#include <algorithm>
#include <sstream>

#include "json.hpp"

namespace tmfops {

std::string status_name(CheckStatus s)
{
    switch (s) {
        case CheckStatus::PASS: return "PASS";
        case CheckStatus::FAIL: return "FAIL";
        case CheckStatus::SKIPPED: return "SKIPPED";
    }
    return "?";
}

void OperationReport::add(long degree, std::string basis, std::string expected, std::string got)
{
    CheckStatus st = expected == got ? CheckStatus::PASS : CheckStatus::FAIL;
    checks.push_back({degree, std::move(basis), std::move(expected), std::move(got), st});
}

void OperationReport::add_skipped(long degree, std::string basis, std::string note)
{
    checks.push_back({degree, std::move(basis), note, std::move(note), CheckStatus::SKIPPED});
}

void OperationReport::merge(const OperationReport& other)
{
    checks.insert(checks.end(), other.checks.begin(), other.checks.end());
    window_lo = std::min(window_lo, other.window_lo);
    window_hi = std::max(window_hi, other.window_hi);
}

bool OperationReport::passed() const
{
    return count(CheckStatus::FAIL) == 0;
}

long OperationReport::count(CheckStatus s) const
{
    return static_cast<long>(std::count_if(checks.begin(), checks.end(),
                                           [&](const ReportCheck& c) { return c.status == s; }));
}

std::string OperationReport::summary() const
{
    std::ostringstream os;
    os << suite << ": " << checks.size() << " checks, " << count(CheckStatus::PASS) << " pass, "
       << count(CheckStatus::FAIL) << " fail, " << count(CheckStatus::SKIPPED) << " skipped";
    return os.str();
}

std::string OperationReport::to_json() const
{
    nlohmann::json j;
    j["suite"] = suite;
    j["window"] = {window_lo, window_hi};
    j["checks"] = nlohmann::json::array();
    for (const auto& c : checks) {
        j["checks"].push_back({{"degree", c.degree},
                               {"basis", c.basis},
                               {"expected", c.expected},
                               {"got", c.got},
                               {"status", status_name(c.status)}});
    }
    return j.dump(2);
}

std::string OperationReport::to_csv() const
{
    auto field = [](const std::string& s) {
        if (s.find_first_of(",\"") == std::string::npos) return s;
        std::string quoted = "\"";
        for (char ch : s) {
            if (ch == '"') quoted += '"';
            quoted += ch;
        }
        return quoted + "\"";
    };
    std::ostringstream os;
    os << "degree,basis,expected,got,status\n";
    for (const auto& c : checks)
        os << c.degree << "," << field(c.basis) << "," << field(c.expected) << ","
           << field(c.got) << "," << status_name(c.status) << "\n";
    return os.str();
}

std::string OperationReport::to_table() const
{
    size_t wb = 5, we = 8, wg = 3;
    for (const auto& c : checks) {
        wb = std::max(wb, c.basis.size());
        we = std::max(we, c.expected.size());
        wg = std::max(wg, c.got.size());
    }
    std::ostringstream os;
    os << summary() << "\n";
    auto pad = [](const std::string& s, size_t w) {
        return s + std::string(w > s.size() ? w - s.size() : 0, ' ');
    };
    os << pad("degree", 7) << "  " << pad("basis", wb) << "  " << pad("expected", we) << "  "
       << pad("got", wg) << "  status\n";
    for (const auto& c : checks) {
        os << pad(std::to_string(c.degree), 7) << "  " << pad(c.basis, wb) << "  "
           << pad(c.expected, we) << "  " << pad(c.got, wg) << "  " << status_name(c.status)
           << "\n";
    }
    return os.str();
}

} // namespace tmfops
