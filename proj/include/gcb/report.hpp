#pragma once

#include <sstream>
#include <string>
#include <vector>

namespace gcb {

struct Clause {
    std::string name;
    bool pass = true;
    std::string detail;
};

/// Clause-level outcome of a verification routine.
struct CheckReport {
    std::string check;
    std::vector<Clause> clauses;

    explicit CheckReport(std::string name = {}) : check(std::move(name)) {}

    void add(std::string name, bool pass, std::string detail = {}) {
        clauses.push_back({std::move(name), pass, std::move(detail)});
    }

    bool passed() const {
        for (const auto& c : clauses)
            if (!c.pass) return false;
        return true;
    }

    const Clause* first_failure() const {
        for (const auto& c : clauses)
            if (!c.pass) return &c;
        return nullptr;
    }

    std::string str() const {
        std::ostringstream out;
        out << check << ": " << (passed() ? "pass" : "FAIL") << "\n";
        for (const auto& c : clauses) {
            out << "  [" << (c.pass ? "ok" : "FAIL") << "] " << c.name;
            if (!c.detail.empty()) out << ": " << c.detail;
            out << "\n";
        }
        return out.str();
    }
};

} // namespace gcb
