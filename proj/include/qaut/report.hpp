#pragma once

#include <string>
#include <utility>
#include <vector>

namespace qaut {

// Accumulates named invariant failures with witness indices in the message.
struct ValidationReport {
    bool ok = true;
    std::vector<std::string> failures;

    void fail(std::string message) {
        ok = false;
        failures.push_back(std::move(message));
    }
    void merge(const ValidationReport& other) {
        if (!other.ok)
            ok = false;
        failures.insert(failures.end(), other.failures.begin(), other.failures.end());
    }
    explicit operator bool() const { return ok; }
};

}  // namespace qaut
