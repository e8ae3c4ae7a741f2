#pragma once

#include <string>
#include <utility>
#include <vector>

namespace cluskit {

/// Outcome of one verification harness.  A FAIL is a found counterexample;
/// inconclusive means the input graph was truncated, so only "no
/// counterexample found" can be claimed.
struct VerifyReport {
    std::string name;
    bool pass = true;
    bool inconclusive = false;
    std::vector<std::string> violations;
    std::vector<std::string> notes;
    std::vector<std::pair<std::string, long long>> counts;

    void violation(std::string what) {
        pass = false;
        violations.push_back(std::move(what));
    }
    void count(std::string key, long long value) {
        counts.emplace_back(std::move(key), value);
    }
    long long count_of(const std::string& key) const {
        for (const auto& [k, v] : counts)
            if (k == key) return v;
        return -1;
    }
};

}  // namespace cluskit
