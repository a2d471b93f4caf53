#pragma once

// Verification outcomes and inequality-scan results, with the stable JSON
// shapes the CLI emits. runtime_ms is kept for logging but deliberately left
// out of the serialized form so identical configurations produce
// byte-identical reports.

#include <json.hpp>

#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace durfee {

struct Discrepancy {
    int n = 0;
    std::string lhs;
    std::string rhs;
};

enum class VerifyStatus { pass, fail, pass_with_window };

inline const char* to_string(VerifyStatus s) {
    switch (s) {
        case VerifyStatus::pass: return "pass";
        case VerifyStatus::fail: return "fail";
        case VerifyStatus::pass_with_window: return "pass-with-window";
    }
    return "?";
}

struct VerificationReport {
    std::string id;
    std::vector<std::pair<std::string, std::string>> params;  // insertion order
    int order = 0;
    VerifyStatus status = VerifyStatus::pass;
    std::optional<int> window_start;  // set for pass-with-window
    std::optional<Discrepancy> first_discrepancy;
    long long runtime_ms = 0;  // not serialized

    bool passed() const { return status != VerifyStatus::fail; }

    nlohmann::ordered_json to_json() const {
        nlohmann::ordered_json j;
        j["id"] = id;
        nlohmann::ordered_json p = nlohmann::ordered_json::object();
        for (const auto& [k, v] : params) p[k] = v;
        j["params"] = std::move(p);
        j["order"] = order;
        std::string st = to_string(status);
        if (status == VerifyStatus::pass_with_window && window_start)
            st += "(" + std::to_string(*window_start) + ")";
        j["status"] = st;
        if (first_discrepancy) {
            j["first_discrepancy"] = {{"n", first_discrepancy->n},
                                      {"lhs", first_discrepancy->lhs},
                                      {"rhs", first_discrepancy->rhs}};
        } else {
            j["first_discrepancy"] = nullptr;
        }
        return j;
    }
};

/// Observed sign behaviour of one congruence class over a scan window.
struct ClassSignPattern {
    enum class Kind { all_positive_from, all_negative_from, identically_zero, mixed };
    std::optional<int> d;  // absent when the scan is not split by class
    Kind kind = Kind::identically_zero;
    std::optional<int> n0;  // minimal size from which the pattern holds

    static const char* kind_name(Kind k) {
        switch (k) {
            case Kind::all_positive_from: return "all-positive-from";
            case Kind::all_negative_from: return "all-negative-from";
            case Kind::identically_zero: return "identically-zero";
            case Kind::mixed: return "mixed";
        }
        return "?";
    }
};

struct InequalityScan {
    int t = 1;
    int r = 0;
    int s = 0;
    int n_lo = 0;
    int n_hi = 0;
    bool by_class = false;
    std::vector<ClassSignPattern> sign_by_class;

    nlohmann::ordered_json to_json() const {
        nlohmann::ordered_json j;
        j["t"] = t;
        j["r"] = r;
        j["s"] = s;
        j["window"] = {n_lo, n_hi};
        j["by_class"] = by_class;
        auto classes = nlohmann::ordered_json::array();
        for (const auto& c : sign_by_class) {
            nlohmann::ordered_json e = nlohmann::ordered_json::object();
            if (c.d) e["d"] = *c.d;
            e["pattern"] = ClassSignPattern::kind_name(c.kind);
            if (c.n0)
                e["n0"] = *c.n0;
            else
                e["n0"] = nullptr;
            classes.push_back(std::move(e));
        }
        j["classes"] = std::move(classes);
        return j;
    }
};

}  // namespace durfee
