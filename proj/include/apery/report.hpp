#pragma once

#include <optional>
#include <stdexcept>
#include <string>

#include "json.hpp"

namespace apery {

/// Machine-readable outcome of one named check over a range of indices.
/// A FAIL always carries a counterexample.
struct VerificationReport {
    enum class Status { Pass, Fail, Indeterminate };

    std::string check;
    long range_lo = 0;
    long range_hi = 0;
    Status status = Status::Pass;
    std::optional<std::string> counterexample;
    double seconds = 0.0;

    bool passed() const { return status == Status::Pass; }

    void fail(long n, std::string why) {
        if (status == Status::Fail) return;  // keep the first counterexample
        status = Status::Fail;
        counterexample = "n=" + std::to_string(n) + ": " + std::move(why);
    }

    static std::string status_name(Status s) {
        switch (s) {
            case Status::Pass: return "PASS";
            case Status::Fail: return "FAIL";
            case Status::Indeterminate: return "INDETERMINATE";
        }
        throw std::logic_error("unreachable");
    }

    nlohmann::json to_json() const {
        nlohmann::json j{{"check", check},
                         {"range", {range_lo, range_hi}},
                         {"status", status_name(status)},
                         {"seconds", seconds}};
        if (counterexample) j["counterexample"] = *counterexample;
        return j;
    }

    static VerificationReport from_json(const nlohmann::json& j) {
        VerificationReport r;
        r.check = j.at("check").get<std::string>();
        r.range_lo = j.at("range").at(0).get<long>();
        r.range_hi = j.at("range").at(1).get<long>();
        std::string s = j.at("status").get<std::string>();
        r.status = s == "PASS"    ? Status::Pass
                   : s == "FAIL" ? Status::Fail
                                 : Status::Indeterminate;
        r.seconds = j.at("seconds").get<double>();
        if (j.contains("counterexample"))
            r.counterexample = j.at("counterexample").get<std::string>();
        return r;
    }
};

}  // namespace apery
