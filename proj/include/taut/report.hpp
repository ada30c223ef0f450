#pragma once

#include <chrono>
#include <optional>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "taut/bigrat.hpp"

namespace taut {

/// Every relation is checked by pairing against ψκ test monomials; this is
/// evidence for the identity in the Chow ring, not a proof of it.
inline constexpr std::string_view kEvidenceLevel = "psi-kappa pairing";

using ParamValue = std::variant<long, std::string>;

struct TestResult {
    std::string monomial;
    BigRat value;
};

struct VerificationReport {
    std::string relation;
    std::vector<std::pair<std::string, ParamValue>> params;
    std::vector<TestResult> tests;
    bool pass = true;
    bool trivial = false;
    long millis = 0;
    std::optional<BigRat> expected;
    std::vector<std::string> notes;
};

/// Single-line JSON object. Rationals are "num/den" strings; keys appear in
/// a fixed order. With `with_timing` false the millis field is written as 0.
std::string to_json(const VerificationReport& report, bool with_timing = true);
/// JSON array of reports, one per line.
std::string to_json(const std::vector<VerificationReport>& reports, bool with_timing = true);

/// CSV with header `relation,params,monomial,value,pass,trivial,millis`, one
/// row per test (or one row with empty monomial when there are no tests).
std::string to_csv(const std::vector<VerificationReport>& reports, bool with_timing = true);

/// "PASS bbt g=2 r=0 tests=1" style line.
std::string to_text(const VerificationReport& report);

std::string render_params(const VerificationReport& report);

class Stopwatch {
public:
    Stopwatch() : start_(std::chrono::steady_clock::now()) {}
    [[nodiscard]] long millis() const {
        return static_cast<long>(
            std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - start_).count());
    }

private:
    std::chrono::steady_clock::time_point start_;
};

}  // namespace taut
