#pragma once

#include <string>
#include <utility>
#include <vector>

namespace chentype {

/// NUMERIC_ONLY_PASS marks claims settled at sample points after the
/// symbolic route ran out of budget; ERROR captures a claim that threw.
enum class Verdict { Pass, Mismatch, NumericOnlyPass, Error };

std::string to_string(Verdict v);

/// Outcome of checking one displayed formula against the engine.
struct ClaimReport {
    std::string claim_id;
    std::string surface;
    /// Short quotation locating the display being checked.
    std::string anchor;
    std::string expected;
    std::string computed;
    Verdict verdict = Verdict::Pass;
    /// The display is known to disagree with the engine; a mismatch here is
    /// reported but does not fail a non-strict run.
    bool known_discrepancy = false;
    /// Ordered notes: differing terms, engine-derived coefficients, orders.
    std::vector<std::pair<std::string, std::string>> details;
    std::vector<std::pair<std::string, double>> residuals;

    bool passed() const { return verdict == Verdict::Pass || verdict == Verdict::NumericOnlyPass; }
    void note(std::string key, std::string value) { details.emplace_back(std::move(key), std::move(value)); }
    void residual(std::string key, double value) { residuals.emplace_back(std::move(key), value); }
    /// Downgrades the verdict to Mismatch and records why.
    void fail(std::string key, std::string why);
};

} // namespace chentype
