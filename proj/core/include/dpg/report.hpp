#pragma once

#include <chrono>
#include <stdexcept>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

namespace dpg {

/// Thrown when a verified identity fails. what() names the check.
class CheckFailure : public std::runtime_error {
public:
    CheckFailure(const std::string& check, std::string locus)
        : std::runtime_error(check + (locus.empty() ? "" : ": " + locus)), check_(check), locus_(std::move(locus)) {}
    const std::string& check() const { return check_; }
    const std::string& locus() const { return locus_; }

private:
    std::string check_;
    std::string locus_;
};

struct Check {
    std::string name;
    std::string anchor;
    bool pass = true;
    std::string locus;
    double seconds = 0;
};

/// Ordered list of named checks for one instance.
class Report {
public:
    explicit Report(std::string instance = {})
        : instance_(std::move(instance)), last_(std::chrono::steady_clock::now()) {}

    const std::string& instance() const { return instance_; }
    const std::vector<Check>& checks() const { return checks_; }
    bool passed() const;
    std::size_t failures() const;

    /// Appends a check; a zero duration is replaced by the time since the
    /// previous record.
    void record(Check c);
    void append(const Report& other);

    /// Runs a stage. A CheckFailure already recorded by verify() is not
    /// recorded twice; any other exception becomes a failed check named
    /// after the stage. Returns false when the stage failed.
    template <class Fn>
    bool run(const std::string& name, const std::string& anchor, Fn&& fn) {
        try {
            fn();
            return true;
        } catch (const CheckFailure& ex) {
            if (checks_.empty() || checks_.back().pass || checks_.back().name != ex.check()) {
                record(Check{ex.check(), anchor, false, ex.locus(), 0});
            }
        } catch (const std::exception& ex) {
            record(Check{name, anchor, false, ex.what(), 0});
        }
        return false;
    }

    /// Canonical body: instance, overall status and the checks without
    /// timings. Timings go under "timing" only when asked for.
    nlohmann::json to_json(bool with_timing = false) const;
    /// One "PASS name" / "FAIL name: locus" line per check.
    std::string summary() const;

private:
    std::string instance_;
    std::vector<Check> checks_;
    std::chrono::steady_clock::time_point last_;
};

/// Records the outcome on the log (if any) and throws CheckFailure when
/// the condition is false.
void verify(Report* log, const std::string& name, const std::string& anchor, bool ok, const std::string& locus = {});

}  // namespace dpg
