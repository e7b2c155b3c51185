#include "dpg/report.hpp"

#include <sstream>

namespace dpg {

bool Report::passed() const { return failures() == 0; }

std::size_t Report::failures() const {
    std::size_t n = 0;
    for (const auto& c : checks_) n += c.pass ? 0 : 1;
    return n;
}

void Report::record(Check c) {
    auto now = std::chrono::steady_clock::now();
    if (c.seconds == 0) c.seconds = std::chrono::duration<double>(now - last_).count();
    last_ = now;
    checks_.push_back(std::move(c));
}

void Report::append(const Report& other) {
    for (const auto& c : other.checks_) checks_.push_back(c);
}

nlohmann::json Report::to_json(bool with_timing) const {
    nlohmann::json j;
    j["instance"] = instance_;
    j["status"] = passed() ? "pass" : "fail";
    nlohmann::json arr = nlohmann::json::array();
    for (const auto& c : checks_) {
        nlohmann::json e;
        e["name"] = c.name;
        e["anchor"] = c.anchor;
        e["status"] = c.pass ? "pass" : "fail";
        if (!c.locus.empty()) e["locus"] = c.locus;
        arr.push_back(std::move(e));
    }
    j["checks"] = std::move(arr);
    if (with_timing) {
        nlohmann::json t = nlohmann::json::array();
        for (const auto& c : checks_) t.push_back({{"name", c.name}, {"seconds", c.seconds}});
        j["timing"] = std::move(t);
    }
    return j;
}

std::string Report::summary() const {
    std::ostringstream os;
    for (const auto& c : checks_) {
        os << (c.pass ? "PASS " : "FAIL ") << c.name;
        if (!c.pass) os << ": " << c.locus;
        os << "\n";
    }
    return os.str();
}

void verify(Report* log, const std::string& name, const std::string& anchor, bool ok, const std::string& locus) {
    if (log) log->record(Check{name, anchor, ok, ok ? std::string() : locus, 0});
    if (!ok) throw CheckFailure(name, locus);
}

}  // namespace dpg
