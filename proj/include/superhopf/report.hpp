#ifndef SUPERHOPF_REPORT_HPP
#define SUPERHOPF_REPORT_HPP

#include <chrono>
#include <cstdint>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include <json.hpp>

namespace superhopf
{

enum class Status { pass, fail, not_certified };

inline const char *status_name(Status s)
{
    switch (s) {
    case Status::pass:
        return "pass";
    case Status::fail:
        return "fail";
    case Status::not_certified:
        return "not-certified";
    }
    return "fail";
}

/// One machine-readable record per check.
struct CheckRecord {
    std::string scenario;
    std::string check;
    Status status = Status::fail;
    std::optional<unsigned> bound;
    std::string witness;
    double elapsed_ms = 0;
};

inline nlohmann::ordered_json to_json(const CheckRecord &r, bool with_timing = true)
{
    nlohmann::ordered_json j;
    j["scenario"] = r.scenario;
    j["check"] = r.check;
    j["status"] = status_name(r.status);
    j["bound"] = r.bound ? nlohmann::ordered_json(*r.bound) : nlohmann::ordered_json(nullptr);
    j["witness"] = r.witness;
    if (with_timing) j["elapsed_ms"] = r.elapsed_ms;
    return j;
}

/// Records of one scenario run, in declaration order.
struct Report {
    std::string scenario;
    std::vector<CheckRecord> records;

    bool failed() const
    {
        for (const auto &r : records) {
            if (r.status == Status::fail) return true;
        }
        return false;
    }

    std::size_t count(Status s) const
    {
        std::size_t n = 0;
        for (const auto &r : records) n += r.status == s ? 1 : 0;
        return n;
    }

    void write_jsonl(std::ostream &out, bool with_timing = true) const
    {
        for (const auto &r : records) out << to_json(r, with_timing).dump() << '\n';
    }

    void write_text(std::ostream &out) const
    {
        for (const auto &r : records) {
            out << '[' << status_name(r.status) << "] " << r.check;
            if (r.bound) out << " (bound " << *r.bound << ')';
            if (!r.witness.empty()) out << ": " << r.witness;
            out << '\n';
        }
        out << scenario << ": " << count(Status::pass) << " pass, " << count(Status::fail) << " fail, "
            << count(Status::not_certified) << " not-certified\n";
    }
};

/// Times `body`, which fills in status, bound and witness.
template <class F>
CheckRecord timed_check(const std::string &scenario, const std::string &check, F body)
{
    CheckRecord r{scenario, check, Status::fail, std::nullopt, {}, 0};
    const auto start = std::chrono::steady_clock::now();
    try {
        body(r);
    } catch (const std::exception &e) {
        r.status = Status::fail;
        r.witness = std::string("error: ") + e.what();
    }
    r.elapsed_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
    return r;
}

} // namespace superhopf

#endif
