#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "plumbline/field.hpp"

namespace plumbline::cli {

inline constexpr const char* kVersion = "0.3.0";
inline constexpr std::uint64_t kDefaultSeed = 20240601;

enum ExitCode : int { kExitPass = 0, kExitFail = 1, kExitUsage = 2 };

struct RunConfig {
    std::string command;
    int genus = 4;
    int max_genus = 12;
    int order = -1; // -1: command default
    int trials = 5;
    std::uint64_t seed = kDefaultSeed;
    bool exact = false;
    std::string config_path;
    std::string out_path;
    double tol = kDefaultTolerance;
    bool inject_corrupt_octic = false;
};

struct Check {
    std::string name;
    bool pass = false;
    nlohmann::json detail;
};

/// Command echo, per-check results, summary counts and version. Any failed
/// check makes the process exit with 1.
class Report {
public:
    explicit Report(std::string command) : command_(std::move(command)) {}

    void add(std::string name, bool pass, nlohmann::json detail = nullptr)
    {
        checks_.push_back({std::move(name), pass, std::move(detail)});
    }
    void set_result(nlohmann::json r) { result_ = std::move(r); }
    void set_config(nlohmann::json c) { config_ = std::move(c); }

    bool all_pass() const;
    std::size_t failed() const;
    const std::vector<Check>& checks() const { return checks_; }
    nlohmann::json to_json() const;

private:
    std::string command_;
    nlohmann::json config_ = nlohmann::json::object();
    nlohmann::json result_ = nullptr;
    std::vector<Check> checks_;
};

/// Raised for bad flags, unreadable inputs and invalid configurations.
class UsageError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

Report alkanes_enum(const RunConfig& cfg);
Report alkanes_count(const RunConfig& cfg);
Report periods_pair(const RunConfig& cfg);
Report periods_star(const RunConfig& cfg);
Report periods_tree(const RunConfig& cfg);
Report relations_verify(const RunConfig& cfg);
Report surfaces_dims(const RunConfig& cfg);
Report surfaces_egamma(const RunConfig& cfg);
Report selftest(const RunConfig& cfg);

/// Parses argv (without the program name), runs the command and writes the
/// JSON report to `out` (or --out). Returns 0 pass, 1 failed check, 2 usage.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace plumbline::cli
