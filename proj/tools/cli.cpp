#include "cli.hpp"

#include <array>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <iostream>
#include <map>
#include <sstream>

#include "CLI11.hpp"

#include "plumbline/errors.hpp"

namespace plumbline::cli {

using nlohmann::json;

bool Report::all_pass() const { return failed() == 0; }

std::size_t Report::failed() const
{
    std::size_t n = 0;
    for (const auto& c : checks_)
        if (!c.pass) ++n;
    return n;
}

json Report::to_json() const
{
    json checks = json::array();
    for (const auto& c : checks_) {
        json entry = {{"name", c.name}, {"pass", c.pass}};
        if (!c.detail.is_null()) entry["detail"] = c.detail;
        checks.push_back(std::move(entry));
    }
    return {{"command", command_},
            {"version", kVersion},
            {"config", config_},
            {"result", result_},
            {"checks", std::move(checks)},
            {"summary", {{"checks", checks_.size()}, {"passed", checks_.size() - failed()}, {"failed", failed()}}}};
}

namespace {

double tolerance_from_env()
{
    const char* text = std::getenv("PLUMBLINE_TOL");
    if (text == nullptr || *text == '\0') return kDefaultTolerance;
    char* end = nullptr;
    const double tol = std::strtod(text, &end);
    if (end == text || *end != '\0' || !(tol > 0.0)) throw UsageError(std::string("invalid PLUMBLINE_TOL: ") + text);
    return tol;
}

} // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err)
{
    RunConfig cfg;
    CLI::App app{"plumbline: alkanes, plumbed period matrices and asymptotic period relations"};
    app.name("plumbline");
    app.require_subcommand(1);
    app.set_version_flag("--version", kVersion);

    bool numeric = false;
    auto add_seed = [&](CLI::App* sub) { sub->add_option("--seed", cfg.seed, "Seed for every random draw"); };
    auto add_mode = [&](CLI::App* sub) {
        auto* ex = sub->add_flag("--exact", cfg.exact, "Exact Gaussian-rational arithmetic, 2 pi i factored out");
        auto* nu = sub->add_flag("--numeric", numeric, "Double-precision complex arithmetic (default)");
        ex->excludes(nu);
    };
    auto add_out = [&](CLI::App* sub) { sub->add_option("--out", cfg.out_path, "Write the JSON report here"); };

    std::map<CLI::App*, std::function<Report(const RunConfig&)>> handlers;
    auto leaf = [&](CLI::App* parent, const std::string& name, const std::string& help,
                    std::function<Report(const RunConfig&)> fn) {
        CLI::App* sub = parent->add_subcommand(name, help);
        handlers[sub] = std::move(fn);
        add_out(sub);
        return sub;
    };

    CLI::App* alkanes = app.add_subcommand("alkanes", "Enumerate alkanes (trees of max degree 4)");
    alkanes->require_subcommand(1);
    auto* a_enum = leaf(alkanes, "enum", "List the alkanes of one genus", alkanes_enum);
    a_enum->add_option("--genus", cfg.genus, "Number of carbons")->required();
    auto* a_count = leaf(alkanes, "count", "Count alkanes for genus 1..max", alkanes_count);
    a_count->add_option("--max", cfg.max_genus, "Largest genus")->required();

    CLI::App* periods = app.add_subcommand("periods", "First-order period matrices of plumbed curves");
    periods->require_subcommand(1);
    using Handler = Report (*)(const RunConfig&);
    const std::array<std::pair<const char*, Handler>, 3> period_commands = {
        {{"pair", periods_pair}, {"star", periods_star}, {"tree", periods_tree}}};
    for (const auto& [name, fn] : period_commands) {
        auto* sub = leaf(periods, name, std::string("Assemble the ") + name + " configuration", fn);
        sub->add_option("--config", cfg.config_path, "Configuration JSON")->required();
        sub->add_option("--order", cfg.order, "Jet truncation order");
        add_mode(sub);
    }

    CLI::App* relations = app.add_subcommand("relations", "Octic asymptotic period relations");
    relations->require_subcommand(1);
    auto* r_verify = leaf(relations, "verify", "Check octic vanishing on the cone and modulo T^9", relations_verify);
    r_verify->add_option("--genus", cfg.genus, "Genus (>= 4)")->required();
    r_verify->add_option("--trials", cfg.trials, "Random configurations per check");
    r_verify->add_option("--order", cfg.order, "Jet truncation order (>= 17)");
    r_verify->add_flag("--inject-corrupt-octic", cfg.inject_corrupt_octic, "Swap in a wrong octic (negative control)");
    add_seed(r_verify);
    add_mode(r_verify);

    CLI::App* surfaces = app.add_subcommand("surfaces", "Surface period strata and E_Gamma");
    surfaces->require_subcommand(1);
    auto* s_dims = leaf(surfaces, "dims", "Stratum dimensions for every alkane of genus H", surfaces_dims);
    s_dims->add_option("--genus", cfg.genus, "h")->required();
    auto* s_eg = leaf(surfaces, "egamma", "Span dimension of the Pi_e", surfaces_egamma);
    s_eg->add_option("--genus", cfg.genus, "h")->required();
    s_eg->add_option("--trials", cfg.trials, "Random models per alkane");
    add_seed(s_eg);
    add_mode(s_eg);

    auto* st = leaf(&app, "selftest", "Run every acceptance check at default sizes", selftest);
    add_seed(st);
    st->add_flag("--inject-corrupt-octic", cfg.inject_corrupt_octic, "Swap in a wrong octic (negative control)");

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        std::ostringstream help_out, help_err;
        const int code = app.exit(e, help_out, help_err);
        out << help_out.str();
        err << help_err.str();
        if (code != 0) {
            if (dynamic_cast<const CLI::CallForHelp*>(&e) == nullptr) err << app.help();
            return kExitUsage;
        }
        return kExitPass;
    }

    CLI::App* chosen = nullptr;
    std::string command;
    for (CLI::App* a = &app; a != nullptr;) {
        auto subs = a->get_subcommands();
        if (subs.empty()) break;
        a = subs.front();
        command += (command.empty() ? "" : " ") + a->get_name();
        chosen = a;
    }
    if (chosen == nullptr || !handlers.contains(chosen)) {
        err << app.help();
        return kExitUsage;
    }
    cfg.command = command;
    if (numeric) cfg.exact = false;

    try {
        cfg.tol = tolerance_from_env();
        Report report = handlers[chosen](cfg);
        const std::string text = report.to_json().dump(2) + "\n";
        if (cfg.out_path.empty()) {
            out << text;
        } else {
            std::ofstream f(cfg.out_path, std::ios::binary);
            if (!f) throw UsageError("cannot write " + cfg.out_path);
            f << text;
        }
        err << "plumbline " << command << ": " << report.checks().size() << " checks, " << report.failed()
            << " failed\n";
        return report.all_pass() ? kExitPass : kExitFail;
    } catch (const UsageError& e) {
        err << "plumbline: " << e.what() << "\n";
        return kExitUsage;
    } catch (const FormulaViolation& e) {
        err << "plumbline: internal identity failed: " << e.what() << "\n";
        return kExitFail;
    } catch (const Error& e) {
        err << "plumbline: invalid input: " << e.what() << "\n";
        return kExitUsage;
    } catch (const nlohmann::json::exception& e) {
        err << "plumbline: malformed JSON: " << e.what() << "\n";
        return kExitUsage;
    }
}

} // namespace plumbline::cli
