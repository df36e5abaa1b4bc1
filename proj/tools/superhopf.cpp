#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include <superhopf/superhopf.hpp>

using namespace superhopf;

namespace
{

bool is_file_argument(const std::string &s)
{
    return s.find('/') != std::string::npos || (s.size() > 5 && s.substr(s.size() - 5) == ".json");
}

} // namespace

int main(int argc, char **argv)
{
    CLI::App app{"Exact verifier for Hopf superalgebras and affine supergroups"};
    app.require_subcommand(1);

    auto *verify = app.add_subcommand("verify", "Run a builtin scenario or a scenario file");
    std::string target;
    std::optional<unsigned> degree;
    std::optional<std::uint64_t> seed;
    std::string report_path;
    bool json_out = false;
    std::vector<std::string> assignments;
    std::optional<long> m, n, s, t;
    verify->add_option("scenario", target, "Builtin name or path to a .json scenario")->required();
    verify->add_option("--degree", degree, "Degree bound for checks without their own");
    verify->add_option("--seed", seed, "Seed for randomized checks");
    verify->add_option("--report", report_path, "Write one JSON record per check to this file");
    verify->add_flag("--json", json_out, "Print JSON records instead of text");
    verify->add_option("--param", assignments, "Scenario parameter k=v")->take_all();
    verify->add_option("--m", m, "Shortcut for --param m=...");
    verify->add_option("--n", n, "Shortcut for --param n=...");
    verify->add_option("--s", s, "Shortcut for --param s=...");
    verify->add_option("--t", t, "Shortcut for --param t=...");

    auto *list = app.add_subcommand("list", "List builtin scenarios");
    bool list_json = false;
    list->add_flag("--json", list_json, "Machine-readable catalog");

    CLI11_PARSE(app, argc, argv);

    if (list->parsed()) {
        if (list_json) {
            std::cout << catalog_json().dump(2) << '\n';
        } else {
            for (const auto &e : catalog()) std::cout << e.name << "  " << e.topic << '\n';
        }
        return 0;
    }

    Report report;
    try {
        std::optional<Scenario> scenario;
        if (is_file_argument(target)) {
            if (!assignments.empty() || m || n || s || t) throw ResolutionError("parameters apply to builtin scenarios only");
            scenario = Scenario::load(target);
        } else {
            Params params;
            for (const auto &a : assignments) params.set_assignment(a);
            const auto *entry = find_builtin(target);
            auto accepts = [&](const std::string &k) {
                return entry && std::find(entry->params.begin(), entry->params.end(), k) != entry->params.end();
            };
            if (m) params.set("m", std::to_string(*m));
            if (n) params.set("n", std::to_string(*n));
            if (s) params.set("s", std::to_string(*s));
            if (t) params.set("t", std::to_string(*t));
            if (degree && accepts("degree")) params.set("degree", std::to_string(*degree));
            if (seed && accepts("seed")) params.set("seed", std::to_string(*seed));
            scenario = builtin_scenario(target, params);
        }
        if (degree && *degree == 0) throw ResolutionError("degree bounds must be positive");
        report = scenario->run(degree, seed);
    } catch (const ScenarioError &e) {
        std::cerr << "error: " << target << ": " << e.what() << '\n';
        return 2;
    } catch (const std::exception &e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    }

    if (json_out) {
        report.write_jsonl(std::cout);
    } else {
        report.write_text(std::cout);
    }
    if (!report_path.empty()) {
        std::ofstream out(report_path);
        if (!out) {
            std::cerr << "error: cannot write report '" << report_path << "'\n";
            return 2;
        }
        report.write_jsonl(out);
    }
    return report.failed() ? 1 : 0;
}
