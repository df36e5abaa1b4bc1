#include <gtest/gtest.h>

#include <array>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <sys/wait.h>

#include <superhopf/catalog.hpp>

using namespace superhopf;

namespace
{

struct Run {
    int status = -1;
    std::string out;
};

Run run_cli(const std::string &args)
{
    Run r;
    const std::string cmd = std::string(SUPERHOPF_CLI_PATH) + " " + args + " 2>&1";
    FILE *pipe = popen(cmd.c_str(), "r");
    if (!pipe) return r;
    std::array<char, 4096> buf{};
    while (std::fgets(buf.data(), buf.size(), pipe)) r.out += buf.data();
    const int raw = pclose(pipe);
    r.status = WIFEXITED(raw) ? WEXITSTATUS(raw) : -1;
    return r;
}

std::string temp_path(const std::string &name)
{
    return (std::filesystem::temp_directory_path() / ("superhopf_test_" + name)).string();
}

std::string write_temp(const std::string &name, const std::string &text)
{
    const auto path = temp_path(name);
    std::ofstream(path) << text;
    return path;
}

std::string read_file(const std::string &path)
{
    std::ifstream in(path);
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

std::string without_timing(const std::string &jsonl)
{
    std::string out;
    std::istringstream in(jsonl);
    for (std::string line; std::getline(in, line);) {
        auto j = nlohmann::ordered_json::parse(line);
        j.erase("elapsed_ms");
        out += j.dump() + "\n";
    }
    return out;
}

} // namespace

TEST(Catalog, ListsEveryBuiltin)
{
    const auto names = builtin_names();
    EXPECT_GE(names.size(), 14U);
    for (const char *n : {"gl-hopf-axioms", "antipode-involution", "section10-counterexample", "product-quotient-criterion",
                          "normality-suite", "normalizer-borel", "levi-psi", "levi-invariants", "lie-gl11", "d-ad-check",
                          "pbw-pairing", "dist-dimensions", "xi-roundtrip", "semidirect-trivial"}) {
        EXPECT_NE(find_builtin(n), nullptr) << n;
    }
    EXPECT_EQ(catalog_json().size(), names.size());
}

TEST(Catalog, EveryBuiltinPassesWithDefaults)
{
    for (const auto &name : builtin_names()) {
        const auto rep = builtin_scenario(name, Params{}).run();
        EXPECT_FALSE(rep.failed()) << name;
        EXPECT_EQ(rep.count(Status::not_certified), 0U) << name;
    }
}

TEST(Catalog, SuggestsClosestName)
{
    EXPECT_EQ(edit_distance("kitten", "sitting"), 3U);
    EXPECT_EQ(closest_name("normality-suit", builtin_names()), "normality-suite");
    EXPECT_EQ(closest_name("lie-gl12", builtin_names()), "lie-gl11");
    EXPECT_FALSE(closest_name("completely-unrelated-name", builtin_names()));
    try {
        builtin_scenario("levi-pis", Params{});
        FAIL() << "expected ResolutionError";
    } catch (const ResolutionError &e) {
        EXPECT_NE(std::string(e.what()).find("did you mean 'levi-psi'"), std::string::npos) << e.what();
    }
}

TEST(Catalog, RejectsBadParameters)
{
    Params p;
    EXPECT_THROW(p.set_assignment("m"), ResolutionError);
    EXPECT_THROW(p.set_assignment("=1"), ResolutionError);
    p.set_assignment("m=x");
    EXPECT_THROW(builtin_scenario("gl-hopf-axioms", p), ResolutionError);
    Params q;
    q.set("degree", "0");
    EXPECT_THROW(builtin_scenario("gl-hopf-axioms", q), ResolutionError);
    Params r;
    r.set("m", "1");
    EXPECT_THROW(builtin_scenario("lie-gl11", r), ResolutionError);
}

TEST(ScenarioParse, ReportsLineAndColumn)
{
    // The stray '}' is the 27th character of line 3.
    const std::string text = "{\n  \"checks\": [\n    {\"op\": \"hopf_axioms\", }\n  ]\n}\n";
    try {
        Scenario::parse(text);
        FAIL() << "expected ScenarioError";
    } catch (const ScenarioError &e) {
        EXPECT_EQ(e.line(), 3U);
        EXPECT_EQ(e.column(), 27U);
    }
    try {
        Scenario::parse("[1, 2]");
        FAIL() << "expected ScenarioError";
    } catch (const ScenarioError &e) {
        EXPECT_EQ(e.line(), 1U);
    }
}

TEST(ScenarioParse, ResolutionDiagnostics)
{
    auto message = [](const std::string &text) {
        try {
            Scenario::parse(text);
        } catch (const ResolutionError &e) {
            return std::string(e.what());
        }
        return std::string("no error");
    };
    const std::string gl = R"("groups": {"GL11": {"gl": [1, 1]}})";
    EXPECT_NE(message("{" + gl + R"(, "checks": [{"op": "hopf_axioms", "group": "GL12"}]})").find("unknown group 'GL12' (did you mean 'GL11'?)"),
              std::string::npos);
    EXPECT_NE(message("{" + gl + R"(, "checks": [{"op": "hopf_axiom", "group": "GL11"}]})").find("did you mean 'hopf_axioms'"),
              std::string::npos);
    EXPECT_NE(message("{" + gl + R"(, "checks": [{"op": "hopf_axioms"}]})").find("needs field 'group'"), std::string::npos);
    EXPECT_NE(message("{" + gl + R"(, "checks": [{"op": "hopf_axioms", "group": "GL11", "degree": 0}]})").find("positive"),
              std::string::npos);
    EXPECT_NE(message(R"({"degree": 0, "checks": []})").find("positive"), std::string::npos);
    EXPECT_NE(message("{" + gl + R"(, "chekcs": []})").find("did you mean 'checks'"), std::string::npos);
    EXPECT_NE(message("{" + gl + R"(, "subgroups": {"H": {"group": "GL11", "ideal": ["a11 - 2"]}}, "checks": []})")
                  .find("not a Hopf superideal"),
              std::string::npos);
    EXPECT_NE(message(R"({"groups": {"A": {"product": ["A", "A"]}}, "checks": []})").find("in terms of itself"), std::string::npos);
    EXPECT_NE(message(R"({"groups": {"G": {"gl": [1, 1]}}, "subgroups": {"H": {"group": "G", "ideal": ["a12 +"]}}, "checks": []})")
                  .find("subgroups.H.ideal[0]"),
              std::string::npos);
}

TEST(ScenarioRun, ExpectationsDecideStatus)
{
    const std::string text = R"({
      "groups": {"Gm": {"builtin": "multiplicative"}},
      "subgroups": {"mu2": {"group": "Gm", "ideal": ["u^2 - 1"]}},
      "checks": [
        {"op": "invariant_subalgebra", "subgroup": "mu2", "expect": ["1", "u^2", "u^4"]},
        {"op": "invariant_subalgebra", "subgroup": "mu2", "expect": ["1", "u^2"]},
        {"op": "is_normal", "subgroup": "mu2", "expect": "not-certified"},
        {"op": "is_normal", "subgroup": "mu2"}
      ]})";
    const auto rep = Scenario::parse(text, "expectations").run();
    ASSERT_EQ(rep.records.size(), 4U);
    EXPECT_EQ(rep.records[0].status, Status::pass);
    EXPECT_EQ(rep.records[1].status, Status::fail);
    EXPECT_EQ(rep.records[2].status, Status::fail);
    EXPECT_EQ(rep.records[3].status, Status::pass);
    EXPECT_EQ(rep.records[0].bound, 4U);
    EXPECT_EQ(rep.records[0].scenario, "expectations");
    EXPECT_TRUE(rep.failed());
}

TEST(ScenarioRun, UncertifiedWithoutExpectation)
{
    const std::string text = R"({
      "groups": {"GL2": {"gl": [2, 0]}},
      "subgroups": {"B": {"group": "GL2", "ideal": ["a21"]}},
      "checks": [{"op": "is_normal", "subgroup": "B", "degree": 3}]})";
    const auto rep = Scenario::parse(text).run();
    EXPECT_EQ(rep.records[0].status, Status::not_certified);
    EXPECT_EQ(rep.records[0].bound, 3U);
    EXPECT_FALSE(rep.failed());
}

TEST(ScenarioRun, CorruptedComultiplicationFails)
{
    const std::string text = R"({
      "groups": {"bad": {"odd": ["t"], "comultiplication": ["t@2"], "counit": ["0"], "antipode": ["-t"]}},
      "checks": [{"op": "hopf_axioms", "group": "bad"}]})";
    const auto rep = Scenario::parse(text).run();
    EXPECT_EQ(rep.records[0].status, Status::fail);
    EXPECT_EQ(rep.records[0].witness.rfind("counit", 0), 0U) << rep.records[0].witness;
}

TEST(ScenarioRun, DeterministicRecords)
{
    const auto s = builtin_scenario("normality-suite", Params{});
    std::ostringstream a, b;
    s.run().write_jsonl(a, false);
    s.run().write_jsonl(b, false);
    EXPECT_EQ(a.str(), b.str());
    const auto first = nlohmann::ordered_json::parse(a.str().substr(0, a.str().find('\n')));
    std::vector<std::string> keys;
    for (const auto &[k, v] : first.items()) keys.push_back(k);
    EXPECT_EQ(keys, (std::vector<std::string>{"scenario", "check", "status", "bound", "witness"}));
}

TEST(ScenarioRun, SeedSelectsSamples)
{
    const auto s = builtin_scenario("kernel-laws", Params{});
    const auto a = s.run(std::nullopt, 7), b = s.run(std::nullopt, 7), c = s.run(std::nullopt, 8);
    EXPECT_EQ(a.records[0].witness, b.records[0].witness);
    EXPECT_NE(a.records[0].witness, c.records[0].witness);
    EXPECT_EQ(a.records[0].status, Status::pass);
}

TEST(ScenarioFiles, ExamplesPass)
{
    std::size_t count = 0;
    for (const auto &entry : std::filesystem::directory_iterator(SUPERHOPF_SCENARIO_DIR)) {
        if (entry.path().extension() != ".json") continue;
        ++count;
        const auto rep = Scenario::load(entry.path().string()).run();
        EXPECT_FALSE(rep.failed()) << entry.path();
    }
    EXPECT_GE(count, 3U);
}

TEST(Binary, ListAndJsonCatalog)
{
    const auto text = run_cli("list");
    EXPECT_EQ(text.status, 0);
    std::size_t lines = 0;
    for (char ch : text.out) lines += ch == '\n' ? 1 : 0;
    EXPECT_GE(lines, 14U);
    const auto json = run_cli("list --json");
    EXPECT_EQ(json.status, 0);
    const auto j = nlohmann::json::parse(json.out);
    ASSERT_TRUE(j.is_array());
    EXPECT_GE(j.size(), 14U);
    EXPECT_TRUE(j[0].contains("name"));
}

TEST(Binary, VerifyExamples)
{
    const auto gl = run_cli("verify gl-hopf-axioms --m 1 --n 1");
    EXPECT_EQ(gl.status, 0) << gl.out;
    EXPECT_NE(gl.out.find("1 pass, 0 fail"), std::string::npos) << gl.out;

    const auto s10 = run_cli("verify section10-counterexample --degree 6");
    EXPECT_EQ(s10.status, 0) << s10.out;
    EXPECT_NE(s10.out.find("v1^5*v2"), std::string::npos) << s10.out;

    const auto psi = run_cli("verify levi-psi --m 1 --n 1 --s 1 --t 0");
    EXPECT_EQ(psi.status, 0) << psi.out;
    EXPECT_NE(psi.out.find("[pass]"), std::string::npos);

    const auto param = run_cli("verify antipode-involution --param m=2 --param n=1");
    EXPECT_EQ(param.status, 0) << param.out;
}

TEST(Binary, ExitCodes)
{
    const auto unknown = run_cli("verify normality-suit");
    EXPECT_EQ(unknown.status, 2);
    EXPECT_NE(unknown.out.find("did you mean 'normality-suite'"), std::string::npos) << unknown.out;

    const auto bad_json = run_cli("verify " + write_temp("bad.json", "{\n  \"checks\": [,]\n}\n"));
    EXPECT_EQ(bad_json.status, 2);
    EXPECT_NE(bad_json.out.find("line 2, column"), std::string::npos) << bad_json.out;

    const auto failing = run_cli("verify " + write_temp("fail.json", R"({
      "groups": {"bad": {"odd": ["t"], "comultiplication": ["t@2"], "counit": ["0"], "antipode": ["-t"]}},
      "checks": [{"op": "hopf_axioms", "group": "bad"}, {"op": "antipode_involution", "group": "bad"}]})"));
    EXPECT_EQ(failing.status, 1) << failing.out;
    EXPECT_NE(failing.out.find("[fail]"), std::string::npos);

    const auto uncertified = run_cli("verify " + write_temp("uncertified.json", R"({
      "groups": {"GL2": {"gl": [2, 0]}},
      "subgroups": {"B": {"group": "GL2", "ideal": ["a21"]}},
      "checks": [{"op": "is_normal", "subgroup": "B", "degree": 3}]})"));
    EXPECT_EQ(uncertified.status, 0) << uncertified.out;
    EXPECT_NE(uncertified.out.find("[not-certified]"), std::string::npos);

    EXPECT_EQ(run_cli("verify gl-hopf-axioms --degree 0").status, 2);
    EXPECT_NE(run_cli("frobnicate").status, 0);
}

TEST(Binary, ReportFileIsDeterministic)
{
    const auto p1 = temp_path("r1.jsonl"), p2 = temp_path("r2.jsonl");
    ASSERT_EQ(run_cli("verify normality-suite --report " + p1).status, 0);
    ASSERT_EQ(run_cli("verify normality-suite --report " + p2).status, 0);
    const auto a = read_file(p1), b = read_file(p2);
    ASSERT_FALSE(a.empty());
    EXPECT_EQ(without_timing(a), without_timing(b));
    std::istringstream in(a);
    std::size_t records = 0;
    for (std::string line; std::getline(in, line); ++records) {
        const auto j = nlohmann::json::parse(line);
        for (const char *k : {"scenario", "check", "status", "bound", "witness", "elapsed_ms"}) EXPECT_TRUE(j.contains(k)) << k;
    }
    EXPECT_EQ(records, 5U);

    const auto json = run_cli("verify kernel-laws --seed 3 --json");
    EXPECT_EQ(json.status, 0);
    EXPECT_EQ(nlohmann::json::parse(json.out)["witness"], "200 triples, seed 3");
}
