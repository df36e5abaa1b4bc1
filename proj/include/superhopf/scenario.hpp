#ifndef SUPERHOPF_SCENARIO_HPP
#define SUPERHOPF_SCENARIO_HPP

#include <algorithm>
#include <fstream>
#include <functional>
#include <map>
#include <set>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

#include <superhopf/distlie.hpp>
#include <superhopf/random.hpp>
#include <superhopf/report.hpp>

namespace superhopf
{

/// Malformed scenario text, with a 1-based position.
class ScenarioError : public std::runtime_error
{
public:
    ScenarioError(const std::string &what, std::size_t line, std::size_t column)
        : std::runtime_error(what + " (line " + std::to_string(line) + ", column " + std::to_string(column) + ")"),
          m_line(line), m_column(column)
    {
    }

    std::size_t line() const { return m_line; }
    std::size_t column() const { return m_column; }

private:
    std::size_t m_line;
    std::size_t m_column;
};

/// A name that does not resolve, or a declaration that cannot be built.
class ResolutionError : public std::runtime_error
{
public:
    using std::runtime_error::runtime_error;
};

/// Levenshtein distance.
inline std::size_t edit_distance(const std::string &a, const std::string &b)
{
    std::vector<std::size_t> row(b.size() + 1);
    for (std::size_t j = 0; j <= b.size(); ++j) row[j] = j;
    for (std::size_t i = 1; i <= a.size(); ++i) {
        std::size_t diag = row[0];
        row[0] = i;
        for (std::size_t j = 1; j <= b.size(); ++j) {
            const std::size_t up = row[j];
            row[j] = std::min({row[j] + 1, row[j - 1] + 1, diag + (a[i - 1] == b[j - 1] ? 0 : 1)});
            diag = up;
        }
    }
    return row[b.size()];
}

/// Closest candidate within distance max(2, |name| / 3), if any.
inline std::optional<std::string> closest_name(const std::string &name, const std::vector<std::string> &candidates)
{
    std::optional<std::string> best;
    std::size_t best_d = std::max<std::size_t>(2, name.size() / 3) + 1;
    for (const auto &c : candidates) {
        const auto d = edit_distance(name, c);
        if (d < best_d) {
            best_d = d;
            best = c;
        }
    }
    return best;
}

template <class Map>
std::vector<std::string> keys_of(const Map &m)
{
    std::vector<std::string> out;
    for (const auto &kv : m) out.push_back(kv.first);
    return out;
}

inline std::string unknown_name(const std::string &kind, const std::string &name, const std::vector<std::string> &known)
{
    std::string msg = "unknown " + kind + " '" + name + "'";
    if (auto s = closest_name(name, known)) msg += " (did you mean '" + *s + "'?)";
    return msg;
}

namespace detail
{

inline std::pair<std::size_t, std::size_t> line_column(const std::string &text, std::size_t byte)
{
    std::size_t line = 1, column = 1;
    for (std::size_t i = 0; i + 1 < byte && i < text.size(); ++i) {
        if (text[i] == '\n') {
            ++line;
            column = 1;
        } else {
            ++column;
        }
    }
    return {line, column};
}

inline const nlohmann::json &field(const nlohmann::json &j, const std::string &key)
{
    static const nlohmann::json null;
    if (!j.is_object()) return null;
    auto it = j.find(key);
    return it == j.end() ? null : *it;
}

inline std::vector<std::string> string_list(const nlohmann::json &j, const std::string &where)
{
    if (j.is_null()) return {};
    if (!j.is_array()) throw ResolutionError(where + ": expected a list of strings");
    std::vector<std::string> out;
    for (const auto &x : j) {
        if (!x.is_string()) throw ResolutionError(where + ": expected a list of strings");
        out.push_back(x.get<std::string>());
    }
    return out;
}

inline std::vector<LocalizedElement> parse_list(const AlgebraPtr &alg, const std::vector<std::string> &xs,
                                                const std::string &where)
{
    std::vector<LocalizedElement> out;
    for (std::size_t i = 0; i < xs.size(); ++i) {
        try {
            out.push_back(parse_element(alg, xs[i]));
        } catch (const std::exception &e) {
            throw ResolutionError(where + "[" + std::to_string(i) + "]: " + e.what());
        }
    }
    return out;
}

inline std::string joined(const std::vector<LocalizedElement> &xs)
{
    std::vector<std::string> s;
    for (const auto &x : xs) s.push_back(to_string(x));
    std::sort(s.begin(), s.end());
    std::string out = "{";
    for (std::size_t i = 0; i < s.size(); ++i) out += (i ? ", " : "") + s[i];
    return out + "}";
}

/// Σ c_i names[i] as "c*n + ...", with unit coefficients elided.
inline std::string combination(const std::vector<Rational> &v, const std::vector<std::string> &names)
{
    std::string out;
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (is_zero(v[i])) continue;
        Rational c = v[i];
        const bool neg = c < 0;
        if (neg) c = -c;
        out += out.empty() ? (neg ? "-" : "") : (neg ? " - " : " + ");
        if (c != 1) out += c.get_str() + "*";
        out += names[i];
    }
    return out.empty() ? "0" : out;
}

} // namespace detail

/// Declarations and checks of a scenario file, resolved.
class Scenario
{
public:
    static Scenario parse(const std::string &text, const std::string &fallback_name = "scenario")
    {
        nlohmann::json j;
        try {
            j = nlohmann::json::parse(text);
        } catch (const nlohmann::json::parse_error &e) {
            const auto [line, column] = detail::line_column(text, e.byte);
            std::string msg = e.what();
            if (auto p = msg.find("syntax error"); p != std::string::npos) msg = msg.substr(p);
            throw ScenarioError(msg, line, column);
        }
        if (!j.is_object()) throw ScenarioError("scenario must be a JSON object", 1, 1);
        Scenario s;
        s.m_name = j.value("name", fallback_name);
        s.m_degree = j.value("degree", 4U);
        if (s.m_degree == 0) throw ResolutionError("degree bounds must be positive");
        s.m_doc = j;
        for (const char *section : {"groups", "subgroups", "morphisms", "actions"}) {
            if (j.contains(section) && !j[section].is_object()) {
                throw ResolutionError(std::string(section) + ": expected an object");
            }
        }
        const std::set<std::string> known{"name", "degree", "description", "groups", "subgroups", "morphisms", "actions", "checks"};
        for (const auto &[k, v] : j.items()) {
            if (!known.count(k)) {
                throw ResolutionError(unknown_name("section", k, std::vector<std::string>(known.begin(), known.end())));
            }
        }
        if (j.contains("groups")) {
            for (const auto &[k, v] : detail::field(j, "groups").items()) s.group(k);
        }
        if (j.contains("subgroups")) {
            for (const auto &[k, v] : detail::field(j, "subgroups").items()) s.subgroup(k);
        }
        if (j.contains("morphisms")) {
            for (const auto &[k, v] : detail::field(j, "morphisms").items()) s.morphism(k);
        }
        if (j.contains("actions")) {
            for (const auto &[k, v] : detail::field(j, "actions").items()) s.action(k);
        }
        if (!j.contains("checks") || !detail::field(j, "checks").is_array()) throw ResolutionError("scenario has no 'checks' list");
        for (std::size_t i = 0; i < detail::field(j, "checks").size(); ++i) s.validate_check(detail::field(j, "checks")[i], i);
        return s;
    }

    static Scenario load(const std::string &path)
    {
        std::ifstream in(path);
        if (!in) throw ResolutionError("cannot open scenario file '" + path + "'");
        std::stringstream ss;
        ss << in.rdbuf();
        auto stem = path.substr(path.find_last_of('/') + 1);
        if (auto dot = stem.rfind('.'); dot != std::string::npos) stem = stem.substr(0, dot);
        return parse(ss.str(), stem);
    }

    const std::string &name() const { return m_name; }
    unsigned degree() const { return m_degree; }
    std::size_t num_checks() const { return detail::field(m_doc, "checks").size(); }

    /// Runs the checks in declaration order; `degree` overrides the file's
    /// default bound where a check gives none, `seed` that of random checks.
    Report run(std::optional<unsigned> degree = std::nullopt, std::optional<std::uint64_t> seed = std::nullopt) const
    {
        Report rep{m_name, {}};
        const unsigned d0 = degree.value_or(m_degree);
        for (std::size_t i = 0; i < num_checks(); ++i) {
            rep.records.push_back(run_check(detail::field(m_doc, "checks")[i], i, d0, seed));
        }
        return rep;
    }

private:
    const nlohmann::json &declaration(const char *section, const std::string &name, const char *kind) const
    {
        if (!m_doc.contains(section) || !m_doc[section].contains(name)) {
            std::vector<std::string> known;
            if (m_doc.contains(section)) {
                for (const auto &[k, v] : m_doc[section].items()) known.push_back(k);
            }
            throw ResolutionError(unknown_name(kind, name, known));
        }
        return m_doc[section][name];
    }

    HopfPtr group(const std::string &name) const
    {
        if (auto it = m_groups.find(name); it != m_groups.end()) return it->second;
        if (m_building.count(name)) throw ResolutionError("group '" + name + "' is defined in terms of itself");
        m_building.insert(name);
        const auto &j = declaration("groups", name, "group");
        const std::string where = "groups." + name;
        HopfPtr g;
        if (j.contains("gl")) {
            const auto mn = detail::field(j, "gl");
            if (!mn.is_array() || mn.size() != 2) throw ResolutionError(where + ".gl: expected [m, n]");
            g = gl_supergroup(mn[0].get<std::size_t>(), mn[1].get<std::size_t>());
        } else if (j.contains("builtin")) {
            const auto b = detail::field(j, "builtin").get<std::string>();
            const auto var = j.value("variable", std::string());
            if (b == "additive") {
                g = additive_group(var.empty() ? "x" : var);
            } else if (b == "odd_additive") {
                g = odd_additive_group(var.empty() ? "t" : var);
            } else if (b == "multiplicative") {
                g = multiplicative_group(var.empty() ? "u" : var);
            } else if (b == "trivial") {
                g = trivial_group();
            } else {
                throw ResolutionError(where + ": " +
                                      unknown_name("builtin group", b, {"additive", "odd_additive", "multiplicative", "trivial"}));
            }
        } else if (j.contains("product")) {
            const auto parts = detail::string_list(detail::field(j, "product"), where + ".product");
            if (parts.size() != 2) throw ResolutionError(where + ".product: expected two group names");
            g = product_group(group(parts[0]), group(parts[1]));
        } else if (j.contains("quotient")) {
            const auto base = group(detail::field(j, "quotient").get<std::string>());
            const auto gens = detail::parse_list(base->algebra(), detail::string_list(detail::field(j, "ideal"), where + ".ideal"), where + ".ideal");
            g = hopf_quotient(base, SuperIdeal(base->algebra(), gens));
        } else if (j.contains("comultiplication")) {
            try {
                auto ring = make_free_ring(detail::string_list(detail::field(j, "even"), where + ".even"),
                                           detail::string_list(detail::field(j, "odd"), where + ".odd"));
                std::vector<SuperPolynomial> rels, dens;
                for (const auto &r : detail::string_list(detail::field(j, "relations"), where + ".relations")) rels.push_back(parse_polynomial(ring, r));
                for (const auto &d : detail::string_list(detail::field(j, "denominators"), where + ".denominators")) dens.push_back(parse_polynomial(ring, d));
                auto alg = make_algebra(ring, std::move(rels), std::move(dens), name);
                g = HopfSuperalgebra::from_strings(alg, detail::string_list(detail::field(j, "comultiplication"), where + ".comultiplication"),
                                                   detail::string_list(detail::field(j, "counit"), where + ".counit"),
                                                   detail::string_list(detail::field(j, "antipode"), where + ".antipode"), name);
            } catch (const ResolutionError &) {
                throw;
            } catch (const std::exception &e) {
                throw ResolutionError(where + ": " + e.what());
            }
        } else {
            throw ResolutionError(where + ": expected one of gl, builtin, product, quotient or an explicit presentation");
        }
        m_building.erase(name);
        m_groups.emplace(name, g);
        return g;
    }

    Supersubgroup subgroup(const std::string &name) const
    {
        if (auto it = m_subgroups.find(name); it != m_subgroups.end()) return it->second;
        const auto &j = declaration("subgroups", name, "subgroup");
        const std::string where = "subgroups." + name;
        const auto g = group(j.at("group").get<std::string>());
        Supersubgroup h;
        if (j.contains("trivial") && detail::field(j, "trivial").get<bool>()) {
            h = trivial_subgroup(g);
        } else {
            if (!j.contains("ideal")) throw ResolutionError(where + ": needs 'ideal' or \"trivial\": true");
            h = Supersubgroup{g, SuperIdeal(g->algebra(), detail::parse_list(g->algebra(), detail::string_list(detail::field(j, "ideal"), where + ".ideal"), where + ".ideal"))};
            if (auto bad = hopf_ideal_violation(*g, h.ideal, m_degree)) {
                throw ResolutionError(where + ": not a Hopf superideal at " + bad->first + ": " + bad->second);
            }
        }
        m_subgroups.emplace(name, h);
        return h;
    }

    HopfMorphism morphism(const std::string &name) const
    {
        if (auto it = m_morphisms.find(name); it != m_morphisms.end()) return it->second;
        const auto &j = declaration("morphisms", name, "morphism");
        const std::string where = "morphisms." + name;
        const auto src = group(j.at("source").get<std::string>());
        const auto tgt = group(j.at("target").get<std::string>());
        const auto images = detail::string_list(detail::field(j, "images"), where + ".images");
        HopfMorphism phi{src, tgt, SuperalgebraMorphism(tgt->algebra(), src->algebra(), detail::parse_list(src->algebra(), images, where + ".images"))};
        m_morphisms.emplace(name, phi);
        return phi;
    }

    AlgebraCoaction action(const std::string &name) const
    {
        if (auto it = m_actions.find(name); it != m_actions.end()) return it->second;
        const auto &j = declaration("actions", name, "action");
        const std::string where = "actions." + name;
        const auto g = group(j.at("group").get<std::string>());
        auto space = make_free_algebra(detail::string_list(detail::field(j, "even"), where + ".even"),
                                       detail::string_list(detail::field(j, "odd"), where + ".odd"), name);
        auto x = AlgebraCoaction::from_strings(space, g, detail::string_list(detail::field(j, "images"), where + ".images"));
        m_actions.emplace(name, x);
        return x;
    }

    static const std::map<std::string, std::vector<std::string>> &operations()
    {
        static const std::map<std::string, std::vector<std::string>> ops{
            {"hopf_axioms", {"group"}},
            {"antipode_involution", {"group"}},
            {"is_normal", {"subgroup"}},
            {"normality_witness", {"subgroup", "points"}},
            {"normalizer", {"subgroup"}},
            {"invariant_subalgebra", {"subgroup"}},
            {"quotient_criterion", {"subgroup"}},
            {"algebra_invariants", {"action"}},
            {"hopf_morphism", {"morphism"}},
            {"kernel_ideal", {"morphism"}},
            {"image_span", {"morphism"}},
            {"semidirect_ideal", {"subgroup", "morphism"}},
            {"levi_psi", {"m", "n", "s", "t"}},
            {"levi_invariants", {"m", "n"}},
            {"lie_algebra", {"group"}},
            {"lie_bracket", {"group", "x", "y"}},
            {"d_ad", {"group"}},
            {"adjoint_coaction", {"group"}},
            {"pairing", {"group"}},
            {"dist_dimensions", {"group"}},
            {"xi_roundtrip", {"group", "elements"}},
            {"kernel_laws", {}},
        };
        return ops;
    }

    void validate_check(const nlohmann::json &c, std::size_t i) const
    {
        const std::string where = "checks[" + std::to_string(i) + "]";
        if (!c.is_object() || !c.contains("op") || !detail::field(c, "op").is_string()) throw ResolutionError(where + ": missing 'op'");
        const auto op = detail::field(c, "op").get<std::string>();
        const auto &ops = operations();
        auto it = ops.find(op);
        if (it == ops.end()) throw ResolutionError(where + ": " + unknown_name("operation", op, keys_of(ops)));
        for (const auto &field : it->second) {
            if (!c.contains(field)) throw ResolutionError(where + ": '" + op + "' needs field '" + field + "'");
        }
        if (c.contains("degree") && detail::field(c, "degree").get<int>() <= 0) throw ResolutionError(where + ": degree bounds must be positive");
        if (c.contains("group")) group(detail::field(c, "group").get<std::string>());
        if (c.contains("subgroup")) subgroup(detail::field(c, "subgroup").get<std::string>());
        if (c.contains("morphism")) morphism(detail::field(c, "morphism").get<std::string>());
        if (c.contains("action")) action(detail::field(c, "action").get<std::string>());
        for (const char *key : {"expect_equal", "ideal_of"}) {
            if (c.contains(key)) {
                const auto ref = c[key].get<std::string>();
                if (ref != "zero" && ref.rfind("kernel:", 0) != 0) subgroup(ref);
                if (ref.rfind("kernel:", 0) == 0) morphism(ref.substr(7));
            }
        }
    }

    SuperIdeal ideal_reference(const std::string &ref, const AlgebraPtr &alg) const
    {
        if (ref == "zero") return SuperIdeal(alg, {});
        if (ref.rfind("kernel:", 0) == 0) return kernel_ideal(morphism(ref.substr(7)));
        return subgroup(ref).ideal;
    }

    static void expect_set(CheckRecord &r, const std::vector<LocalizedElement> &got, const nlohmann::json &c)
    {
        r.witness = detail::joined(got);
        if (!c.contains("expect")) {
            r.status = Status::pass;
            return;
        }
        const auto alg = got.empty() ? AlgebraPtr() : got.front().algebra();
        std::vector<std::string> want = detail::string_list(detail::field(c, "expect"), "expect");
        std::vector<std::string> have;
        for (const auto &x : got) have.push_back(to_string(x));
        std::sort(want.begin(), want.end());
        std::sort(have.begin(), have.end());
        r.status = want == have ? Status::pass : Status::fail;
        (void)alg;
    }

    static void from_report(CheckRecord &r, const CheckReport &rep)
    {
        r.status = rep.pass() ? Status::pass : Status::fail;
        if (const auto *f = rep.first_failure()) {
            r.witness = f->name + (f->witness.empty() ? "" : ": " + f->witness);
        } else {
            r.witness = std::to_string(rep.entries.size()) + " entries";
        }
    }

    CheckRecord run_check(const nlohmann::json &c, std::size_t i, unsigned d0, std::optional<std::uint64_t> seed) const
    {
        const auto op = detail::field(c, "op").get<std::string>();
        const std::string label = c.value("label", op + " #" + std::to_string(i + 1));
        const unsigned d = c.value("degree", d0);
        return timed_check(m_name, label, [&](CheckRecord &r) {
            r.bound = d;
            if (op == "hopf_axioms") {
                from_report(r, check_hopf_axioms(*group(detail::field(c, "group")), d));
            } else if (op == "antipode_involution") {
                from_report(r, check_antipode_involution(*group(detail::field(c, "group")), d));
            } else if (op == "is_normal") {
                const auto res = is_normal(subgroup(detail::field(c, "subgroup")), d);
                const std::string got = res.certified() ? "certified" : "not-certified";
                r.witness = got + (res.nu_agree ? "" : " (nu_l and nu_r disagree)");
                for (const auto &f : res.uncertified) r.witness += "; " + f;
                if (c.contains("expect")) {
                    r.status = (detail::field(c, "expect").get<std::string>() == got && res.nu_agree) ? Status::pass : Status::fail;
                } else {
                    r.status = !res.nu_agree ? Status::fail : res.certified() ? Status::pass : Status::not_certified;
                }
            } else if (op == "normality_witness") {
                r.bound.reset();
                const auto h = subgroup(detail::field(c, "subgroup"));
                auto k = c.contains("odd") ? make_free_algebra({}, detail::string_list(detail::field(c, "odd"), "odd")) : ground_algebra();
                std::vector<std::pair<GroupPoint, GroupPoint>> pts;
                for (const auto &p : detail::field(c, "points")) {
                    pts.emplace_back(make_point(h.ambient, k, detail::string_list(p.at("g"), "g")),
                                     make_point(h.ambient, k, detail::string_list(p.at("h"), "h")));
                }
                const auto w = normality_witness(h, pts);
                const bool want = c.value("expect", std::string("violation")) == "violation";
                r.status = w.violation == want ? Status::pass : Status::fail;
                r.witness = w.violation ? "pair " + std::to_string(w.pair) + ": (g h g^-1)(" + w.generator + ") = " + w.value
                                        : "none found";
            } else if (op == "normalizer") {
                const auto h = subgroup(detail::field(c, "subgroup"));
                const auto nd = normalizer_data(h, d);
                r.witness = "companions " + detail::joined(nd.companions);
                r.status = Status::pass;
                if (c.contains("expect_equal")) {
                    const auto want = ideal_reference(detail::field(c, "expect_equal"), h.ambient->algebra());
                    if (!ideals_equal(nd.ideal, want, d)) r.status = Status::fail;
                }
                auto k = ground_algebra();
                auto vanishes = [&](const nlohmann::json &pt) {
                    const auto p = make_point(h.ambient, k, detail::string_list(pt, "point"));
                    for (const auto &f : nd.ideal.generators) {
                        if (!p(f).is_zero()) return false;
                    }
                    return true;
                };
                for (const auto &pt : c.value("points_in", nlohmann::json::array())) {
                    if (!vanishes(pt)) {
                        r.status = Status::fail;
                        r.witness += "; point " + pt.dump() + " not in the normalizer";
                    }
                }
                for (const auto &pt : c.value("points_out", nlohmann::json::array())) {
                    if (vanishes(pt)) {
                        r.status = Status::fail;
                        r.witness += "; point " + pt.dump() + " unexpectedly in the normalizer";
                    }
                }
            } else if (op == "invariant_subalgebra") {
                expect_set(r, invariant_subalgebra(subgroup(detail::field(c, "subgroup")), d).basis, c);
            } else if (op == "quotient_criterion") {
                const auto h = subgroup(detail::field(c, "subgroup"));
                from_report(r, quotient_criterion(h, invariant_subalgebra(h, d), d));
            } else if (op == "algebra_invariants") {
                const auto inv = algebra_invariants(action(detail::field(c, "action")), d);
                expect_set(r, inv, c);
                if (r.status == Status::pass && c.value("odd_products_zero", false)) {
                    for (const auto &a : inv) {
                        for (const auto &b : inv) {
                            if (a.homogeneous_parity() == Parity::odd && b.homogeneous_parity() == Parity::odd &&
                                !(a * b).is_zero()) {
                                r.status = Status::fail;
                                r.witness = "odd product " + to_string(a) + " * " + to_string(b) + " is nonzero";
                            }
                        }
                    }
                }
            } else if (op == "hopf_morphism") {
                from_report(r, check_hopf_morphism(morphism(detail::field(c, "morphism")), d));
            } else if (op == "kernel_ideal") {
                const auto phi = morphism(detail::field(c, "morphism"));
                const auto ker = kernel_ideal(phi);
                r.witness = detail::joined(ker.generators);
                if (c.contains("expect_equal")) {
                    r.status = ideals_equal(ker, ideal_reference(detail::field(c, "expect_equal"), phi.source->algebra()), d) ? Status::pass : Status::fail;
                } else {
                    expect_set(r, ker.generators, c);
                }
            } else if (op == "image_span") {
                const auto phi = morphism(detail::field(c, "morphism"));
                const auto span = image_span(phi, d);
                expect_set(r, span, c);
                if (r.status == Status::pass && c.value("match_invariants", false)) {
                    const auto inv = invariant_subalgebra(Supersubgroup{phi.source, kernel_ideal(phi)}, d);
                    if (detail::joined(inv.basis) != detail::joined(span)) {
                        r.status = Status::fail;
                        r.witness += " vs invariants " + detail::joined(inv.basis);
                    }
                }
            } else if (op == "semidirect_ideal") {
                const auto h = subgroup(detail::field(c, "subgroup"));
                const auto ideal = semidirect_ideal(h, morphism(detail::field(c, "morphism")), d);
                r.witness = detail::joined(ideal.generators);
                if (c.contains("expect_equal")) {
                    r.status = ideals_equal(ideal, ideal_reference(detail::field(c, "expect_equal"), h.ambient->algebra()), d) ? Status::pass : Status::fail;
                } else {
                    r.status = Status::pass;
                }
            } else if (op == "levi_psi") {
                r.bound.reset();
                from_report(r, levi_psi_check(detail::field(c, "m"), detail::field(c, "n"), detail::field(c, "s"), detail::field(c, "t")));
            } else if (op == "levi_invariants") {
                from_report(r, levi_invariants_check(detail::field(c, "m"), detail::field(c, "n"), d, c.value("membership", true)));
            } else if (op == "lie_algebra") {
                r.bound.reset();
                const auto lie = lie_algebra(group(detail::field(c, "group")));
                const auto [e, o] = lie.superdimension();
                from_report(r, check_lie_axioms(lie));
                r.witness = "superdimension (" + std::to_string(e) + "|" + std::to_string(o) + "); " + r.witness;
                if (c.contains("expect_superdimension")) {
                    const auto sd = detail::field(c, "expect_superdimension");
                    if (sd[0].get<std::size_t>() != e || sd[1].get<std::size_t>() != o) r.status = Status::fail;
                }
            } else if (op == "lie_bracket") {
                r.bound.reset();
                const auto lie = lie_algebra(group(detail::field(c, "group")));
                auto index = [&](const std::string &n) {
                    const auto i = lie.index_of(n);
                    if (!i) throw ResolutionError(unknown_name("Lie basis element", n, lie.names));
                    return *i;
                };
                const auto &v = lie.structure[index(detail::field(c, "x"))][index(detail::field(c, "y"))];
                r.witness = "[" + detail::field(c, "x").get<std::string>() + ", " + detail::field(c, "y").get<std::string>() + "] = " + detail::combination(v, lie.names);
                const auto got = detail::combination(v, lie.names);
                r.status = !c.contains("expect") || detail::field(c, "expect").get<std::string>() == got ? Status::pass : Status::fail;
            } else if (op == "d_ad") {
                r.bound.reset();
                from_report(r, check_d_ad(lie_algebra(group(detail::field(c, "group")))));
            } else if (op == "adjoint_coaction") {
                r.bound.reset();
                from_report(r, check_coaction(adjoint_coaction(lie_algebra(group(detail::field(c, "group"))))));
            } else if (op == "pairing") {
                const auto rep = pairing_check(group(detail::field(c, "group")), d);
                r.status = rep.pass() ? Status::pass : Status::fail;
                r.witness = std::to_string(rep.entries.size()) + " pairings";
            } else if (op == "dist_dimensions") {
                const auto dims = dist_dimension_check(group(detail::field(c, "group")), d);
                r.status = Status::pass;
                for (const auto &e : dims) {
                    r.witness += (e.order ? " " : "") + std::to_string(e.jet_dimension) + "/" + std::to_string(e.pbw_count);
                    if (e.jet_dimension != e.pbw_count) r.status = Status::fail;
                }
            } else if (op == "xi_roundtrip") {
                r.bound.reset();
                const auto g = group(detail::field(c, "group"));
                std::vector<LocalizedElement> basis;
                for (std::size_t v = 0; v < g->algebra()->num_generators(); ++v) basis.push_back(g->generator(v));
                const auto m = regular_comodule(g, basis, ComoduleSide::left);
                from_report(r, check_xi_roundtrip(xi_map(m), detail::parse_list(g->algebra(), detail::string_list(detail::field(c, "elements"), "elements"), "elements")));
            } else if (op == "kernel_laws") {
                const auto even = detail::string_list(c.value("even", nlohmann::json::array({"x1", "x2"})), "even");
                const auto odd = detail::string_list(c.value("odd", nlohmann::json::array({"z1", "z2", "z3"})), "odd");
                const auto s = seed.value_or(c.value("seed", std::uint64_t{1}));
                const auto res = kernel_laws(make_free_ring(even, odd), s, c.value("trials", std::size_t{200}), d);
                r.status = res.failure ? Status::fail : Status::pass;
                r.witness = res.failure ? *res.failure : std::to_string(res.trials) + " triples, seed " + std::to_string(s);
            }
        });
    }

    std::string m_name;
    unsigned m_degree = 4;
    nlohmann::json m_doc;
    mutable std::map<std::string, HopfPtr> m_groups;
    mutable std::set<std::string> m_building;
    mutable std::map<std::string, Supersubgroup> m_subgroups;
    mutable std::map<std::string, HopfMorphism> m_morphisms;
    mutable std::map<std::string, AlgebraCoaction> m_actions;
};

} // namespace superhopf

#endif
