#ifndef SUPERHOPF_CATALOG_HPP
#define SUPERHOPF_CATALOG_HPP

#include <algorithm>
#include <functional>
#include <map>
#include <string>
#include <vector>

#include <json.hpp>

#include <superhopf/scenario.hpp>

namespace superhopf
{

/// `--param k=v` values and the named shortcuts (`--m`, `--degree`, ...).
class Params
{
public:
    void set(const std::string &key, const std::string &value) { m_values[key] = value; }

    /// Parses "k=v".
    void set_assignment(const std::string &kv)
    {
        const auto eq = kv.find('=');
        if (eq == std::string::npos || eq == 0) throw ResolutionError("expected k=v, got '" + kv + "'");
        set(kv.substr(0, eq), kv.substr(eq + 1));
    }

    bool has(const std::string &key) const { return m_values.count(key) != 0; }

    long integer(const std::string &key, long fallback) const
    {
        auto it = m_values.find(key);
        if (it == m_values.end()) return fallback;
        try {
            std::size_t used = 0;
            const long v = std::stol(it->second, &used);
            if (used != it->second.size()) throw std::invalid_argument(key);
            return v;
        } catch (const std::exception &) {
            throw ResolutionError("parameter '" + key + "' expects an integer, got '" + it->second + "'");
        }
    }

    std::size_t natural(const std::string &key, long fallback) const
    {
        const long v = integer(key, fallback);
        if (v < 0) throw ResolutionError("parameter '" + key + "' must be nonnegative");
        return static_cast<std::size_t>(v);
    }

    unsigned bound(const std::string &key, long fallback) const
    {
        const long v = integer(key, fallback);
        if (v <= 0) throw ResolutionError("degree bounds must be positive");
        return static_cast<unsigned>(v);
    }

    const std::map<std::string, std::string> &values() const { return m_values; }

private:
    std::map<std::string, std::string> m_values;
};

/// A builtin scenario generated from parameters.
struct CatalogEntry {
    std::string name;
    std::string topic;
    std::vector<std::string> params;
    std::function<nlohmann::json(const Params &)> build;
};

namespace detail
{

inline nlohmann::json gl_group(std::size_t m, std::size_t n) { return {{"gl", {m, n}}}; }

inline nlohmann::json odd_line_product()
{
    return {{"Ga", {{"builtin", "additive"}, {"variable", "x"}}},
            {"Ga-", {{"builtin", "odd_additive"}, {"variable", "t"}}},
            {"G", {{"product", {"Ga", "Ga-"}}}}};
}

} // namespace detail

inline const std::vector<CatalogEntry> &catalog()
{
    using nlohmann::json;
    static const std::vector<CatalogEntry> entries{
        {"gl-hopf-axioms", "Hopf axioms of GL(m|n): coassociativity, counit, antipode on both sides", {"m", "n", "degree"},
         [](const Params &p) {
             return json{{"degree", p.bound("degree", 4)},
                         {"groups", {{"G", detail::gl_group(p.natural("m", 1), p.natural("n", 1))}}},
                         {"checks", {{{"op", "hopf_axioms"}, {"group", "G"}, {"label", "hopf axioms"}}}}};
         }},
        {"antipode-involution", "The antipode of GL(m|n) has order two on generators", {"m", "n", "degree"},
         [](const Params &p) {
             return json{{"degree", p.bound("degree", 4)},
                         {"groups", {{"G", detail::gl_group(p.natural("m", 1), p.natural("n", 1))}}},
                         {"checks", {{{"op", "antipode_involution"}, {"group", "G"}, {"label", "S o S = id"}}}}};
         }},
        {"section10-counterexample", "Invariants of S(V) under the odd line are not finitely generated; odd invariants square to zero",
         {"degree"},
         [](const Params &p) {
             const unsigned d = p.bound("degree", 6);
             json expect = json::array({"1", "v2"});
             for (unsigned k = 1; k < d; ++k) expect.push_back(k == 1 ? "v1*v2" : "v1^" + std::to_string(k) + "*v2");
             return json{{"degree", d},
                         {"groups", {{"Ga-", {{"builtin", "odd_additive"}, {"variable", "t"}}}}},
                         {"actions", {{"S(V)", {{"group", "Ga-"}, {"even", {"v1"}}, {"odd", {"v2"}}, {"images", {"v1 + v2*t", "v2"}}}}}},
                         {"checks",
                          {{{"op", "algebra_invariants"}, {"action", "S(V)"}, {"expect", expect}, {"odd_products_zero", true},
                            {"label", "invariants of S(V), R1^2 = 0"}}}}};
         }},
        {"product-quotient-criterion", "Invariant subalgebra and I_H = K[G]R+ for V(x) in Ga x Ga-", {"degree"},
         [](const Params &p) {
             return json{{"degree", p.bound("degree", 3)},
                         {"groups", detail::odd_line_product()},
                         {"subgroups", {{"H", {{"group", "G"}, {"ideal", {"x"}}}}}},
                         {"checks",
                          {{{"op", "invariant_subalgebra"}, {"subgroup", "H"}, {"expect", {"1", "x", "x^2", "x^3"}}, {"label", "K[G]^H"}},
                           {{"op", "quotient_criterion"}, {"subgroup", "H"}, {"label", "I_H = K[G]R+"}}}}};
         }},
        {"normality-suite", "Normality through the conjugation coactions, with point witnesses", {"degree"},
         [](const Params &p) {
             return json{
                 {"degree", p.bound("degree", 4)},
                 {"groups",
                  {{"Gm", {{"builtin", "multiplicative"}, {"variable", "u"}}}, {"GL11", detail::gl_group(1, 1)}, {"GL2", detail::gl_group(2, 0)}}},
                 {"subgroups",
                  {{"mu2", {{"group", "Gm"}, {"ideal", {"u^2 - 1"}}}},
                   {"G_ev", {{"group", "GL11"}, {"ideal", {"a12", "a21"}}}},
                   {"borel", {{"group", "GL2"}, {"ideal", {"a21"}}}}}},
                 {"checks",
                  {{{"op", "is_normal"}, {"subgroup", "mu2"}, {"expect", "certified"}, {"label", "mu2 normal in Gm"}},
                   {{"op", "is_normal"}, {"subgroup", "G_ev"}, {"expect", "not-certified"}, {"label", "G_ev in GL(1|1)"}},
                   {{"op", "normality_witness"},
                    {"subgroup", "G_ev"},
                    {"odd", {"z"}},
                    {"points", {{{"g", {"1", "1", "z", "0"}}, {"h", {"2", "1", "0", "0"}}}}},
                    {"label", "G_ev witness"}},
                   {{"op", "is_normal"}, {"subgroup", "borel"}, {"expect", "not-certified"}, {"label", "Borel in GL(2)"}},
                   {{"op", "normality_witness"},
                    {"subgroup", "borel"},
                    {"points", {{{"g", {"0", "1", "1", "0"}}, {"h", {"1", "1", "0", "1"}}}}},
                    {"label", "Borel witness"}}}}};
         }},
        {"normalizer-borel", "Normalizer companions of the Borel subgroup of GL(2)", {"degree"},
         [](const Params &p) {
             return json{{"degree", p.bound("degree", 3)},
                         {"groups", {{"GL2", detail::gl_group(2, 0)}}},
                         {"subgroups", {{"borel", {{"group", "GL2"}, {"ideal", {"a21"}}}}}},
                         {"checks",
                          {{{"op", "normalizer"},
                            {"subgroup", "borel"},
                            {"expect_equal", "borel"},
                            {"points_in", {{"2", "5", "0", "3"}, {"1", "0", "0", "-1"}}},
                            {"points_out", {{"0", "1", "1", "0"}}},
                            {"label", "N(B) = B"}}}}};
         }},
        {"levi-psi", "Factorization of the big cell as unipotent times stabilizer", {"m", "n", "s", "t"},
         [](const Params &p) {
             return json{{"checks",
                          {{{"op", "levi_psi"}, {"m", p.natural("m", 1)}, {"n", p.natural("n", 1)}, {"s", p.natural("s", 1)},
                            {"t", p.natural("t", 0)}, {"label", "psi o mult = id, mult o psi = id"}}}}};
         }},
        {"levi-invariants", "Coinvariant entries and the last-column identities for the Levi-type subgroup", {"m", "n", "degree", "membership"},
         [](const Params &p) {
             return json{{"degree", p.bound("degree", 3)},
                         {"checks",
                          {{{"op", "levi_invariants"}, {"m", p.natural("m", 1)}, {"n", p.natural("n", 1)},
                            {"membership", p.integer("membership", 1) != 0}, {"label", "levi invariants"}}}}};
         }},
        {"lie-gl11", "Lie superalgebra of GL(1|1) from order-one distributions", {},
         [](const Params &) {
             return json{{"groups", {{"G", detail::gl_group(1, 1)}}},
                         {"checks",
                          {{{"op", "lie_algebra"}, {"group", "G"}, {"expect_superdimension", {2, 2}}, {"label", "skew symmetry and Jacobi"}},
                           {{"op", "lie_bracket"}, {"group", "G"}, {"x", "d_a12"}, {"y", "d_a21"}, {"expect", "-d_a11 - d_a22"},
                            {"label", "[d_a12, d_a21]"}}}}};
         }},
        {"d-ad-check", "Differential of the adjoint coaction against the bracket", {"m", "n"},
         [](const Params &p) {
             return json{{"groups", {{"G", detail::gl_group(p.natural("m", 1), p.natural("n", 1))}}},
                         {"checks",
                          {{{"op", "adjoint_coaction"}, {"group", "G"}, {"label", "Ad is a coaction"}},
                           {{"op", "d_ad"}, {"group", "G"}, {"label", "d(Ad)(x)(y) = -[y, x]"}}}}};
         }},
        {"pbw-pairing", "Pairing of divided monomials in distributions with monomials in functions", {"degree"},
         [](const Params &p) {
             return json{{"degree", p.bound("degree", 3)},
                         {"groups", detail::odd_line_product()},
                         {"checks", {{{"op", "pairing"}, {"group", "G"}, {"label", "pairing is delta times s!"}}}}};
         }},
        {"dist-dimensions", "Dimensions of Dist_n against PBW counts", {"degree"},
         [](const Params &p) {
             auto groups = detail::odd_line_product();
             groups["GL11"] = detail::gl_group(1, 1);
             return json{{"degree", p.bound("degree", 3)},
                         {"groups", groups},
                         {"checks",
                          {{{"op", "dist_dimensions"}, {"group", "G"}, {"label", "Ga x Ga-"}},
                           {{"op", "dist_dimensions"}, {"group", "GL11"}, {"label", "GL(1|1)"}}}}};
         }},
        {"xi-roundtrip", "The untwisting isomorphism on N (x) M for the regular comodule of GL(1|1)", {},
         [](const Params &) {
             return json{{"groups", {{"G", detail::gl_group(1, 1)}}},
                         {"checks",
                          {{{"op", "xi_roundtrip"}, {"group", "G"}, {"elements", {"1", "a12", "a11*a21 - a22^2"}}, {"label", "xi inverse"}}}}};
         }},
        {"semidirect-trivial", "Semidirect-product ideals in degenerate cases", {"degree"},
         [](const Params &p) {
             auto groups = detail::odd_line_product();
             groups["Gm"] = {{"builtin", "multiplicative"}, {"variable", "u"}};
             return json{{"degree", p.bound("degree", 3)},
                         {"groups", groups},
                         {"subgroups", {{"mu2", {{"group", "Gm"}, {"ideal", {"u^2 - 1"}}}}, {"E", {{"group", "G"}, {"trivial", true}}}}},
                         {"morphisms",
                          {{"id", {{"source", "Gm"}, {"target", "Gm"}, {"images", {"u"}}}},
                           {"pi", {{"source", "G"}, {"target", "Ga"}, {"images", {"x"}}}}}},
                         {"checks",
                          {{{"op", "semidirect_ideal"}, {"subgroup", "mu2"}, {"morphism", "id"}, {"expect_equal", "mu2"}, {"label", "N = G"}},
                           {{"op", "semidirect_ideal"}, {"subgroup", "E"}, {"morphism", "pi"}, {"expect_equal", "kernel:pi"},
                            {"label", "H trivial"}}}}};
         }},
        {"kernel-laws", "Associativity, graded commutativity and z^2 = 0 on random polynomials in K[2|3]", {"seed", "trials", "degree"},
         [](const Params &p) {
             return json{{"degree", p.bound("degree", 4)},
                         {"checks",
                          {{{"op", "kernel_laws"}, {"seed", p.natural("seed", 1)}, {"trials", p.natural("trials", 200)}, {"label", "kernel laws"}}}}};
         }},
    };
    return entries;
}

inline const CatalogEntry *find_builtin(const std::string &name)
{
    for (const auto &e : catalog()) {
        if (e.name == name) return &e;
    }
    return nullptr;
}

inline std::vector<std::string> builtin_names()
{
    std::vector<std::string> out;
    for (const auto &e : catalog()) out.push_back(e.name);
    return out;
}

/// Builds a builtin scenario, or throws with a suggestion.
inline Scenario builtin_scenario(const std::string &name, const Params &p)
{
    const auto *e = find_builtin(name);
    if (!e) throw ResolutionError(unknown_name("scenario", name, builtin_names()));
    for (const auto &[k, v] : p.values()) {
        if (std::find(e->params.begin(), e->params.end(), k) == e->params.end()) {
            throw ResolutionError(unknown_name("parameter for " + name, k, e->params));
        }
    }
    auto doc = e->build(p);
    doc["name"] = name;
    return Scenario::parse(doc.dump(), name);
}

inline nlohmann::ordered_json catalog_json()
{
    auto out = nlohmann::ordered_json::array();
    for (const auto &e : catalog()) out.push_back({{"name", e.name}, {"topic", e.topic}, {"params", e.params}});
    return out;
}

} // namespace superhopf

#endif
