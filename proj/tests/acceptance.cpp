#include <algorithm>
#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <superhopf/superhopf.hpp>

using namespace superhopf;

namespace
{

/// Clause-level outcome of one criterion.
struct Verdict {
    bool pass = true;
    std::vector<std::string> notes;

    void require(bool ok, const std::string &clause)
    {
        if (!ok) {
            pass = false;
            notes.push_back(clause);
        }
    }
};

struct Criterion {
    int id;
    std::string title;
    double limit_s;
    std::function<void(Verdict &)> body;
};

std::vector<std::string> printed(const std::vector<LocalizedElement> &xs)
{
    std::vector<std::string> out;
    for (const auto &x : xs) out.push_back(to_string(x));
    std::sort(out.begin(), out.end());
    return out;
}

std::string first_failure(const CheckReport &rep)
{
    const auto *f = rep.first_failure();
    return f ? f->name : "";
}

unsigned long factorial(unsigned k)
{
    unsigned long r = 1;
    for (unsigned i = 2; i <= k; ++i) r *= i;
    return r;
}

void kernel_laws_criterion(Verdict &v)
{
    const auto res = kernel_laws(make_free_ring({"x1", "x2"}, {"z1", "z2", "z3"}), 20240601, 200, 4);
    v.require(res.trials == 200, "200 triples sampled");
    v.require(!res.failure, "kernel laws: " + res.failure.value_or(""));
}

void hopf_axioms_criterion(Verdict &v)
{
    const std::vector<HopfPtr> groups{gl_supergroup(1, 1),    gl_supergroup(2, 1),  gl_supergroup(1, 2),
                                      additive_group(),       odd_additive_group(), multiplicative_group(),
                                      product_group(additive_group(), odd_additive_group())};
    for (const auto &g : groups) {
        const auto ax = check_hopf_axioms(*g);
        v.require(ax.pass(), g->name() + " axioms: " + first_failure(ax));
        const auto inv = check_antipode_involution(*g);
        v.require(inv.pass(), g->name() + " S o S: " + first_failure(inv));
    }
}

void counterexample_criterion(Verdict &v)
{
    auto g = odd_additive_group("t");
    auto sv = make_free_algebra({"v1"}, {"v2"}, "S(V)");
    const auto x = AlgebraCoaction::from_strings(sv, g, {"v1 + v2*t", "v2"});
    const auto inv = algebra_invariants(x, 6);
    std::vector<LocalizedElement> want{parse_element(sv, "1")};
    for (int k = 0; k <= 5; ++k) want.push_back(parse_element(sv, "v1^" + std::to_string(k) + "*v2"));
    v.require(printed(inv) == printed(want), "invariants at degree 6 are {1} and v1^k v2, k <= 5");
    for (const auto &a : inv) {
        for (const auto &b : inv) {
            if (a.homogeneous_parity() == Parity::odd && b.homogeneous_parity() == Parity::odd) {
                v.require((a * b).is_zero(), "R1^2 = 0 fails at " + to_string(a) + " * " + to_string(b));
            }
        }
    }
}

void quotient_criterion_instance(Verdict &v)
{
    auto g = product_group(additive_group(), odd_additive_group());
    const auto h = make_subgroup(g, {"x"});
    const auto r = invariant_subalgebra(h, 3);
    std::vector<std::string> want{"1", "x", "x^2", "x^3"};
    std::sort(want.begin(), want.end());
    v.require(printed(r.basis) == want, "invariant subalgebra is {1, x, x^2, x^3}");
    const auto q = quotient_criterion(h, r, 3);
    v.require(q.pass() && !q.entries.empty(), "I_H = K[G]R+ both ways: " + first_failure(q));
}

void lie_criterion(Verdict &v)
{
    const auto lie = lie_algebra(gl_supergroup(1, 1));
    v.require(lie.superdimension() == std::pair<std::size_t, std::size_t>{2, 2}, "superdimension (2,2)");
    const auto ax = check_lie_axioms(lie);
    v.require(ax.pass(), "skew symmetry and Jacobi: " + first_failure(ax));
    const auto d11 = lie.index_of("d_a11"), d22 = lie.index_of("d_a22");
    const auto d12 = lie.index_of("d_a12"), d21 = lie.index_of("d_a21");
    v.require(d11 && d22 && d12 && d21, "basis d_a11, d_a22, d_a12, d_a21");
    if (d11 && d22 && d12 && d21) {
        std::vector<Rational> want(lie.dimension(), Rational(0));
        want[*d11] = 1;
        want[*d22] = 1;
        const auto &got = lie.structure[*d12][*d21];
        std::ostringstream realized;
        for (std::size_t k = 0; k < got.size(); ++k) {
            if (!is_zero(got[k])) realized << (realized.tellp() ? " " : "") << got[k].get_str() << "*" << lie.names[k];
        }
        v.require(got == want, "[d12, d21] = d11 + d22 (realized: " + realized.str() + ")");
    }
    const auto dad = check_d_ad(lie);
    v.require(dad.pass() && dad.entries.size() == lie.dimension() * lie.dimension(), "d(Ad) grid: " + first_failure(dad));
}

void pairing_criterion(Verdict &v)
{
    auto g = product_group(additive_group(), odd_additive_group());
    const auto rep = pairing_check(g, 3);
    // Exponent vectors (a, b) with b <= 1 and a + b <= 3.
    std::size_t vectors = 0;
    for (unsigned a = 0; a <= 3; ++a) {
        for (unsigned b = 0; b <= 1; ++b) vectors += a + b <= 3 ? 1 : 0;
    }
    v.require(rep.entries.size() == vectors * vectors, "all exponent pairs of total degree <= 3");
    for (const auto &e : rep.entries) {
        Rational want(0);
        if (e.s == e.d) {
            unsigned long f = 1;
            for (auto k : e.s) f *= factorial(k);
            want = Rational(static_cast<long>(f));
        }
        v.require(abs(e.value) == want, "pairing magnitude at a diagonal or off-diagonal pair");
    }
    for (const auto &h : {g, gl_supergroup(1, 1)}) {
        const auto dims = dist_dimension_check(h, 3);
        v.require(dims.size() == 4, h->name() + " orders 0..3");
        for (const auto &e : dims) {
            v.require(e.jet_dimension == e.pbw_count, h->name() + " Dist_" + std::to_string(e.order) + " dimension");
        }
    }
}

void normality_criterion(Verdict &v)
{
    auto gl11 = gl_supergroup(1, 1);
    auto gm = multiplicative_group();
    auto gl2 = gl_supergroup(2, 0);
    const auto ev = is_normal(make_subgroup(gl11, {"a12", "a21"}), 4);
    v.require(ev.certified(), "G_ev normal in GL(1|1) certified at d = 4");
    const auto mu2 = is_normal(make_subgroup(gm, {"u^2 - 1"}), 4);
    v.require(mu2.certified(), "mu2 normal in Gm certified at d = 4");
    const auto borel = make_subgroup(gl2, {"a21"});
    const auto b = is_normal(borel, 4);
    v.require(ev.nu_agree && mu2.nu_agree && b.nu_agree, "nu_l / nu_r agreement");
    v.require(!b.certified(), "Borel not certified");
    auto k = ground_algebra();
    const auto w = normality_witness(borel, {{make_point(gl2, k, {"0", "1", "1", "0"}), make_point(gl2, k, {"1", "1", "0", "1"})}});
    v.require(w.violation, "Borel violation witness from rational points");
    const auto nd = normalizer_data(borel, 3);
    v.require(ideals_equal(nd.ideal, borel.ideal, 3), "normalizer ideal equals the Borel ideal");
    auto vanishes = [&](const std::vector<std::string> &pt) {
        const auto p = make_point(gl2, k, pt);
        for (const auto &f : nd.ideal.generators) {
            if (!p(f).is_zero()) return false;
        }
        return true;
    };
    v.require(vanishes({"2", "5", "0", "3"}) && vanishes({"1", "0", "0", "-1"}) && !vanishes({"0", "1", "1", "0"}),
              "normalizer membership of rational points");
}

void levi_psi_criterion(Verdict &v)
{
    const auto rep = levi_psi_check(1, 1, 1, 0);
    v.require(rep.pass() && !rep.entries.empty(), "psi o mult = id and mult o psi = id: " + first_failure(rep));
}

void levi_invariants_criterion(Verdict &v)
{
    for (auto [m, n] : std::vector<std::pair<std::size_t, std::size_t>>{{1, 1}, {2, 1}}) {
        const auto rep = levi_invariants_check(m, n, 3);
        const std::string tag = "GL(" + std::to_string(m) + "|" + std::to_string(n) + ") ";
        v.require(rep.pass(), tag + first_failure(rep));
        std::size_t coinvariant = 0, identities = 0;
        for (const auto &e : rep.entries) {
            coinvariant += e.name.rfind("coinvariance", 0) == 0 ? 1 : 0;
            identities += e.name.rfind("identity", 0) == 0 ? 1 : 0;
        }
        v.require(coinvariant == (m + n) * (m + n), tag + "every x_ij tested");
        v.require(identities == 2 * (m + n), tag + "every column identity tested");
    }
}

void coherence_criterion(Verdict &v)
{
    auto gm = multiplicative_group();
    auto g = product_group(additive_group(), odd_additive_group());
    const std::vector<HopfMorphism> maps{make_hopf_morphism(gm, gm, {"u^2"}), make_hopf_morphism(g, additive_group(), {"x"})};
    for (const auto &phi : maps) {
        const auto ker = Supersubgroup{phi.source, kernel_ideal(phi)};
        for (unsigned d = 1; d <= 4; ++d) {
            const std::string tag = phi.source->name() + " d = " + std::to_string(d) + ": ";
            const auto r = invariant_subalgebra(ker, d);
            v.require(image_kernel(phi, d).empty(), tag + "comorphism injective on the image slice");
            v.require(printed(image_span(phi, d)) == printed(r.basis), tag + "image equals invariants");
            if (d == 4) v.require(quotient_criterion(ker, r, d).pass(), tag + "kernel ideal equals K[G]R+");
        }
    }
    const auto mu2 = make_subgroup(gm, {"u^2 - 1"});
    v.require(ideals_equal(semidirect_ideal(mu2, make_hopf_morphism(gm, gm, {"u"}), 4), mu2.ideal, 4), "semidirect with N = G gives I_H");
    const auto pi = maps[1];
    v.require(ideals_equal(semidirect_ideal(trivial_subgroup(g), pi, 4), kernel_ideal(pi), 4), "semidirect with trivial H gives I_N");
}

} // namespace

int main()
{
    const std::vector<Criterion> criteria{
        {1, "kernel laws on K[2|3]", 1, kernel_laws_criterion},
        {2, "Hopf axiom suite and S o S = id", 60, hopf_axioms_criterion},
        {3, "odd-line invariants of S(V) at degree 6", 5, counterexample_criterion},
        {4, "quotient criterion for V(x) in Ga x Ga-", 5, quotient_criterion_instance},
        {5, "Lie(GL(1|1)) suite", 30, lie_criterion},
        {6, "PBW pairing and Dist dimensions", 30, pairing_criterion},
        {7, "normality suite", 30, normality_criterion},
        {8, "Levi factorization at (1,1,1,0)", 30, levi_psi_criterion},
        {9, "Levi invariants for GL(1|1) and GL(2|1)", 120, levi_invariants_criterion},
        {10, "kernel, image and invariant coherence", 10, coherence_criterion},
    };
    int failed = 0;
    for (const auto &c : criteria) {
        Verdict v;
        const auto start = std::chrono::steady_clock::now();
        try {
            c.body(v);
        } catch (const std::exception &e) {
            v.require(false, std::string("exception: ") + e.what());
        }
        const double s = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        char timing[64];
        std::snprintf(timing, sizeof timing, "%.3f s, limit %.0f s", s, c.limit_s);
        v.require(s < c.limit_s, "time limit");
        std::cout << (v.pass ? "PASS" : "FAIL") << " criterion " << c.id << ": " << c.title << " (" << timing << ")";
        for (const auto &n : v.notes) std::cout << " | failed: " << n;
        std::cout << '\n';
        failed += v.pass ? 0 : 1;
    }
    std::cout << (criteria.size() - failed) << "/" << criteria.size() << " criteria pass\n";
    return failed ? 1 : 0;
}
