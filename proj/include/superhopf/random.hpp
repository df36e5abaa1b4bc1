#ifndef SUPERHOPF_RANDOM_HPP
#define SUPERHOPF_RANDOM_HPP

#include <cstdint>
#include <optional>
#include <random>
#include <string>

#include <superhopf/superpoly.hpp>

namespace superhopf
{

// Random polynomial with up to 6 terms of degree <= max_degree and small
// rational coefficients.
inline SuperPolynomial random_polynomial(const FreeRingPtr &ring, std::mt19937_64 &rng, unsigned max_degree,
                                         unsigned max_terms = 6)
{
    static thread_local std::vector<Monomial> pool;
    static thread_local const FreeSuperalgebra *pool_ring = nullptr;
    static thread_local unsigned pool_degree = 0;
    if (pool_ring != ring.get() || pool_degree != max_degree) {
        pool = monomials_up_to(*ring, max_degree);
        pool_ring = ring.get();
        pool_degree = max_degree;
    }
    std::uniform_int_distribution<std::size_t> pick(0, pool.size() - 1);
    std::uniform_int_distribution<unsigned> count(1, max_terms);
    std::uniform_int_distribution<long> num(-5, 5), den(1, 3);
    SuperPolynomial p(ring);
    const unsigned n = count(rng);
    for (unsigned i = 0; i < n; ++i) {
        p.add_term(pool[pick(rng)], make_rational(num(rng), den(rng)));
    }
    return p;
}

/// Outcome of the seeded kernel-law sweep; `failure` names the first broken law.
struct KernelLawResult {
    std::size_t trials = 0;
    std::optional<std::string> failure;
};

/// Associativity, graded commutativity, z² = 0 and renormalization
/// idempotence over `trials` random triples in `ring`.
inline KernelLawResult kernel_laws(const FreeRingPtr &ring, std::uint64_t seed, std::size_t trials, unsigned degree = 4)
{
    std::mt19937_64 rng(seed);
    KernelLawResult out;
    for (std::size_t i = 0; i < ring->num_odd(); ++i) {
        const auto z = SuperPolynomial::variable(ring, ring->num_even() + i);
        if (!(z * z).is_zero()) {
            out.failure = "odd square " + ring->name(ring->num_even() + i);
            return out;
        }
    }
    for (; out.trials < trials; ++out.trials) {
        const auto a = random_polynomial(ring, rng, degree);
        const auto b = random_polynomial(ring, rng, degree);
        const auto c = random_polynomial(ring, rng, degree);
        const std::string at = " at trial " + std::to_string(out.trials);
        if ((a * b) * c != a * (b * c)) {
            out.failure = "associativity" + at;
            return out;
        }
        for (Parity pa : {Parity::even, Parity::odd}) {
            for (Parity pb : {Parity::even, Parity::odd}) {
                const auto x = a.component(pa), y = b.component(pb);
                if (x * y != (y * x) * Rational(koszul(pa, pb))) {
                    out.failure = "supercommutativity" + at;
                    return out;
                }
            }
        }
        if (!(a.component(Parity::odd) * a.component(Parity::odd)).is_zero()) {
            out.failure = "odd square" + at;
            return out;
        }
        if (a.renormalized() != a || a.renormalized().renormalized() != a.renormalized()) {
            out.failure = "normalization idempotence" + at;
            return out;
        }
    }
    return out;
}

} // namespace superhopf

#endif
