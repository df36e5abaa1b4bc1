#ifndef SUPERHOPF_MONOMIAL_HPP
#define SUPERHOPF_MONOMIAL_HPP

#include <algorithm>
#include <bit>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <unordered_set>
#include <vector>

#include <boost/container/small_vector.hpp>

namespace superhopf
{

enum class Parity : std::uint8_t { even = 0, odd = 1 };

constexpr Parity operator+(Parity a, Parity b)
{
    return static_cast<Parity>(static_cast<std::uint8_t>(a) ^ static_cast<std::uint8_t>(b));
}

constexpr bool is_odd(Parity p)
{
    return p == Parity::odd;
}

constexpr Parity parity_of(unsigned k)
{
    return (k & 1U) ? Parity::odd : Parity::even;
}

// Koszul sign (-1)^{|a||b|}.
constexpr int koszul(Parity a, Parity b)
{
    return (is_odd(a) && is_odd(b)) ? -1 : 1;
}

class RingMismatch : public std::logic_error
{
public:
    using std::logic_error::logic_error;
};

/// Free commutative superalgebra K[t_1..t_m | z_1..z_n] over the rationals.
///
/// Variables carry a global index: even variables occupy 0..m-1 and odd
/// variables m..m+n-1, both in declaration order. At most 64 odd variables.
class FreeSuperalgebra
{
public:
    static constexpr std::size_t max_odd = 64;

    FreeSuperalgebra(std::vector<std::string> even, std::vector<std::string> odd)
        : m_even(std::move(even)), m_odd(std::move(odd))
    {
        if (m_odd.size() > max_odd) {
            throw std::invalid_argument("at most 64 odd variables are supported");
        }
        std::unordered_set<std::string> seen;
        for (const auto *names : {&m_even, &m_odd}) {
            for (const auto &n : *names) {
                if (n.empty()) {
                    throw std::invalid_argument("empty variable name");
                }
                if (!seen.insert(n).second) {
                    throw std::invalid_argument("duplicate variable name: " + n);
                }
            }
        }
    }

    std::size_t num_even() const { return m_even.size(); }
    std::size_t num_odd() const { return m_odd.size(); }
    std::size_t num_vars() const { return m_even.size() + m_odd.size(); }

    Parity parity(std::size_t var) const { return var < m_even.size() ? Parity::even : Parity::odd; }

    const std::string &name(std::size_t var) const
    {
        return var < m_even.size() ? m_even[var] : m_odd.at(var - m_even.size());
    }

    const std::vector<std::string> &even_names() const { return m_even; }
    const std::vector<std::string> &odd_names() const { return m_odd; }

    std::optional<std::size_t> index_of(std::string_view n) const
    {
        for (std::size_t i = 0; i < m_even.size(); ++i) {
            if (m_even[i] == n) return i;
        }
        for (std::size_t j = 0; j < m_odd.size(); ++j) {
            if (m_odd[j] == n) return m_even.size() + j;
        }
        return std::nullopt;
    }

    std::size_t require(std::string_view n) const
    {
        if (auto i = index_of(n)) return *i;
        throw std::invalid_argument("unknown variable: " + std::string(n));
    }

    friend bool operator==(const FreeSuperalgebra &a, const FreeSuperalgebra &b)
    {
        return a.m_even == b.m_even && a.m_odd == b.m_odd;
    }

private:
    std::vector<std::string> m_even;
    std::vector<std::string> m_odd;
};

using FreeRingPtr = std::shared_ptr<const FreeSuperalgebra>;

inline FreeRingPtr make_free_ring(std::vector<std::string> even, std::vector<std::string> odd)
{
    return std::make_shared<const FreeSuperalgebra>(std::move(even), std::move(odd));
}

inline bool same_ring(const FreeRingPtr &a, const FreeRingPtr &b)
{
    return a == b || (a && b && *a == *b);
}

/// Canonical product of generators: even exponents plus a set of odd indices.
///
/// The odd factors are understood in ascending index order; any Koszul sign
/// produced by reordering lives in the coefficient, never here.
struct Monomial {
    boost::container::small_vector<std::uint16_t, 12> even;
    std::uint64_t odd = 0;

    Monomial() = default;
    explicit Monomial(std::size_t num_even) : even(num_even, 0) {}

    static Monomial variable(const FreeSuperalgebra &ring, std::size_t var)
    {
        Monomial m(ring.num_even());
        if (var < ring.num_even()) {
            m.even[var] = 1;
        } else {
            m.odd = std::uint64_t{1} << (var - ring.num_even());
        }
        return m;
    }

    unsigned odd_degree() const { return static_cast<unsigned>(std::popcount(odd)); }

    unsigned degree() const
    {
        unsigned d = odd_degree();
        for (auto e : even) d += e;
        return d;
    }

    Parity parity() const { return parity_of(odd_degree()); }

    bool is_one() const
    {
        return odd == 0 && std::all_of(even.begin(), even.end(), [](auto e) { return e == 0; });
    }

    // Exponent of global variable `var`.
    unsigned exponent(std::size_t var) const
    {
        if (var < even.size()) return even[var];
        return static_cast<unsigned>((odd >> (var - even.size())) & 1U);
    }

    bool divides(const Monomial &other) const
    {
        if ((odd & ~other.odd) != 0) return false;
        for (std::size_t i = 0; i < even.size(); ++i) {
            if (even[i] > other.even[i]) return false;
        }
        return true;
    }

    friend bool operator==(const Monomial &a, const Monomial &b) { return a.odd == b.odd && a.even == b.even; }
};

/// Sign of moving the odd factors of `b` past those of `a` into ascending order:
/// (z_A)(z_B) = sign * z_{A∪B}. Zero when the odd sets overlap.
inline int odd_merge_sign(std::uint64_t a, std::uint64_t b)
{
    if ((a & b) != 0) return 0;
    unsigned inversions = 0;
    std::uint64_t rest = b;
    while (rest != 0) {
        const int j = std::countr_zero(rest);
        rest &= rest - 1;
        const std::uint64_t above = (j == 63) ? 0 : (~std::uint64_t{0} << (j + 1));
        inversions += static_cast<unsigned>(std::popcount(a & above));
    }
    return (inversions & 1U) ? -1 : 1;
}

// Product of canonical monomials; `sign` receives 0, 1 or -1.
inline Monomial multiply(const Monomial &a, const Monomial &b, int &sign)
{
    sign = odd_merge_sign(a.odd, b.odd);
    Monomial r;
    if (sign == 0) return r;
    r.even.resize(a.even.size());
    for (std::size_t i = 0; i < a.even.size(); ++i) {
        r.even[i] = static_cast<std::uint16_t>(a.even[i] + b.even[i]);
    }
    r.odd = a.odd | b.odd;
    return r;
}

// Quotient a/b for b | a; sign such that a = sign * b * (a/b).
inline Monomial divide(const Monomial &a, const Monomial &b, int &sign)
{
    Monomial q(a.even.size());
    for (std::size_t i = 0; i < a.even.size(); ++i) {
        q.even[i] = static_cast<std::uint16_t>(a.even[i] - b.even[i]);
    }
    q.odd = a.odd & ~b.odd;
    sign = odd_merge_sign(b.odd, q.odd);
    return q;
}

/// Graded lexicographic comparison: total degree first, then exponents in
/// declaration order, even variables before odd ones. Returns <0, 0, >0.
inline int compare_grlex(const Monomial &a, const Monomial &b)
{
    const unsigned da = a.degree(), db = b.degree();
    if (da != db) return da < db ? -1 : 1;
    for (std::size_t i = 0; i < a.even.size(); ++i) {
        if (a.even[i] != b.even[i]) return a.even[i] < b.even[i] ? -1 : 1;
    }
    if (a.odd != b.odd) {
        // Lowest differing odd index decides; having it is larger.
        const std::uint64_t diff = a.odd ^ b.odd;
        const std::uint64_t low = diff & (~diff + 1);
        return (a.odd & low) ? 1 : -1;
    }
    return 0;
}

/// Map ordering that puts the grlex-largest monomial first.
struct LeadingFirst {
    bool operator()(const Monomial &a, const Monomial &b) const { return compare_grlex(a, b) > 0; }
};

/// All monomials of total degree <= max_degree whose variables lie in
/// `allowed` (empty mask = every variable), in increasing degree.
inline std::vector<Monomial> monomials_up_to(const FreeSuperalgebra &ring, unsigned max_degree,
                                             const std::vector<bool> &allowed = {})
{
    const std::size_t m = ring.num_even(), n = ring.num_odd();
    auto ok = [&](std::size_t v) { return allowed.empty() || allowed[v]; };
    std::vector<Monomial> out;
    // Odd subsets grouped by size.
    std::vector<std::vector<std::uint64_t>> odd_by_size(n + 1);
    {
        std::vector<std::uint64_t> cur{0};
        odd_by_size[0].push_back(0);
        for (std::size_t k = 1; k <= n && k <= max_degree; ++k) {
            std::vector<std::uint64_t> next;
            for (auto s : cur) {
                const int top = s == 0 ? -1 : 63 - std::countl_zero(s);
                for (std::size_t j = static_cast<std::size_t>(top + 1); j < n; ++j) {
                    if (!ok(m + j)) continue;
                    next.push_back(s | (std::uint64_t{1} << j));
                }
            }
            odd_by_size[k] = next;
            cur = std::move(next);
        }
    }
    for (unsigned deg = 0; deg <= max_degree; ++deg) {
        for (unsigned k = 0; k <= std::min<unsigned>(deg, static_cast<unsigned>(n)); ++k) {
            const unsigned ed = deg - k;
            // Enumerate even exponent vectors of total degree ed.
            Monomial base(m);
            std::function<void(std::size_t, unsigned)> rec = [&](std::size_t i, unsigned left) {
                if (i == m) {
                    if (left != 0) return;
                    for (auto s : odd_by_size[k]) {
                        Monomial mm = base;
                        mm.odd = s;
                        out.push_back(std::move(mm));
                    }
                    return;
                }
                if (!ok(i)) {
                    base.even[i] = 0;
                    rec(i + 1, left);
                    return;
                }
                for (unsigned e = left + 1; e-- > 0;) {
                    base.even[i] = static_cast<std::uint16_t>(e);
                    rec(i + 1, left - e);
                }
                base.even[i] = 0;
            };
            rec(0, ed);
        }
    }
    return out;
}

} // namespace superhopf

#endif
