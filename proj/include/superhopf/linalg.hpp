#ifndef SUPERHOPF_LINALG_HPP
#define SUPERHOPF_LINALG_HPP

#include <algorithm>
#include <cstddef>
#include <map>
#include <optional>
#include <utility>
#include <vector>

#include <superhopf/superpoly.hpp>

namespace superhopf
{

/// Sparse combination of input rows: input id -> coefficient.
using Combination = std::map<std::size_t, Rational>;

inline void axpy(Combination &target, const Rational &c, const Combination &src)
{
    for (const auto &[i, x] : src) {
        auto [it, inserted] = target.try_emplace(i, c * x);
        if (!inserted) {
            it->second += c * x;
            if (is_zero(it->second)) target.erase(it);
        }
    }
}

// target += c * src, in place.
inline void axpy(SuperPolynomial &target, const Rational &c, const SuperPolynomial &src)
{
    for (const auto &[m, x] : src.terms()) target.add_term(m, c * x);
}

/// Incremental sparse row echelon form keyed by leading monomial.
///
/// Rows are vectors indexed by monomials (stored as polynomials). With
/// tracking on, every stored row remembers its combination of inputs.
class SparseEchelon
{
public:
    explicit SparseEchelon(FreeRingPtr ring, bool track = false) : m_ring(std::move(ring)), m_track(track) {}

    std::size_t rank() const { return m_rows.size(); }
    std::size_t inputs() const { return m_inputs; }
    bool tracking() const { return m_track; }

    /// Insert a vector and return its input id. When it depends on earlier
    /// inputs and tracking is on, `dependency` receives a combination of
    /// inputs (including this one) that sums to zero.
    std::size_t insert(SuperPolynomial v, Combination *dependency = nullptr)
    {
        const std::size_t id = m_inputs++;
        Combination combo;
        if (m_track) combo.emplace(id, Rational(1));
        while (!v.is_zero()) {
            const auto &[m, c] = *v.terms().begin();
            auto it = m_pivots.find(m);
            if (it == m_pivots.end()) break;
            const Rational f = c;
            axpy(v, -f, m_rows[it->second]);
            if (m_track) axpy(combo, -f, m_combos[it->second]);
        }
        if (v.is_zero()) {
            if (dependency) *dependency = std::move(combo);
            return id;
        }
        const Rational lc = v.terms().begin()->second;
        if (lc != 1) {
            const Rational inv = 1 / lc;
            v *= inv;
            for (auto &[i, x] : combo) x *= inv;
        }
        const Monomial lead = v.terms().begin()->first;
        m_pivots.emplace(lead, m_rows.size());
        m_rows.push_back(std::move(v));
        if (m_track) m_combos.push_back(std::move(combo));
        return id;
    }

    bool contains(const SuperPolynomial &v) const
    {
        SuperPolynomial r = v;
        reduce_leading(r, nullptr);
        return r.is_zero();
    }

    /// Reduce until the leading term is not a pivot. With tracking,
    /// `combo` accumulates what was removed: v_in = v_out + sum combo_i * input_i.
    void reduce_leading(SuperPolynomial &v, Combination *combo) const
    {
        while (!v.is_zero()) {
            const auto &[m, c] = *v.terms().begin();
            auto it = m_pivots.find(m);
            if (it == m_pivots.end()) return;
            const Rational f = c;
            remove(v, f, it->second, combo);
        }
    }

    /// Reduce every term that is a pivot; the remainder is a canonical
    /// representative of v modulo the span.
    SuperPolynomial normal_form(SuperPolynomial v, Combination *combo = nullptr) const
    {
        if (m_pivots.empty()) return v;
        std::optional<Monomial> cursor;
        for (;;) {
            const auto &terms = v.terms();
            auto it = cursor ? terms.lower_bound(*cursor) : terms.begin();
            while (it != terms.end() && !m_pivots.count(it->first)) ++it;
            if (it == terms.end()) return v;
            cursor = it->first;
            const Rational f = it->second;
            remove(v, f, m_pivots.at(*cursor), combo);
        }
    }

    const std::vector<SuperPolynomial> &rows() const { return m_rows; }
    const std::vector<Combination> &combinations() const { return m_combos; }

    bool is_pivot(const Monomial &m) const { return m_pivots.count(m) != 0; }

private:
    void remove(SuperPolynomial &v, const Rational &f, std::size_t row, Combination *combo) const
    {
        axpy(v, -f, m_rows[row]);
        if (combo && m_track) axpy(*combo, f, m_combos[row]);
    }

    FreeRingPtr m_ring;
    bool m_track;
    std::size_t m_inputs = 0;
    std::map<Monomial, std::size_t, LeadingFirst> m_pivots;
    std::vector<SuperPolynomial> m_rows;
    std::vector<Combination> m_combos;
};

/// Reduced row echelon form of dense rows, pivoting on the last nonzero
/// column of each row. Zero rows are dropped.
inline std::vector<std::vector<Rational>> rref_from_back(std::vector<std::vector<Rational>> rows)
{
    std::vector<std::vector<Rational>> done;
    if (rows.empty()) return done;
    const std::size_t n = rows.front().size();
    std::vector<bool> used(rows.size(), false);
    for (std::size_t col = n; col-- > 0;) {
        std::size_t pick = rows.size();
        for (std::size_t r = 0; r < rows.size(); ++r) {
            if (!used[r] && !is_zero(rows[r][col])) {
                pick = r;
                break;
            }
        }
        if (pick == rows.size()) continue;
        used[pick] = true;
        const Rational inv = 1 / rows[pick][col];
        for (auto &x : rows[pick]) x *= inv;
        for (std::size_t r = 0; r < rows.size(); ++r) {
            if (r == pick || is_zero(rows[r][col])) continue;
            const Rational f = rows[r][col];
            for (std::size_t k = 0; k < n; ++k) rows[r][k] -= f * rows[pick][k];
        }
    }
    for (std::size_t r = 0; r < rows.size(); ++r) {
        if (used[r]) done.push_back(rows[r]);
    }
    // Order by pivot column ascending.
    auto pivot = [](const std::vector<Rational> &v) {
        std::size_t p = v.size();
        while (p > 0 && is_zero(v[p - 1])) --p;
        return p;
    };
    std::sort(done.begin(), done.end(), [&](const auto &a, const auto &b) { return pivot(a) < pivot(b); });
    return done;
}

/// Basis of {c : sum_i c_i v_i = 0}, in reduced echelon form.
inline std::vector<std::vector<Rational>> kernel_basis(const FreeRingPtr &ring, const std::vector<SuperPolynomial> &vectors)
{
    SparseEchelon ech(ring, true);
    std::vector<std::vector<Rational>> kernel;
    for (const auto &v : vectors) {
        Combination dep;
        const std::size_t before = ech.rank();
        ech.insert(v, &dep);
        if (ech.rank() == before) {
            std::vector<Rational> row(vectors.size(), Rational(0));
            for (const auto &[i, x] : dep) row[i] = x;
            kernel.push_back(std::move(row));
        }
    }
    return rref_from_back(std::move(kernel));
}

/// Basis of span{v_i} in reduced form (leading monomials distinct and
/// eliminated from the other rows), sorted by leading monomial ascending.
inline std::vector<SuperPolynomial> reduced_span(const FreeRingPtr &ring, const std::vector<SuperPolynomial> &vectors)
{
    SparseEchelon ech(ring);
    for (const auto &v : vectors) ech.insert(v);
    std::vector<SuperPolynomial> out;
    for (const auto &r : ech.rows()) {
        // Fully reduce all but the leading term.
        const auto &[lead, lc] = *r.terms().begin();
        SuperPolynomial tail = r - SuperPolynomial::monomial(ring, lead, lc);
        out.push_back(SuperPolynomial::monomial(ring, lead, lc) + ech.normal_form(tail));
    }
    std::sort(out.begin(), out.end(), [](const SuperPolynomial &a, const SuperPolynomial &b) {
        return compare_grlex(a.terms().begin()->first, b.terms().begin()->first) < 0;
    });
    return out;
}

} // namespace superhopf

#endif
