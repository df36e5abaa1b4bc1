#ifndef SUPERHOPF_RATIONAL_HPP
#define SUPERHOPF_RATIONAL_HPP

#include <cstdint>
#include <stdexcept>
#include <string>

#include <gmpxx.h>

namespace superhopf
{

using Rational = mpq_class;

inline Rational make_rational(long num, long den = 1)
{
    Rational r(num, den);
    r.canonicalize();
    return r;
}

// "p/q" or "p"; throws std::invalid_argument on malformed input.
inline Rational parse_rational(const std::string &text)
{
    Rational r;
    if (r.set_str(text, 10) != 0) {
        throw std::invalid_argument("malformed rational: " + text);
    }
    if (r.get_den() == 0) {
        throw std::invalid_argument("zero denominator: " + text);
    }
    r.canonicalize();
    return r;
}

inline std::string to_string(const Rational &r)
{
    return r.get_str(10);
}

inline bool is_zero(const Rational &r)
{
    return sgn(r) == 0;
}

inline Rational factorial(unsigned n)
{
    mpz_class f;
    mpz_fac_ui(f.get_mpz_t(), n);
    return Rational(f);
}

} // namespace superhopf

#endif
