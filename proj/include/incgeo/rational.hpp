#ifndef INCGEO_RATIONAL_HPP
#define INCGEO_RATIONAL_HPP

#include <gmpxx.h>

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace incgeo {

// Exact rational scalar. mpq_class keeps values canonical (lowest terms,
// positive denominator), which is exactly the invariant we need.
using Rat = mpq_class;
using Int = mpz_class;

// Parses "num/den" or a bare integer string.
inline Rat rat_from_string(const std::string& s) {
    if (s.empty()) throw std::invalid_argument("empty rational literal");
    Rat r;
    if (mpq_set_str(r.get_mpq_t(), s.c_str(), 10) != 0)
        throw std::invalid_argument("bad rational literal: " + s);
    if (r.get_den() == 0) throw std::invalid_argument("zero denominator: " + s);
    r.canonicalize();
    return r;
}

// "num/den", or just "num" when the denominator is 1.
inline std::string rat_to_string(const Rat& r) { return r.get_str(); }

inline Rat rat_pow(const Rat& base, unsigned long exp) {
    Rat out;
    mpz_pow_ui(mpq_numref(out.get_mpq_t()), mpq_numref(base.get_mpq_t()), exp);
    mpz_pow_ui(mpq_denref(out.get_mpq_t()), mpq_denref(base.get_mpq_t()), exp);
    return out;
}

inline bool rat_is_integer(const Rat& r) { return r.get_den() == 1; }

// Decimal rendering for display only; all comparisons stay rational.
inline std::string rat_to_decimal(const Rat& r, int digits = 6) {
    mpf_class f(r, 64);
    mp_exp_t exp;
    std::string mant = f.get_str(exp, 10, digits);
    if (mant.empty()) return "0";
    std::string sign;
    if (mant[0] == '-') {
        sign = "-";
        mant = mant.substr(1);
    }
    std::string out;
    if (exp <= 0) {
        out = "0." + std::string(static_cast<size_t>(-exp), '0') + mant;
    } else if (static_cast<size_t>(exp) >= mant.size()) {
        out = mant + std::string(static_cast<size_t>(exp) - mant.size(), '0');
    } else {
        out = mant.substr(0, static_cast<size_t>(exp)) + "." + mant.substr(static_cast<size_t>(exp));
    }
    return sign + out;
}

}  // namespace incgeo

#endif
