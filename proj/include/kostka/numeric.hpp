#ifndef KOSTKA_NUMERIC_HPP
#define KOSTKA_NUMERIC_HPP

#include <gmpxx.h>

#include <string>

namespace kostka {

// All arithmetic is exact; integer overflow is out of contract.
using Integer = mpz_class;
using Rational = mpq_class;

inline bool is_integer(const Rational& r) { return r.get_den() == 1; }

inline std::string rational_to_string(const Rational& r) {
    return r.get_str();
}

inline Rational rational_from_string(const std::string& s) {
    Rational r(s);
    r.canonicalize();
    return r;
}

inline Integer factorial(long n) {
    Integer f = 1;
    for (long i = 2; i <= n; ++i) f *= i;
    return f;
}

inline Integer integer_pow(long base, long exp) {
    Integer r;
    mpz_ui_pow_ui(r.get_mpz_t(), static_cast<unsigned long>(base),
                  static_cast<unsigned long>(exp));
    return r;
}

} // namespace kostka

#endif
