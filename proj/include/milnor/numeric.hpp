#pragma once

#include <gmpxx.h>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace milnor {

using ZZ = mpz_class;
using QQ = mpq_class;

/// Quotient of a by b rounded to the nearest integer, ties toward zero.
/// Used by the Smith reduction to keep remainders at most |b|/2.
inline ZZ rounded_div(const ZZ& a, const ZZ& b) {
    ZZ q, r;
    mpz_fdiv_qr(q.get_mpz_t(), r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    // fdiv gives 0 <= r < |b| for b > 0, -|b| < r <= 0 for b < 0.
    ZZ b_abs = abs(b);
    if (2 * abs(r) > b_abs) {
        q += (b > 0) == (r > 0) ? 1 : -1;
    }
    return q;
}

inline std::string to_fraction_string(const QQ& q) {
    QQ c(q);
    c.canonicalize();
    return c.get_num().get_str() + "/" + c.get_den().get_str();
}

inline QQ parse_fraction(const std::string& s) {
    auto slash = s.find('/');
    QQ q;
    if (slash == std::string::npos) {
        q = QQ(ZZ(s));
    } else {
        q = QQ(ZZ(s.substr(0, slash)), ZZ(s.substr(slash + 1)));
    }
    q.canonicalize();
    return q;
}

inline std::int64_t to_int64(const ZZ& z) {
    if (!z.fits_slong_p())
        throw std::overflow_error("integer does not fit in 64 bits: " + z.get_str());
    return z.get_si();
}

inline ZZ factorial(int n) {
    ZZ f;
    mpz_fac_ui(f.get_mpz_t(), static_cast<unsigned long>(n));
    return f;
}

inline ZZ binomial(int n, int k) {
    if (k < 0 || k > n) return 0;
    ZZ b;
    mpz_bin_uiui(b.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
    return b;
}

} // namespace milnor
