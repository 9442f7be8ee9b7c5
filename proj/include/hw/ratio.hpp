#pragma once

#include <compare>
#include <numeric>
#include <string>

#include "hw/errors.hpp"

namespace hw {

/// Exact rational with positive denominator. Comparison is always by
/// cross-multiplication on 128-bit products; nothing here ever rounds.
/// The stored form is whatever the producer supplied (tables are quoted in
/// unreduced form, so reduction only happens on request).
struct Ratio {
    long long num = 0;
    long long den = 1;

    Ratio() = default;
    Ratio(long long n, long long d) : num(n), den(d) {
        if (den == 0) throw InvalidParameters("ratio with zero denominator");
        if (den < 0) {
            num = -num;
            den = -den;
        }
    }

    /// Ratio of two local_ww values in the conventional half form
    /// (local_ww is always even: every d^2+d term is).
    static Ratio of_local_ww(long long ww_num, long long ww_den) {
        return Ratio(ww_num / 2, ww_den / 2);
    }

    Ratio reduced() const {
        long long g = std::gcd(num < 0 ? -num : num, den);
        if (g == 0) return Ratio(0, 1);
        return Ratio(num / g, den / g);
    }

    bool is_integer() const { return num % den == 0; }

    static int cmp(const Ratio& a, const Ratio& b) {
        __int128 l = static_cast<__int128>(a.num) * b.den;
        __int128 r = static_cast<__int128>(b.num) * a.den;
        return l < r ? -1 : (l > r ? 1 : 0);
    }

    friend bool operator==(const Ratio& a, const Ratio& b) { return cmp(a, b) == 0; }
    friend std::strong_ordering operator<=>(const Ratio& a, const Ratio& b) {
        int c = cmp(a, b);
        return c < 0 ? std::strong_ordering::less
                     : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
    }

    std::string plain() const { return std::to_string(num) + "/" + std::to_string(den); }

    /// Display form: integers bare, otherwise the stored form, with the
    /// reduced form appended when it differs ("39/21 (=13/7)").
    std::string str() const {
        if (is_integer()) return std::to_string(num / den);
        Ratio r = reduced();
        if (r.num == num && r.den == den) return plain();
        return plain() + " (=" + r.plain() + ")";
    }
};

}  // namespace hw
