#include "fracdyn/detail/ddouble.hpp"

#include <array>
#include <cmath>
#include <limits>

#include "fracdyn/errors.hpp"

namespace fracdyn::detail {

namespace {

// 1/k! for k = 3..14, computed once in double-double (factorials up to 14!
// are exact doubles, so the division is correct to working precision).
const std::array<DDouble, 12>& inv_factorials() {
    static const std::array<DDouble, 12> table = [] {
        std::array<DDouble, 12> t{};
        double f = 2.0;
        for (int k = 3; k <= 14; ++k) {
            f *= k;
            t[static_cast<std::size_t>(k - 3)] = dd_div(DDouble{1.0}, DDouble{f});
        }
        return t;
    }();
    return table;
}

// Stirling coefficients B_{2n} / (2n(2n-1)), n = 1..13, as exact rationals.
const std::array<DDouble, 13>& stirling_coeffs() {
    static const std::array<DDouble, 13> table = [] {
        constexpr double num[13] = {1.0,    -1.0,    1.0,      -1.0,      1.0,
                                    -691.0, 1.0,     -3617.0,  43867.0,   -174611.0,
                                    854513.0, -236364091.0, 8553103.0};
        constexpr double den[13] = {12.0,     360.0,     1260.0,   1680.0,   1188.0,
                                    360360.0, 156.0,     122400.0, 244188.0, 125400.0,
                                    63756.0,  1506960.0, 3900.0};
        std::array<DDouble, 13> t{};
        for (std::size_t n = 0; n < 13; ++n)
            t[n] = dd_div(DDouble{num[n]}, DDouble{den[n]});
        return t;
    }();
    return table;
}

const DDouble& half_ln_two_pi() {
    static const DDouble value = dd_mul_pwr2(dd_ln(dd_mul_pwr2(dd_pi, 2.0)), 0.5);
    return value;
}

// Stirling series needs the argument at least this large for the tail after
// 13 Bernoulli terms to sit below working precision.
constexpr double kStirlingMin = 32.0;

} // namespace

DDouble dd_exp(const DDouble& a) {
    // exp(a) = 2^m * (exp(r))^512 with r = (a - m ln2)/512 kept tiny.
    if (a.hi <= -709.0) return DDouble{0.0};
    if (a.hi >= 709.0) return DDouble{std::numeric_limits<double>::infinity()};
    if (a.hi == 0.0 && a.lo == 0.0) return DDouble{1.0};

    const double m = std::floor(a.hi / dd_ln2.hi + 0.5);
    const DDouble r = dd_mul_pwr2(dd_sub(a, dd_mul(dd_ln2, m)), 1.0 / 512.0);

    // Taylor for exp(r) - 1.
    DDouble p = dd_mul(r, r);
    DDouble s = dd_add(r, dd_mul_pwr2(p, 0.5));
    p = dd_mul(p, r);
    const auto& inv_fact = inv_factorials();
    DDouble t = dd_mul(p, inv_fact[0]);
    const double thresh = 1e-35;
    std::size_t i = 0;
    for (;;) {
        s = dd_add(s, t);
        if (std::fabs(t.hi) <= thresh || i + 1 >= inv_fact.size()) break;
        p = dd_mul(p, r);
        ++i;
        t = dd_mul(p, inv_fact[i]);
    }

    // (1+p)^2 - 1 = 2p + p^2, nine times for the 512th power.
    for (int j = 0; j < 9; ++j)
        s = dd_add(dd_mul_pwr2(s, 2.0), dd_mul(s, s));
    s = dd_add(s, 1.0);
    return dd_mul_pwr2(s, std::ldexp(1.0, static_cast<int>(m)));
}

DDouble dd_ln(const DDouble& a) {
    if (!(a.hi > 0.0))
        throw DomainError("dd_ln: argument must be positive");
    // Newton on x -> x + a e^{-x} - 1 starting from the double log;
    // each step doubles the correct digits.
    DDouble x{std::log(a.hi)};
    for (int it = 0; it < 2; ++it)
        x = dd_add(x, dd_sub(dd_mul(a, dd_exp(dd_neg(x))), DDouble{1.0}));
    return x;
}

DDouble dd_lgamma(const DDouble& x) {
    if (!(x.hi > 0.0))
        throw DomainError("dd_lgamma: argument must be positive");

    // Shift into the Stirling regime, collecting the recurrence product.
    DDouble y = x;
    DDouble log_shift{0.0};
    if (y.hi < kStirlingMin) {
        DDouble prod{1.0};
        while (y.hi < kStirlingMin) {
            prod = dd_mul(prod, y);
            y = dd_add(y, 1.0);
        }
        log_shift = dd_ln(prod);
    }

    const DDouble w = dd_div(DDouble{1.0}, dd_mul(y, y));
    const auto& c = stirling_coeffs();
    DDouble ser{0.0};
    for (int n = 12; n >= 0; --n)
        ser = dd_add(c[static_cast<std::size_t>(n)], dd_mul(ser, w));
    ser = dd_div(ser, y);

    // lnGamma(y) = (y - 1/2) ln y - y + ln(2 pi)/2 + series
    DDouble lg = dd_mul(dd_sub(y, DDouble{0.5}), dd_ln(y));
    lg = dd_sub(lg, y);
    lg = dd_add(lg, half_ln_two_pi());
    lg = dd_add(lg, ser);
    return dd_sub(lg, log_shift);
}

} // namespace fracdyn::detail
