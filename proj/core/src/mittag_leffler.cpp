#include "fracdyn/mittag_leffler.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <memory>
#include <mutex>
#include <sstream>
#include <utility>
#include <vector>

#include "fracdyn/detail/ddouble.hpp"

namespace fracdyn {

using detail::DDouble;

std::complex<double> i_pow_minus_alpha(double alpha) {
    const double h = 0.5 * 3.14159265358979323846 * alpha;
    return {std::cos(h), -std::sin(h)};
}

std::complex<double> minus_one_pow(double exponent) {
    const double p = 3.14159265358979323846 * exponent;
    return {std::cos(p), std::sin(p)};
}

namespace {

constexpr std::size_t kMaxTerms = 4096;
constexpr double kGrowthLimit = 600.0;   // |z|^{1/alpha} beyond this overflows the summation
constexpr double kRoundPerTerm = 5e-28;  // per-term double-double rounding allowance

// Per-alpha table of gamma data: term ratios Gamma(ak+1)/Gamma(a(k+1)+1)
// let the series advance by one multiply per term without ever forming a
// gamma value that overflows.
struct GammaTable {
    double alpha = 0.0;
    std::size_t terms = 0;          // ratio[k] valid for k < terms - 1
    std::vector<DDouble> ratio;
    DDouble inv_gamma_alpha_p1;
};

std::shared_ptr<const GammaTable> build_table(double alpha, std::size_t n) {
    auto table = std::make_shared<GammaTable>();
    table->alpha = alpha;
    table->terms = n;
    std::vector<DDouble> lg(n);
    for (std::size_t k = 0; k < n; ++k) {
        double err;
        const double p = detail::two_prod(alpha, static_cast<double>(k), err);
        lg[k] = detail::dd_lgamma(dd_add(DDouble{p, err}, 1.0));
    }
    table->ratio.resize(n - 1);
    for (std::size_t k = 0; k + 1 < n; ++k)
        table->ratio[k] = detail::dd_exp(dd_sub(lg[k], lg[k + 1]));
    table->inv_gamma_alpha_p1 = detail::dd_exp(detail::dd_neg(lg[1]));
    return table;
}

std::shared_ptr<const GammaTable> gamma_table(double alpha, std::size_t min_terms) {
    static std::mutex mutex;
    static std::map<double, std::shared_ptr<const GammaTable>> cache;

    std::size_t n = 128;
    while (n < min_terms) n *= 2;

    std::lock_guard<std::mutex> lock(mutex);
    auto it = cache.find(alpha);
    if (it != cache.end() && it->second->terms >= min_terms)
        return it->second;
    auto table = build_table(alpha, n);
    cache[alpha] = table;
    return table;
}

[[noreturn]] void throw_nonconvergence(double alpha, std::complex<double> z,
                                       const char* why) {
    std::ostringstream os;
    os << "ml(alpha=" << alpha << ", z=" << z.real() << (z.imag() < 0 ? "" : "+")
       << z.imag() << "i): " << why;
    throw NonConvergence(os.str());
}

} // namespace

double inv_gamma_alpha_plus_one(FractionalOrder alpha) {
    return gamma_table(alpha.alpha, 2)->inv_gamma_alpha_p1.to_double();
}

MLResult ml(FractionalOrder alpha, std::complex<double> z, double tol) {
    if (!(tol > 0.0))
        throw DomainError("ml: tol must be positive");
    if (!std::isfinite(z.real()) || !std::isfinite(z.imag()))
        throw DomainError("ml: non-finite argument");

    const double az = std::abs(z);
    if (az == 0.0)
        return {std::complex<double>{1.0, 0.0}, 0.0};
    if (std::pow(az, 1.0 / alpha.alpha) > kGrowthLimit)
        throw_nonconvergence(alpha.alpha, z, "series peak term exceeds double range");

    auto table = gamma_table(alpha.alpha, 128);

    DDouble sum_re{1.0}, sum_im{0.0};   // k = 0 term is exactly 1
    DDouble t_re{1.0}, t_im{0.0};
    double sum_abs = 1.0;
    double mag_prev = 1.0;
    const double zr = z.real(), zi = z.imag();

    for (std::size_t k = 0;;) {
        if (k + 2 >= table->terms) {
            if (table->terms >= kMaxTerms)
                throw_nonconvergence(alpha.alpha, z, "term budget exhausted");
            table = gamma_table(alpha.alpha, table->terms * 2);
        }

        // term_{k+1} = term_k * z * Gamma(ak+1)/Gamma(a(k+1)+1)
        const DDouble& r = table->ratio[k];
        const DDouble n_re =
            dd_mul(dd_sub(dd_mul(t_re, zr), dd_mul(t_im, zi)), r);
        const DDouble n_im =
            dd_mul(dd_add(dd_mul(t_re, zi), dd_mul(t_im, zr)), r);
        t_re = n_re;
        t_im = n_im;
        ++k;
        sum_re = dd_add(sum_re, t_re);
        sum_im = dd_add(sum_im, t_im);

        const double mag = std::hypot(t_re.hi, t_im.hi);
        sum_abs += mag;

        if (k >= 2 && mag < mag_prev) {
            // Ratios |t_{j+1}|/|t_j| = |z| ratio[j] decrease in j, so once the
            // next one is below 1 the tail is geometrically bounded by it.
            const double r_next = az * table->ratio[k].hi;
            if (r_next < 1.0) {
                const double tail = mag * r_next / (1.0 - r_next);
                const double rounding =
                    sum_abs * static_cast<double>(k) * kRoundPerTerm;
                const std::complex<double> value{sum_re.to_double(),
                                                 sum_im.to_double()};
                const double bound = tail + rounding + std::abs(value) * 0x1p-53;
                if (bound <= tol * std::max(1.0, std::abs(value)))
                    return {value, bound};
                // Once truncation is far below the rounding floor, more terms
                // cannot help: the cancellation has outrun working precision.
                if (tail < 0.01 * rounding &&
                    bound > tol * std::max(1.0, std::abs(value)))
                    throw_nonconvergence(alpha.alpha, z,
                                         "rounding floor above requested tolerance");
            }
        }
        mag_prev = mag;

        if (k >= kMaxTerms)
            throw_nonconvergence(alpha.alpha, z, "term budget exhausted");
    }
}

MLResult frac_cos(FractionalOrder alpha, std::complex<double> x, double tol) {
    const auto u = i_pow_minus_alpha(alpha.alpha);
    const auto ep = ml(alpha, u * x, tol);
    const auto em = ml(alpha, -(u * x), tol);
    const std::complex<double> value = 0.5 * (ep.value + em.value);
    return {value, 0.5 * (ep.error_bound + em.error_bound) + std::abs(value) * 0x1p-52};
}

MLResult frac_sin(FractionalOrder alpha, std::complex<double> x, double tol) {
    const auto u = i_pow_minus_alpha(alpha.alpha);
    const auto ep = ml(alpha, u * x, tol);
    const auto em = ml(alpha, -(u * x), tol);
    // 1/(2 i^{-a}) = conj(u)/2 since |u| = 1.
    const std::complex<double> value = 0.5 * std::conj(u) * (ep.value - em.value);
    return {value, 0.5 * (ep.error_bound + em.error_bound) + std::abs(value) * 0x1p-52};
}

} // namespace fracdyn
