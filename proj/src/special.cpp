#include "varextropy/special.hpp"

#include <array>
#include <cmath>
#include <numbers>
#include <string>

#include "varextropy/errors.hpp"

namespace varextropy {

namespace {

constexpr double kLanczosG = 7.0;
constexpr std::array<double, 9> kLanczosCoef = {
    0.99999999999980993,     676.5203681218851,     -1259.1392167224028,
    771.32342877765313,      -176.61502916214059,   12.507343278686905,
    -0.13857109526572012,    9.9843695780195716e-6, 1.5056327351493116e-7};

// zeta(k) - 1 for k = 2, 3, ...
constexpr std::array<double, 40> kZetaMinusOne = {
    0.64493406684822643647, 0.2020569031595942854,   0.082323233711138191516,
    0.036927755143369926331, 0.017343061984449139715, 0.0083492773819228268398,
    0.0040773561979443393787, 0.0020083928260822144179, 0.00099457512781808533715,
    0.0004941886041194645587, 0.00024608655330804829864, 0.00012271334757848914675,
    6.1248135058704829259e-5, 3.0588236307020493552e-5, 1.5282259408651871733e-5,
    7.6371976378997622736e-6, 3.8172932649998398565e-6, 1.9082127165539389257e-6,
    9.5396203387279611315e-7, 4.7693298678780646312e-7, 2.3845050272773299e-7,
    1.1921992596531107307e-7, 5.9608189051259479612e-8, 2.9803503514652280186e-8,
    1.4901554828365041235e-8, 7.450711789835429492e-9,  3.7253340247884570548e-9,
    1.8626597235130490064e-9, 9.3132743241966818287e-10, 4.656629065033784073e-10,
    2.328311833676505492e-10, 1.1641550172700519776e-10, 5.8207720879027008892e-11,
    2.9103850444970996869e-11, 1.4551921891041984236e-11, 7.2759598350574810145e-12,
    3.6379795473786511902e-12, 1.8189896503070659476e-12, 9.0949478402638892825e-13,
    4.5474737830421540268e-13};

constexpr double kEulerGamma = 0.57721566490153286061;

// ln Gamma(1 + z) for |z| <= 0.5. Taylor series around 1 with the slowly
// converging part of zeta(k) folded into -ln(1 + z).
double log_gamma_near_one(double z) {
    double sum = 0.0;
    double power = -z;
    for (std::size_t i = 0; i < kZetaMinusOne.size(); ++i) {
        power *= -z;
        const double k = static_cast<double>(i + 2);
        sum += kZetaMinusOne[i] * power / k;
    }
    return -std::log1p(z) + z * (1.0 - kEulerGamma) + sum;
}

double lanczos_log_gamma(double x) {
    const double z = x - 1.0;
    double series = kLanczosCoef[0];
    for (std::size_t k = 1; k < kLanczosCoef.size(); ++k) {
        series += kLanczosCoef[k] / (z + static_cast<double>(k));
    }
    const double t = z + kLanczosG + 0.5;
    return 0.5 * std::log(2.0 * std::numbers::pi) + (z + 0.5) * std::log(t) - t + std::log(series);
}

}  // namespace

double log_gamma(double x) {
    if (!(x > 0.0) || !std::isfinite(x)) {
        throw InvalidParameter("log_gamma requires a finite positive argument, got " +
                               std::to_string(x));
    }
    // The roots at 1 and 2 need the local series for relative accuracy.
    if (x >= 0.5 && x <= 1.5) return log_gamma_near_one(x - 1.0);
    if (x > 1.5 && x <= 2.5) return log_gamma_near_one(x - 2.0) + std::log1p(x - 2.0);
    if (x < 0.5) {
        return std::log(std::numbers::pi / std::sin(std::numbers::pi * x)) - log_gamma(1.0 - x);
    }
    return lanczos_log_gamma(x);
}

double log_beta(double a, double b) { return log_gamma(a) + log_gamma(b) - log_gamma(a + b); }

}  // namespace varextropy
