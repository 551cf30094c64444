#include "mirrad/envelopes.hpp"

#include <cmath>
#include <cstddef>
#include <stdexcept>

namespace mirrad {
namespace {

// Taylor coefficients of x^(2j), j = 0..13. Generated from exact rational
// arithmetic and frozen; truncation error at x = 0.5 is below 1e-22.
constexpr std::array<double, 14> kF1Series = {
    9.33333333333333348e-01, -4.95238095238095255e-01, 8.04232804232804244e-02,
    -6.41333974667307981e-03, 3.05866972533639194e-04, -9.73512084623195806e-06,
    2.21839001795428797e-07, -3.80140272354468011e-09, 5.07961977150042233e-11,
    -5.44324648329426061e-13, 4.78291822138643206e-15, -3.50925202433498733e-17,
    2.18257683768275843e-19, -1.16543035589430199e-21};

constexpr std::array<double, 14> kF2Series = {
    7.33333333333333282e-01, -9.71428571428571419e-01, 2.43386243386243373e-01,
    -2.60381593714927063e-02, 1.55400155400155400e-03, -5.93316148871704416e-05,
    1.57608872205822102e-06, -3.08379098491634754e-08, 4.63168966437720353e-10,
    -5.51017164497410743e-12, 5.32188885678146998e-14, -4.25677077746387816e-16,
    2.86635882164033159e-18, -1.64737008542000462e-20};

constexpr std::array<double, 14> kF3Series = {
    3.33333333333333315e-01, -1.33333333333333331e-01, 1.90476190476190493e-02,
    -1.41093474426807770e-03, 6.41333974667307970e-05, -1.97333530666863995e-06,
    4.38518957037475544e-08, -7.37006650483152152e-10, 9.69745592740989724e-12,
    -1.02618581242432777e-13, 8.92335489064632877e-16, -6.48971264774278404e-18,
    4.00599546156962017e-20, -2.12519653133666848e-22};

constexpr std::array<double, 14> kF4Series = {
    6.66666666666666630e-01, -8.00000000000000044e-01, 1.90476190476190466e-01,
    -1.97530864197530860e-02, 1.15440115440115440e-03, -4.34133767467100815e-05,
    1.14014928829743643e-06, -2.21101995144945666e-08, 3.29713501531936500e-10,
    -3.89950608721244526e-12, 3.74780905407145769e-14, -2.98526781796168074e-16,
    2.00299773078481012e-18, -1.14760612692180090e-20};

constexpr std::array<double, 14> kF5Series = {
    3.33333333333333315e-01, 1.33333333333333331e-01, -5.71428571428571411e-02,
    7.05467372134038762e-03, -4.48933782267115606e-04, 1.77600177600177600e-05,
    -4.82370852741223144e-07, 9.58108645628097776e-09, -1.45461838911148462e-10,
    1.74451588112135723e-12, -1.69543742922280235e-14, 1.36283965602598464e-16,
    -9.21378956161012525e-19, 5.31299132834167082e-21};

constexpr std::array<double, 14> kV0Series = {
    2.00000000000000000e+00, -1.33333333333333326e+00, 2.66666666666666663e-01,
    -2.53968253968253968e-02, 1.41093474426807770e-03, -5.13067179733846430e-05,
    1.31555687111242656e-06, -2.50582261164271744e-08, 3.68503325241576076e-10,
    -4.30998041218217646e-12, 4.10474324969731131e-14, -3.24485632387139219e-16,
    2.16323754924759481e-18, -1.23261398817526764e-20};

constexpr std::array<double, 14> kV2Series = {
    4.00000000000000022e-01, -5.71428571428571397e-01, 1.48148148148148140e-01,
    -1.61616161616161616e-02, 9.76800976800976800e-04, -3.76249265138154008e-05,
    1.00601407790950280e-06, -1.97828100919161921e-08, 2.98312215671752103e-10,
    -3.56041860136788480e-12, 3.44798432974574145e-14, -2.76413686848303779e-16,
    1.86485995624792633e-18, -1.07356702195910402e-20};

double eval_series(const std::array<double, 14>& c, double x) {
    const double x2 = x * x;
    double acc = c[13];
    for (std::size_t j = 13; j-- > 0;) acc = acc * x2 + c[j];
    return acc;
}

double closed_f1(double x) {
    const double x2 = x * x, x3 = x2 * x, x4 = x2 * x2, x5 = x4 * x;
    const double c = std::cos(2.0 * x), s = std::sin(2.0 * x);
    return 3.0 * (1.0 / x4 - 0.5 / x2) * c + 0.5 * (-3.0 / x5 + 5.5 / x3) * s;
}

double closed_f2(double x) {
    const double x2 = x * x, x3 = x2 * x, x4 = x2 * x2, x5 = x4 * x;
    const double c = std::cos(2.0 * x), s = std::sin(2.0 * x);
    return (-3.0 / x4 + 2.5 / x2) * c + 0.25 * (6.0 / x5 - 13.0 / x3 + 6.0 / x) * s;
}

double closed_f3(double x) {
    const double x2 = x * x, x3 = x2 * x;
    return -std::cos(2.0 * x) / (4.0 * x2) + std::sin(2.0 * x) / (8.0 * x3);
}

double closed_f4(double x) {
    const double x2 = x * x, x3 = x2 * x;
    return std::cos(2.0 * x) / x2 - (0.5 / x3 - 1.0 / x) * std::sin(2.0 * x);
}

double closed_f5(double x) {
    const double x2 = x * x, x3 = x2 * x;
    return -std::cos(2.0 * x) / x2 + 0.5 * (1.0 / x3 - 1.0 / x) * std::sin(2.0 * x);
}

const std::array<double, 14>& series_table(int index) {
    switch (index) {
        case 1: return kF1Series;
        case 2: return kF2Series;
        case 3: return kF3Series;
        case 5: return kF5Series;
        case 4:
        case 6: return kF4Series;
        default: throw std::invalid_argument("envelope index must be 1..6");
    }
}

}  // namespace

double envelope_f1(double x) {
    x = std::abs(x);
    return x < kEnvelopeSwitch ? eval_series(kF1Series, x) : closed_f1(x);
}

double envelope_f2(double x) {
    x = std::abs(x);
    return x < kEnvelopeSwitch ? eval_series(kF2Series, x) : closed_f2(x);
}

double envelope_f3(double x) {
    x = std::abs(x);
    return x < kEnvelopeSwitch ? eval_series(kF3Series, x) : closed_f3(x);
}

double envelope_f4(double x) {
    x = std::abs(x);
    return x < kEnvelopeSwitch ? eval_series(kF4Series, x) : closed_f4(x);
}

double envelope_f5(double x) {
    x = std::abs(x);
    return x < kEnvelopeSwitch ? eval_series(kF5Series, x) : closed_f5(x);
}

double envelope_f6(double x) { return envelope_f4(x); }

double cosine_moment(int n, double x) {
    x = std::abs(x);
    switch (n) {
        case 0:
            if (x < kEnvelopeSwitch) return eval_series(kV0Series, x);
            return std::sin(2.0 * x) / x;
        case 1:
            // integral of u^2 cos(2xu) equals the EB-perpendicular envelope.
            return envelope_f4(x);
        case 2: {
            if (x < kEnvelopeSwitch) return eval_series(kV2Series, x);
            const double c = 2.0 * x;
            const double c2 = c * c, c3 = c2 * c, c4 = c2 * c2, c5 = c4 * c;
            return 2.0 * ((1.0 / c - 12.0 / c3 + 24.0 / c5) * std::sin(c) +
                          (4.0 / c2 - 24.0 / c4) * std::cos(c));
        }
        default:
            throw std::invalid_argument("cosine_moment: n must be 0, 1, or 2");
    }
}

namespace envelope_detail {

double series_form(int index, double x) { return eval_series(series_table(index), std::abs(x)); }

double closed_form(int index, double x) {
    x = std::abs(x);
    if (!(x > 0.0)) throw std::invalid_argument("closed_form: x must be non-zero");
    switch (index) {
        case 1: return closed_f1(x);
        case 2: return closed_f2(x);
        case 3: return closed_f3(x);
        case 5: return closed_f5(x);
        case 4:
        case 6: return closed_f4(x);
        default: throw std::invalid_argument("envelope index must be 1..6");
    }
}

}  // namespace envelope_detail
}  // namespace mirrad
