#pragma once

#include <cmath>
#include <numbers>
#include <stdexcept>

// Macdonald functions K0, K1, K2 for positive real argument.
// Split evaluation: power series with the log term for x <= 2, Chebyshev
// expansions of exp(x) sqrt(x) K_nu(x) for x > 2 (SLATEC FNLIB tables).

namespace salpeter {
namespace detail {

// Chebyshev series for e^x K0(x) sqrt(x) - 1.25 on 2 < x <= 8, arg (16/x-5)/3.
inline constexpr double kAk0cs[38] = {
    -0.07643947903327941424082978270088,
    -0.02235652605699819052023095550791,
    7.734181154693858235300618174047e-4,
    -4.281006688886099464452146435416e-5,
    3.08170017386297474365001482666e-6,
    -2.639367222009664974067448892723e-7,
    2.563713036403469206294088265742e-8,
    -2.742705549900201263857211915244e-9,
    3.169429658097499592080832873403e-10,
    -3.902353286962184141601065717962e-11,
    5.068040698188575402050092127286e-12,
    -6.889574741007870679541713557984e-13,
    9.744978497825917691388201336831e-14,
    -1.427332841884548505389855340122e-14,
    2.156412571021463039558062976527e-15,
    -3.34965425514956277218878205853e-16,
    5.335260216952911692145280392601e-17,
    -8.693669980890753807639622378837e-18,
    1.446404347862212227887763442346e-18,
    -2.452889825500129682404678751573e-19,
    4.2337545262321715728217063424e-20,
    -7.427946526454464195695341294933e-21,
    1.3231505293926668662779674624e-21,
    -2.390587164739649451335981465599e-22,
    4.376827585923226140165712554666e-23,
    -8.113700607345118059339011413333e-24,
    1.521819913832172958310378154666e-24,
    -2.886041941483397770235958613333e-25,
    5.530620667054717979992610133333e-26,
    -1.070377329249898728591633066666e-26,
    2.091086893142384300296328533333e-27,
    -4.121713723646203827410261333333e-28,
    8.19348397112130764013568e-29,
    -1.642000275459297726780757333333e-29,
    3.316143281480227195890346666666e-30,
    -6.746863644145295941085866666666e-31,
    1.382429146318424677635413333333e-31,
    -2.851874167359832570811733333333e-32};

// Same quantity on x > 8, arg 16/x - 1.
inline constexpr double kAk02cs[33] = {
    -0.01201869826307592239839346212452,
    -0.009174852691025695310652561075713,
    1.444550931775005821048843878057e-4,
    -4.013614175435709728671021077879e-6,
    1.567831810852310672590348990333e-7,
    -7.77011043852173771031579975446e-9,
    4.611182576179717882533130529586e-10,
    -3.158592997860565770526665803309e-11,
    2.435018039365041127835887814329e-12,
    -2.074331387398347897709853373506e-13,
    1.925787280589917084742736504693e-14,
    -1.927554805838956103600347182218e-15,
    2.062198029197818278285237869644e-16,
    -2.341685117579242402603640195071e-17,
    2.805902810643042246815178828458e-18,
    -3.530507631161807945815482463573e-19,
    4.645295422935108267424216337066e-20,
    -6.368625941344266473922053461333e-21,
    9.0695213109865155676223488e-22,
    -1.337974785423690739845005311999e-22,
    2.03983602185995231552208896e-23,
    -3.207027481367840500060869973333e-24,
    5.189744413662309963626359466666e-25,
    -8.629501497540572192964607999999e-26,
    1.4721611831025598552080384e-26,
    -2.573069023867011283812351999999e-27,
    4.60177408664351658737664e-28,
    -8.411555324201093737130666666666e-29,
    1.569806306635368939301546666666e-29,
    -2.988226453005757788979199999999e-30,
    5.796831375216836520618666666666e-31,
    -1.145035994347681332155733333333e-31,
    2.301266594249682802005333333333e-32};

// e^x K1(x) sqrt(x) - 1.25 on 2 < x <= 8, arg (16/x-5)/3.
inline constexpr double kAk1cs[38] = {
    0.27443134069738829695257666227266,
    0.07571989953199367817089237814929,
    -0.0014410515564754061229853116175625,
    6.6501169551257479394251385477036e-5,
    -4.3699847095201407660580845089167e-6,
    3.5402774997630526799417139008534e-7,
    -3.3111637792932920208982688245704e-8,
    3.4459775819010534532311499770992e-9,
    -3.8989323474754271048981937492758e-10,
    4.7208197504658356400947449339005e-11,
    -6.047835662875356234537359156289e-12,
    8.1284948748658747888193837985663e-13,
    -1.1386945747147891428923915951042e-13,
    1.654035840846228232597294820509e-14,
    -2.4809025677068848221516010440533e-15,
    3.8292378907024096948429227299157e-16,
    -6.0647341040012418187768210377386e-17,
    9.8324256232648616038194004650666e-18,
    -1.6284168738284380035666620115626e-18,
    2.7501536496752623718284120337066e-19,
    -4.7289666463953250924281069568e-20,
    8.2681500028109932722392050346666e-21,
    -1.4681405136624956337193964885333e-21,
    2.6447639269208245978085894826666e-22,
    -4.82901575648563878979698688e-23,
    8.9293020743610130180656332799999e-24,
    -1.6708397168972517176997751466666e-24,
    3.1616456034040694931368618666666e-25,
    -6.0462055312274989106506410666666e-26,
    1.1678798942042732700718421333333e-26,
    -2.277374158265399623286784e-27,
    4.4811097300773675795305813333333e-28,
    -8.8932884769020194062336e-29,
    1.7794680018850275131392e-29,
    -3.5884555967329095821994666666666e-30,
    7.2906290492694257991679999999999e-31,
    -1.4918449845546227073024e-31,
    3.0736573872934276300799999999999e-32};

// Same quantity on x > 8, arg 16/x - 1.
inline constexpr double kAk12cs[33] = {
    0.06379308343739001036600488534102,
    0.02832887813049720935835030284708,
    -2.475370673905250345414545566732e-4,
    5.771972451607248820470976625763e-6,
    -2.068939219536548302745533196552e-7,
    9.739983441381804180309213097887e-9,
    -5.585336140380624984688895511129e-10,
    3.732996634046185240221212854731e-11,
    -2.825051961023225445135065754928e-12,
    2.372019002484144173643496955486e-13,
    -2.176677387991753979268301667938e-14,
    2.157914161616032453939562689706e-15,
    -2.290196930718269275991551338154e-16,
    2.582885729823274961919939565226e-17,
    -3.07675264126846318762109817344e-18,
    3.851487721280491597094896844799e-19,
    -5.0447948976415289771172825088e-20,
    6.888673850418544237018292223999e-21,
    -9.77504154195011830300213248e-22,
    1.437416218523836461001659733333e-22,
    -2.185059497344347373499733333333e-23,
    3.4262456218092206316453888e-24,
    -5.531064394246408232501248e-25,
    9.176601505685995403782826666666e-26,
    -1.562287203618024911448746666666e-26,
    2.725419375484333132349439999999e-27,
    -4.865674910074827992378026666666e-28,
    8.879388552723502587357866666666e-29,
    -1.654585918039257548936533333333e-29,
    3.145111321357848674303999999999e-30,
    -6.092998312193127612416e-31,
    1.202021939369815834623999999999e-31,
    -2.412930801459408841386666666666e-32};

// Term counts sufficient for double precision (SLATEC INITDS choices).
inline constexpr int kNAk0 = 18;
inline constexpr int kNAk02 = 14;
inline constexpr int kNAk1 = 18;
inline constexpr int kNAk12 = 14;

/// Clenshaw evaluation of a Chebyshev series on [-1, 1].
inline double chebyshev_eval(double x, const double* cs, int n) {
    double b0 = 0.0, b1 = 0.0, b2 = 0.0;
    const double twox = 2.0 * x;
    for (int i = n - 1; i >= 0; --i) {
        b2 = b1;
        b1 = b0;
        b0 = twox * b1 - b2 + cs[i];
    }
    return 0.5 * (b0 - b2);
}

/// I0 power series, intended for x <= 2.
inline double bessel_i0_series(double x) {
    const double q = 0.25 * x * x;
    double term = 1.0, sum = 1.0;
    for (int k = 1; k <= 40; ++k) {
        term *= q / (static_cast<double>(k) * k);
        sum += term;
        if (term < 1e-18 * sum) break;
    }
    return sum;
}

/// I1 power series, intended for x <= 2.
inline double bessel_i1_series(double x) {
    const double q = 0.25 * x * x;
    double term = 1.0, sum = 1.0;  // term_k = q^k / (k! (k+1)!), sum over k >= 0
    for (int k = 1; k <= 40; ++k) {
        term *= q / (static_cast<double>(k) * (k + 1));
        sum += term;
        if (term < 1e-18 * sum) break;
    }
    return 0.5 * x * sum;
}

inline double bessel_k0_small(double x) {
    const double q = 0.25 * x * x;
    // sum_{k>=1} H_k q^k / (k!)^2
    double term = 1.0, sum = 0.0, h = 0.0;
    for (int k = 1; k <= 40; ++k) {
        term *= q / (static_cast<double>(k) * k);
        h += 1.0 / k;
        sum += term * h;
        if (term * h < 1e-18 * (std::abs(sum) + 1.0)) break;
    }
    return -(std::log(0.5 * x) + std::numbers::egamma) * bessel_i0_series(x) + sum;
}

inline double bessel_k1_small(double x) {
    const double q = 0.25 * x * x;
    // sum_{k>=0} (H_k + H_{k+1} - 2 gamma) q^k / (k! (k+1)!)
    double term = 1.0, hk = 0.0, hk1 = 1.0;
    double sum = (hk + hk1 - 2.0 * std::numbers::egamma) * term;
    for (int k = 1; k <= 40; ++k) {
        term *= q / (static_cast<double>(k) * (k + 1));
        hk += 1.0 / k;
        hk1 += 1.0 / (k + 1);
        const double t = (hk + hk1 - 2.0 * std::numbers::egamma) * term;
        sum += t;
        if (std::abs(t) < 1e-18 * (std::abs(sum) + 1.0)) break;
    }
    return std::log(0.5 * x) * bessel_i1_series(x) + 1.0 / x - 0.25 * x * sum;
}

inline double bessel_k0(double x) {
    if (!(x > 0.0)) throw std::domain_error("macdonald: argument must be positive");
    if (x <= 2.0) return bessel_k0_small(x);
    const double scaled = (x <= 8.0)
        ? chebyshev_eval((16.0 / x - 5.0) / 3.0, kAk0cs, kNAk0) + 1.25
        : chebyshev_eval(16.0 / x - 1.0, kAk02cs, kNAk02) + 1.25;
    return std::exp(-x) * scaled / std::sqrt(x);
}

inline double bessel_k1(double x) {
    if (!(x > 0.0)) throw std::domain_error("macdonald: argument must be positive");
    if (x <= 2.0) return bessel_k1_small(x);
    const double scaled = (x <= 8.0)
        ? chebyshev_eval((16.0 / x - 5.0) / 3.0, kAk1cs, kNAk1) + 1.25
        : chebyshev_eval(16.0 / x - 1.0, kAk12cs, kNAk12) + 1.25;
    return std::exp(-x) * scaled / std::sqrt(x);
}

}  // namespace detail

/// K_nu(x) for nu in {0, 1, 2}, x > 0. Relative accuracy better than 1e-10;
/// satisfies K2(x) = K0(x) + (2/x) K1(x).
inline double macdonald(int nu, double x) {
    if (!(x > 0.0)) throw std::domain_error("macdonald: argument must be positive");
    switch (nu) {
        case 0: return detail::bessel_k0(x);
        case 1: return detail::bessel_k1(x);
        case 2: return detail::bessel_k0(x) + 2.0 / x * detail::bessel_k1(x);
        default: throw std::invalid_argument("macdonald: order must be 0, 1 or 2");
    }
}

}  // namespace salpeter
