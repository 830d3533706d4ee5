#include "relgs/bessel.hpp"

#include <cmath>
#include <stdexcept>

namespace relgs {

namespace {

// Taylor coefficients of 1/Gamma(1+x) at x = 0.  The even/odd split below
// gives the Temme auxiliary functions without cancellation as mu -> 0.
constexpr double kInvGammaCoef[] = {
    1.0, 0.57721566490153286061, -0.65587807152025388108,
    -0.042002635034095235529, 0.1665386113822914895, -0.042197734555544336748,
    -0.0096219715278769735621, 0.0072189432466630995424, -0.0011651675918590651121,
    -0.00021524167411495097282, 0.00012805028238811618615, -0.000020134854780788238656,
    -1.2504934821426706573e-6, 1.1330272319816958824e-6, -2.0563384169776071035e-7,
    6.1160951044814158179e-9, 5.0020076444692229301e-9, -1.1812745704870201446e-9,
    1.0434267116911005105e-10, 7.782263439905071254e-12, -3.6968056186422057082e-12,
    5.100370287454475979e-13, -2.0583260535665067832e-14, -5.3481225394230179824e-15,
    1.2267786282382607902e-15, -1.1812593016974587695e-16, 1.1866922547516003326e-18,
    1.4123806553180317816e-18, -2.2987456844353702066e-19, 1.7144063219273374334e-20,
    1.3373517304936931149e-22,
};
constexpr int kNCoef = sizeof(kInvGammaCoef) / sizeof(double);

// gam1 = (1/Gamma(1-mu) - 1/Gamma(1+mu)) / (2 mu), gam2 = the even mean,
// gampl = 1/Gamma(1+mu), gammi = 1/Gamma(1-mu); valid for |mu| <= 1/2.
void temme_gammas(double mu, double& gam1, double& gam2, double& gampl, double& gammi) {
    const double mu2 = mu * mu;
    double even = 0.0, odd = 0.0;
    for (int k = kNCoef - 1; k >= 0; --k) {
        if (k % 2 == 0)
            even = even * mu2 + kInvGammaCoef[k];
        else
            odd = odd * mu2 + kInvGammaCoef[k];
    }
    gam1 = -odd;
    gam2 = even;
    gampl = even + mu * odd;
    gammi = even - mu * odd;
}

constexpr double kEps = 1e-16;
constexpr int kMaxIter = 20000;

// Temme's series for K_mu(x), K_{mu+1}(x), |mu| <= 1/2, 0 < x <= 2.
void k_series_small(double mu, double x, double& kmu, double& kmu1) {
    const double pimu = M_PI * mu;
    const double fact = (std::abs(pimu) < 1e-15) ? 1.0 : pimu / std::sin(pimu);
    const double d = -std::log(0.5 * x);
    const double e = mu * d;
    const double fact2 = (std::abs(e) < 1e-15) ? 1.0 : std::sinh(e) / e;
    double gam1, gam2, gampl, gammi;
    temme_gammas(mu, gam1, gam2, gampl, gammi);
    double ff = fact * (gam1 * std::cosh(e) + gam2 * fact2 * d);
    double sum = ff;
    const double ee = std::exp(e);
    double p = 0.5 * ee / gampl;
    double q = 0.5 / (ee * gammi);
    double c = 1.0;
    const double x2 = 0.25 * x * x;
    double sum1 = p;
    for (int i = 1; i < kMaxIter; ++i) {
        ff = (i * ff + p + q) / (i * i - mu * mu);
        c *= x2 / i;
        p /= (i - mu);
        q /= (i + mu);
        const double del = c * ff;
        sum += del;
        sum1 += c * (p - i * ff);
        if (std::abs(del) < std::abs(sum) * kEps) {
            kmu = sum;
            kmu1 = sum1 * 2.0 / x;
            return;
        }
    }
    throw std::runtime_error("bessel_k: small-z series failed to converge");
}

// Continued-fraction evaluation (Temme's CF2 in Thompson-Barnett form) of
// K_mu(x), K_{mu+1}(x) for |mu| <= 1/2 and x > 2.
void k_cf2(double mu, double x, double& kmu, double& kmu1) {
    double b = 2.0 * (1.0 + x);
    double d = 1.0 / b;
    double h = d, delh = d;
    double q1 = 0.0, q2 = 1.0;
    const double a1 = 0.25 - mu * mu;
    double q = a1, c = a1;
    double a = -a1;
    double s = 1.0 + q * delh;
    for (int i = 2; i < kMaxIter; ++i) {
        a -= 2 * (i - 1);
        c = -a * c / i;
        const double qnew = (q1 - b * q2) / a;
        q1 = q2;
        q2 = qnew;
        q += c * qnew;
        b += 2.0;
        d = 1.0 / (b + a * d);
        delh = (b * d - 1.0) * delh;
        h += delh;
        const double dels = q * delh;
        s += dels;
        if (std::abs(dels / s) < kEps) {
            h = a1 * h;
            kmu = std::sqrt(M_PI / (2.0 * x)) * std::exp(-x) / s;
            kmu1 = kmu * (mu + x + 0.5 - h) / x;
            return;
        }
    }
    throw std::runtime_error("bessel_k: continued fraction failed to converge");
}

}  // namespace

double bessel_k(double nu, double z) {
    if (!(z > 0.0)) throw std::domain_error("bessel_k: requires z > 0");
    if (!(nu >= 0.0)) throw std::domain_error("bessel_k: requires nu >= 0");
    const int nsteps = static_cast<int>(std::floor(nu + 0.5));
    const double mu = nu - nsteps;
    double kmu, kmu1;
    if (z <= 2.0)
        k_series_small(mu, z, kmu, kmu1);
    else
        k_cf2(mu, z, kmu, kmu1);
    for (int j = 0; j < nsteps; ++j) {
        const double knext = kmu + 2.0 * (mu + j + 1) / z * kmu1;
        kmu = kmu1;
        kmu1 = knext;
    }
    return kmu;
}

}  // namespace relgs
