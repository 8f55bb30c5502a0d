#include "fresnelkit/specfun.hpp"

#include <cmath>
#include <limits>
#include <string>
#include <utility>

#include "fresnelkit/errors.hpp"
#include "fresnelkit/gk.hpp"

namespace fresnelkit {

namespace {

constexpr double kEps = std::numeric_limits<double>::epsilon();
constexpr double kLnSqrt2Pi = 0.918938533204672741780329736405617640;
constexpr double kLnPi = 1.14472988584940017414342735135305871;

// Godfrey's coefficients, g = 607/128
constexpr double kLanczosG = 607.0 / 128.0;
constexpr double kLanczos[15] = {
    0.99999999999999709182,     57.156235665862923517,      -59.597960355475491248,
    14.136097974741747174,      -0.49191381609762019978,    .33994649984811888699e-4,
    .46523628927048575665e-4,   -.98374475304879564677e-4,  .15808870322491248884e-3,
    -.21026444172410488319e-3,  .21743961811521264320e-3,   -.16431810653676389022e-3,
    .84418223983852743293e-4,   -.26190838401581408670e-4,  .36899182659531622704e-5};

bool is_pole(double x) { return x <= 0.0 && x == std::floor(x); }

template <class T>
T lanczos_sum(T zm1) {
    T s = T(kLanczos[0]);
    for (int i = 1; i < 15; ++i) s += kLanczos[i] / (zm1 + double(i));
    return s;
}

cplx csinpi(cplx z) {
    const double r = z.real(), y = z.imag();
    return {sinpi(r) * std::cosh(kPi * y), cospi(r) * std::sinh(kPi * y)};
}

// Neumaier-compensated complex accumulator
struct CSum {
    double re = 0, im = 0, cre = 0, cim = 0;
    static void add1(double& s, double& c, double v) {
        const double t = s + v;
        if (std::abs(s) >= std::abs(v))
            c += (s - t) + v;
        else
            c += (v - t) + s;
        s = t;
    }
    void add(cplx v) {
        add1(re, cre, v.real());
        add1(im, cim, v.imag());
    }
    cplx value() const { return {re + cre, im + cim}; }
};

// sum_k c_k z^k, c_k given in log-magnitude/sign form (sign 0 means the coefficient vanishes)
template <class Coef>
cplx log_series(cplx z, Coef coef, const SeriesControl& ctl, const char* what) {
    if (!(ctl.rel_tol > 0) || ctl.max_terms < 1) throw DomainError("invalid SeriesControl");
    const double az = std::abs(z);
    const bool real_neg = z.imag() == 0.0 && z.real() < 0.0;
    const bool real_pos = z.imag() == 0.0 && z.real() >= 0.0;
    const double argz = std::arg(z);
    const double lz = az > 0 ? std::log(az) : 0.0;
    CSum sum;
    int small_run = 0;
    for (int k = 0; k < ctl.max_terms; ++k) {
        int sg = 0;
        const double lc = coef(k, sg);
        if (sg == 0) continue;
        if (k > 0 && az == 0.0) return sum.value();
        const double mag = std::exp(lc + k * lz);
        cplx term;
        if (real_pos)
            term = {sg * mag, 0.0};
        else if (real_neg)
            term = {((k & 1) ? -sg : sg) * mag, 0.0};
        else
            term = std::polar(sg * mag, k * argz);
        sum.add(term);
        if (!std::isfinite(mag)) throw OverflowError(std::string(what) + ": term overflow");
        if (mag <= ctl.rel_tol * std::max(1.0, std::abs(sum.value()))) {
            if (++small_run >= 2) return sum.value();
        } else {
            small_run = 0;
        }
    }
    throw BudgetExceeded(std::string(what) + ": series did not converge within max_terms");
}

}  // namespace

double sinpi(double x) {
    if (!std::isfinite(x)) return std::numeric_limits<double>::quiet_NaN();
    double r = std::fmod(x, 2.0);
    if (r > 1.0) r -= 2.0;
    if (r < -1.0) r += 2.0;
    if (r == 0.0 || r == 1.0 || r == -1.0) return 0.0;
    if (r == 0.5) return 1.0;
    if (r == -0.5) return -1.0;
    if (r > 0.5) return std::sin(kPi * (1.0 - r));
    if (r < -0.5) return -std::sin(kPi * (1.0 + r));
    return std::sin(kPi * r);
}

double cospi(double x) {
    double r = std::fmod(std::abs(x), 2.0);
    if (r == 0.5 || r == 1.5) return 0.0;
    if (r == 0.0) return 1.0;
    if (r == 1.0) return -1.0;
    if (r > 1.0) r = 2.0 - r;  // cos symmetric about 1
    if (r <= 0.25) return std::cos(kPi * r);
    if (r < 0.75) return std::sin(kPi * (0.5 - r));
    return -std::cos(kPi * (1.0 - r));
}

cplx log_gamma(cplx z) {
    if (z.imag() == 0.0 && is_pole(z.real())) throw PoleError("gamma: pole at non-positive integer");
    if (z.real() < 0.5) return cplx(kLnPi) - std::log(csinpi(z)) - log_gamma(1.0 - z);
    const cplx zm1 = z - 1.0;
    const cplx t = zm1 + kLanczosG + 0.5;
    return kLnSqrt2Pi + (zm1 + 0.5) * std::log(t) - t + std::log(lanczos_sum(zm1));
}

cplx gamma(cplx z) {
    if (z.imag() == 0.0) return gamma(z.real());
    if (z.real() < 0.5) return kPi / (csinpi(z) * gamma(1.0 - z));
    return std::exp(log_gamma(z));
}

double gamma(double x) {
    if (is_pole(x)) throw PoleError("gamma: pole at non-positive integer");
    if (x < 0.5) return kPi / (sinpi(x) * gamma(1.0 - x));
    const double xm1 = x - 1.0;
    const double t = xm1 + kLanczosG + 0.5;
    const double p = std::pow(t, 0.5 * (x - 0.5));
    return 2.50662827463100050241576528481104525 * lanczos_sum(xm1) * p * (p * std::exp(-t));
}

double log_abs_gamma(double x, int* sign) {
    if (is_pole(x)) throw PoleError("gamma: pole at non-positive integer");
    if (x < 0.5) {
        const double s = sinpi(x);
        if (sign) *sign = s > 0 ? 1 : -1;
        return kLnPi - std::log(std::abs(s)) - log_abs_gamma(1.0 - x, nullptr);
    }
    if (sign) *sign = 1;
    const double xm1 = x - 1.0;
    const double t = xm1 + kLanczosG + 0.5;
    return kLnSqrt2Pi + (x - 0.5) * std::log(t) - t + std::log(lanczos_sum(xm1));
}

double rgamma(double x) {
    if (is_pole(x)) return 0.0;
    return 1.0 / gamma(x);
}

FresnelCS fresnel_cs(double x) {
    if (std::isnan(x)) return {x, x};
    if (x < 0) {
        const auto r = fresnel_cs(-x);
        return {-r.C, -r.S};
    }
    if (x >= 1e12) return {kFresnelLimit, kFresnelLimit};
    if (x <= 1.88) {
        // cos and sin power series in x^4
        const double x2 = x * x, x4 = x2 * x2;
        double c = 0, s = 0, tc = x, ts = x * x2;
        for (int n = 0; n < 60; ++n) {
            const double dc = tc / (4 * n + 1), ds = ts / (4 * n + 3);
            c += dc;
            s += ds;
            if (std::abs(dc) < 1e-18 * std::abs(c) && std::abs(ds) < 1e-18 * std::abs(s) + 1e-300) break;
            tc *= -x4 / ((2 * n + 1) * (2 * n + 2));
            ts *= -x4 / ((2 * n + 2) * (2 * n + 3));
        }
        return {c, s};
    }
    // continued fraction for erfc in the scaled variable z = x sqrt(2/pi) (Lentz)
    const double z = x * std::sqrt(2.0 / kPi);
    const double pix2 = 2.0 * x * x;
    cplx b(1.0, -pix2);
    cplx cc(1.0 / 1e-300, 0.0);
    cplx d = 1.0 / b, h = d;
    int n = -1;
    for (int k = 2; k < 400; ++k) {
        n += 2;
        const double a = -double(n) * (n + 1);
        b += 4.0;
        d = 1.0 / (a * d + b);
        cc = b + a / cc;
        const cplx del = cc * d;
        h *= del;
        if (std::abs(del.real() - 1.0) + std::abs(del.imag()) < kEps) break;
    }
    h *= cplx(z, -z);
    const double ang = x * x;
    const cplx cs = cplx(0.5, 0.5) * (1.0 - cplx(std::cos(ang), std::sin(ang)) * h);
    const double scale = std::sqrt(kPi / 2.0);
    return {scale * cs.real(), scale * cs.imag()};
}

namespace {

cplx m_wright_kanter(double mu, cplx z);

constexpr double kAi0 = 0.355028053887817239260063186004183176;
constexpr double kAip0 = 0.258819403792806798405183560189203963;  // -Ai'(0)

cplx airy_series(cplx z) {
    const cplx z3 = z * z * z;
    cplx f = 1.0, g = z, tf = 1.0, tg = z;
    int small = 0;
    for (int k = 1; k < 400; ++k) {
        tf *= z3 / (double(3 * k - 1) * (3 * k));
        tg *= z3 / (double(3 * k) * (3 * k + 1));
        f += tf;
        g += tg;
        const double scale = std::abs(kAi0 * f) + std::abs(kAip0 * g);
        if (std::abs(tf) + std::abs(tg) < kEps * 1e-2 * scale) {
            if (++small >= 2) break;
        } else {
            small = 0;
        }
    }
    return kAi0 * f - kAip0 * g;
}

cplx airy_asymptotic(cplx z) {
    const cplx zeta = (2.0 / 3.0) * z * std::sqrt(z);
    cplx sum = 1.0;
    double u = 1.0, prev = 1.0;
    for (int k = 1; k < 200; ++k) {
        u *= double(6 * k - 5) * (6 * k - 3) * (6 * k - 1) / (double(2 * k - 1) * 216.0 * k);
        const cplx nt = (k & 1 ? -u : u) / std::pow(zeta, k);
        const double a = std::abs(nt);
        if (a > prev) break;  // past optimal truncation
        sum += nt;
        prev = a;
        if (a < kEps * 1e-2 * std::abs(sum)) break;
    }
    return std::exp(-zeta) / (2.0 * kSqrtPi * std::pow(z, 0.25)) * sum;
}

// Ai and Ai' for real x from the Maclaurin pair
std::pair<double, double> airy_pair_series(double x) {
    const double x3 = x * x * x;
    double f = 1, g = x, fp = 0, gp = 1, tf = 1, tg = x;
    for (int k = 1; k < 200; ++k) {
        // f' and g' terms carry 3k / x and (3k+1) / x; build them from x^2 to stay finite at 0
        const double tf_prev = tf, tg_prev = tg;
        tf *= x3 / (double(3 * k - 1) * (3 * k));
        tg *= x3 / (double(3 * k) * (3 * k + 1));
        fp += tf_prev * x * x / (3 * k - 1);
        gp += tg_prev * x * x / (3 * k);
        f += tf;
        g += tg;
        if (std::abs(tf) + std::abs(tg) + std::abs(tf_prev) * x * x < kEps * 1e-3) break;
    }
    return {kAi0 * f - kAip0 * g, kAi0 * fp - kAip0 * gp};
}

// Taylor steps of y'' = x y leftwards from -4; Ai and Bi stay bounded there, so errors do not grow
double airy_negative(double x) {
    constexpr double x0 = -4.0;
    auto [y, yp] = airy_pair_series(x0);
    double at = x0;
    const int steps = static_cast<int>(std::ceil((at - x) / 0.25));
    const double h = (x - at) / steps;
    for (int s = 0; s < steps; ++s) {
        double c[64];
        c[0] = y;
        c[1] = yp;
        c[2] = at * y / 2;
        for (int n = 1; n + 2 < 64; ++n) c[n + 2] = (at * c[n] + c[n - 1]) / ((n + 2.0) * (n + 1.0));
        double v = 0, d = 0;
        for (int n = 63; n >= 1; --n) {
            v = v * h + c[n];
            d = d * h + n * c[n];
        }
        v = v * h + c[0];
        y = v;
        yp = d;
        at += h;
    }
    return y;
}

}  // namespace

cplx airy_ai(cplx z) {
    const double az = std::abs(z);
    if (!std::isfinite(az)) throw DomainError("airy_ai: non-finite argument");
    // the Maclaurin pair cancels badly where Ai is exponentially small; Ai(z) = 3^{-2/3} M_{1/3}(3^{1/3} z)
    if (az > 2.5 && az <= 8.0 && std::abs(std::arg(z)) <= kPi / 4 + 1e-12)
        return 0.48074985676913606 * m_wright_kanter(1.0 / 3.0, 1.4422495703074083 * z);
    if (az <= 8.0) return airy_series(z);
    if (az > 200.0) throw OverflowError("airy_ai: |z| > 200 outside supported range");
    if (std::abs(std::arg(z)) <= 2.0 * kPi / 3.0) return airy_asymptotic(z);
    throw OverflowError("airy_ai: |z| > 8 with |arg z| > 2pi/3 outside supported range");
}

double airy_ai(double x) {
    if (x < -4.0 && x >= -8.0) return airy_negative(x);
    return airy_ai(cplx(x, 0.0)).real();
}

double bessel_i(double nu, double x) {
    if (x < 0) throw DomainError("bessel_i: x < 0");
    if (x == 0) return nu == 0 ? 1.0 : (nu > 0 ? 0.0 : std::numeric_limits<double>::infinity());
    const double h = 0.5 * x;
    double term = std::pow(h, nu) * rgamma(nu + 1.0);
    double sum = term;
    if (term == 0.0) {
        // nu + 1 at a pole: start from k = 1 via log form
        throw DomainError("bessel_i: integer negative order not supported");
    }
    for (int k = 1; k < 500; ++k) {
        term *= h * h / (double(k) * (k + nu));
        sum += term;
        if (std::abs(term) < kEps * 1e-2 * std::abs(sum)) break;
    }
    return sum;
}

cplx mittag_leffler(double nu, cplx z, const SeriesControl& ctl) {
    if (!(nu > 0.0 && nu <= 2.0)) throw DomainError("mittag_leffler: nu must lie in (0, 2]");
    if (std::abs(z) > 30.0) throw BudgetExceeded("mittag_leffler: |z| > 30 outside the series budget");
    auto coef = [nu](int k, int& sg) {
        sg = 1;
        return -log_abs_gamma(nu * k + 1.0);
    };
    return log_series(z, coef, ctl, "mittag_leffler");
}

double mittag_leffler(double nu, double z, const SeriesControl& ctl) {
    return mittag_leffler(nu, cplx(z, 0.0), ctl).real();
}

cplx wright(double alpha, double beta, cplx z, const SeriesControl& ctl) {
    if (!(alpha > -1.0)) throw DomainError("wright: alpha must exceed -1");
    auto coef = [alpha, beta](int k, int& sg) {
        const double arg = alpha * k + beta;
        const double ra = std::nearbyint(arg);
        if (ra <= 0 && std::abs(arg - ra) < 1e-14 * std::max(1.0, std::abs(arg))) {
            sg = 0;
            return 0.0;
        }
        int s = 1;
        const double lg = log_abs_gamma(arg, &s);
        sg = s;
        return -lg - log_abs_gamma(k + 1.0);
    };
    return log_series(z, coef, ctl, "wright");
}

double wright(double alpha, double beta, double z, const SeriesControl& ctl) {
    return wright(alpha, beta, cplx(z, 0.0), ctl).real();
}

namespace {

cplx m_wright_kanter(double mu, cplx z) {
    const double q = 1.0 / (1.0 - mu);
    const cplx zq = std::pow(z, q);
    auto A = [mu, q](double phi) {
        return std::pow(std::sin(mu * phi) / std::sin(phi), q) * std::sin((1.0 - mu) * phi) / std::sin(mu * phi);
    };
    // A grows from A(0) on [0, pi); the integrand is scaled by exp(zq A(0)) and cut where it has
    // dropped by e^-40
    const double A0 = std::pow(mu, q) * (1.0 - mu) / mu;
    const double rz = zq.real();
    double hi = kPi;
    if (rz > 0) {
        double lo = 0.0;
        hi = kPi * (1.0 - 1e-12);
        if (rz * (A(hi) - A0) > 40.0) {
            for (int i = 0; i < 100 && hi - lo > 1e-14; ++i) {
                const double m = 0.5 * (lo + hi);
                if (rz * (A(m) - A0) > 40.0) hi = m; else lo = m;
            }
        }
    }
    auto f = [&](double phi) -> cplx {
        const double a = A(phi);
        if (!std::isfinite(a)) return 0.0;
        const cplx e = -zq * (a - A0);
        if (e.real() < -745.0) return 0.0;
        return a * std::exp(e);
    };
    const double turns = std::abs(zq.imag()) * (A(hi) - A0) / kPi;
    const int n = std::clamp(static_cast<int>(turns / 4) + 4, 6, 4000);
    detail::GKOptions opt;
    opt.abs_tol = 1e-14 * A0 * hi;
    opt.rel_tol = 1e-12;
    opt.throw_on_fail = false;
    const auto r = detail::gk_adaptive<cplx>(f, detail::linspace_pts(0.0, hi, n), opt);
    return std::pow(z, mu * q) / (kPi * (1.0 - mu)) * std::exp(-zq * A0) * r.value;
}

}  // namespace

cplx m_wright(double mu, cplx z) {
    if (!(mu > 0.0 && mu < 1.0)) throw DomainError("m_wright: mu must lie in (0, 1)");
    if (mu == 0.5) return std::exp(-0.25 * z * z) / kSqrtPi;
    if (std::abs(z) <= 1.5) return wright(-mu, 1.0 - mu, -z);
    if (std::abs(std::arg(z)) < (1.0 - mu) * kPi / 2.0 - 1e-9) return m_wright_kanter(mu, z);
    return wright(-mu, 1.0 - mu, -z);
}

double m_wright(double mu, double z) { return m_wright(mu, cplx(z, 0.0)).real(); }

}  // namespace fresnelkit
