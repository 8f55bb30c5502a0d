#pragma once
#include <cmath>
#include <functional>
#include <limits>
#include <map>
#include <string>
#include <vector>

namespace fresnelkit {

// amp * cos((x + shift)^2 / (2t) + phase)
struct Wave {
    double amp;
    double shift;
    double phase;
};

// Large-|x| behaviour of a kernel at a fixed time, valid for |x| >= start.
//  OscillatoryUnit: the kernel equals the sum of waves exactly.
//  Exponential:     |K| <= scale * exp(-rate (|x| - start)); rate < 0 means growth.
//  PowerLaw:        |K| <= scale * (|x| / start)^(-rate).
struct Envelope {
    enum class Kind { None, OscillatoryUnit, Exponential, PowerLaw };
    Kind kind = Kind::None;
    double start = 0;
    double scale = 0;
    double rate = 0;
    std::vector<Wave> waves;
    // local spatial frequency of the oscillation at |x|; empty means |x|/t
    std::function<double(double)> wavenumber;

    double bound(double x) const {
        const double ax = std::abs(x);
        switch (kind) {
            case Kind::OscillatoryUnit: {
                double s = 0;
                for (const auto& w : waves) s += std::abs(w.amp);
                return s;
            }
            case Kind::Exponential: return scale * std::exp(-rate * (ax - start));
            case Kind::PowerLaw: return scale * std::pow(ax / start, -rate);
            default: return std::numeric_limits<double>::infinity();
        }
    }
};

const char* envelope_name(Envelope::Kind k);

struct SignedKernel {
    std::string identity;
    std::map<std::string, double> params;
    std::function<double(double, double)> eval;
    std::function<Envelope(double)> envelope;
    bool even = true;
    double x_min = -std::numeric_limits<double>::infinity();
    double x_max = std::numeric_limits<double>::infinity();
    // two space variables, only for plate kernels
    std::function<double(double, double, double)> eval2;

    double operator()(double x, double t) const { return eval(x, t); }
    Envelope envelope_at(double t) const { return envelope ? envelope(t) : Envelope{}; }
};

}  // namespace fresnelkit
