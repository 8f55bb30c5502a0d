#pragma once
#include <string>

namespace fresnelkit {

struct VerificationReport {
    std::string check_name;
    double measured = 0;
    double tolerance = 0;
    bool passed = false;  // measured <= tolerance
    long evaluations = 0;
    std::string notes;
};

inline VerificationReport make_report(std::string name, double measured, double tolerance, long evals = 0,
                                      std::string notes = {}) {
    VerificationReport r{std::move(name), measured, tolerance, false, evals, std::move(notes)};
    r.passed = measured <= tolerance;
    return r;
}

}  // namespace fresnelkit
