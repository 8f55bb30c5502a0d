#pragma once
#include <cstdint>
#include <vector>

#include "fresnelkit/report.hpp"

namespace fresnelkit::suites {

std::vector<VerificationReport> specfun(std::uint64_t seed);
std::vector<VerificationReport> quad(std::uint64_t seed);
std::vector<VerificationReport> rod(std::uint64_t seed);
std::vector<VerificationReport> fracrod(std::uint64_t seed);
std::vector<VerificationReport> plates(std::uint64_t seed);
std::vector<VerificationReport> pseudo(std::uint64_t seed);
std::vector<VerificationReport> subord(std::uint64_t seed);

}  // namespace fresnelkit::suites
