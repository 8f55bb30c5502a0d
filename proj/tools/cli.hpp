#pragma once
#include <iosfwd>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "fresnelkit/report.hpp"

namespace fresnelkit::cli {

struct ProfileMeta {
    std::string kernel;
    std::map<std::string, double> params;
    double t = 1;
    std::string generated;  // UTC, ISO 8601
};

struct Profile {
    std::vector<double> grid;
    std::vector<double> values;
    ProfileMeta meta;
};

struct EvalParams {
    double t = 1;
    double nu = 0.5;
    std::optional<double> alpha;
    std::optional<double> y;
    std::optional<double> L;
    double R = 1;
    double mu_drift = 0;
    int depth = 1;
    std::optional<double> xmin, xmax;
    int points = 201;
    std::string boundary;  // halfline: absorbing, reflecting or elastic
};

const std::vector<std::string>& kernel_names();

// throws UnknownName for names outside the registry, DomainError for bad parameters
Profile evaluate(const std::string& kernel, const EvalParams& p);

std::string to_csv(const Profile& p);
std::string to_json(const Profile& p);
Profile profile_from_json(const std::string& text);

std::string reports_to_json(const std::vector<VerificationReport>& r);
std::string reports_to_csv(const std::vector<VerificationReport>& r);

const std::vector<std::string>& figure_ids();
// curve name -> profile; throws UnknownName
std::vector<std::pair<std::string, Profile>> figure_curves(const std::string& id);

// whole command line without the program name; returns the process exit code
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace fresnelkit::cli
