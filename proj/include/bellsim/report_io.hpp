#pragma once

#include <filesystem>
#include <stdexcept>
#include <string>

#include "bellsim/harness.hpp"

namespace bellsim {

class IoError : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

// Locale-independent decimal formatting (shortest round-trip), so equal
// reports serialize byte-identically.
std::string format_double(double v);

// CSV with header pair,a_rad,b_rad,n,n_pp,n_pm,n_mp,n_mm,e_hat,stderr, one
// row per setting pair, then footer rows S,<s>,<stderr> and
// timing,<class>. '\n' line endings.
std::string to_csv(const ExperimentReport& report);

// CSV with header model,fig1_S,fig1_verdict,fig2_S,fig2_verdict, one row
// per model, then the observed before-before outcome as the final row
// experiment,violation,violation.
std::string to_csv(const SuiteReport& suite);

// Throws IoError if the file cannot be created or fully written.
void write_file(const std::filesystem::path& path, const std::string& contents);

}  // namespace bellsim
