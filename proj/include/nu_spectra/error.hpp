#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace nuspec {

enum class Errc {
    invalid_argument,
    complex_branch,
    no_sign_change,
    no_convergence,
    non_normalizable,
    regularity_bound,
    unbound,
    tail_not_converged,
    inverse_iteration_stagnated,
    level_count_mismatch,
};

/// Canonical short message for each error kind; every Error message starts with it.
std::string_view errc_message(Errc code) noexcept;

class Error : public std::runtime_error {
public:
    Error(Errc code, const std::string& detail = {});

    Errc code() const noexcept { return code_; }

private:
    Errc code_;
};

}  // namespace nuspec
