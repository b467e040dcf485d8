#include "nu_spectra/error.hpp"

namespace nuspec {

std::string_view errc_message(Errc code) noexcept
{
    switch (code) {
        case Errc::invalid_argument: return "invalid argument";
        case Errc::complex_branch: return "complex NU branch";
        case Errc::no_sign_change: return "no sign change";
        case Errc::no_convergence: return "no convergence";
        case Errc::non_normalizable: return "non-normalizable";
        case Errc::regularity_bound: return "flux exceeds regularity bound";
        case Errc::unbound: return "unbound level";
        case Errc::tail_not_converged: return "tail not converged";
        case Errc::inverse_iteration_stagnated: return "inverse iteration stagnated";
        case Errc::level_count_mismatch: return "level count mismatch";
    }
    return "unknown error";
}

namespace {

std::string compose(Errc code, const std::string& detail)
{
    std::string msg(errc_message(code));
    if (!detail.empty()) {
        msg += ": ";
        msg += detail;
    }
    return msg;
}

}  // namespace

Error::Error(Errc code, const std::string& detail)
    : std::runtime_error(compose(code, detail)), code_(code)
{
}

}  // namespace nuspec
