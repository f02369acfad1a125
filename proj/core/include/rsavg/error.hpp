#pragma once

#include <stdexcept>
#include <string>

namespace rsavg {

enum class ErrorCode {
    not_fundamental,
    discriminant_mismatch,
    invalid_parameters,
    inconsistent_auxiliary,
    search_exhausted,
    enumeration_bound,
    precondition_violated,
    dimension_mismatch,
    not_cuspidal,
    cache_corrupt,
    bad_input,
};

const char * to_string(ErrorCode code);

class Error : public std::runtime_error
{
  public:
    Error(ErrorCode code, std::string const & what)
        : std::runtime_error(std::string(to_string(code)) + ": " + what)
        , code_(code)
    {
    }

    ErrorCode code() const noexcept { return code_; }

  private:
    ErrorCode code_;
};

}  // namespace rsavg
