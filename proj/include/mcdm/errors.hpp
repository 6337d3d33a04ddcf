#ifndef MCDM_ERRORS_HPP
#define MCDM_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace mcdm {

/// Failure categories surfaced by the library. Each maps to a stable
/// machine-readable tag and a CLI exit status.
enum class errc {
    validation_error,
    key_mismatch,
    non_positive_value,
    shape_mismatch,
    not_column_stochastic,
    unknown_alternative,
    ragged_paths,
    invalid_level,
    too_many_candidates,
    not_a_winner,
    generation_failure,
    parse_error,
};

class Error : public std::runtime_error {
  public:
    Error(errc code, const std::string& message)
        : std::runtime_error(message), code_(code) {}

    errc code() const noexcept { return code_; }

    /// Stable tag for machine consumption (one token, no spaces).
    const char* code_name() const noexcept {
        switch (code_) {
            case errc::validation_error:      return "validation";
            case errc::key_mismatch:          return "key-mismatch";
            case errc::non_positive_value:    return "non-positive-value";
            case errc::shape_mismatch:        return "shape-mismatch";
            case errc::not_column_stochastic: return "not-column-stochastic";
            case errc::unknown_alternative:   return "unknown-alternative";
            case errc::ragged_paths:          return "ragged-paths";
            case errc::invalid_level:         return "invalid-level";
            case errc::too_many_candidates:   return "too-many-candidates";
            case errc::not_a_winner:          return "not-a-winner";
            case errc::generation_failure:    return "generation-failure";
            case errc::parse_error:           return "parse";
        }
        return "unknown";
    }

    /// Process exit status used by the CLI: 2 validation, 3 parse,
    /// 4 not-a-winner, 5 generation failure.
    int exit_code() const noexcept {
        switch (code_) {
            case errc::parse_error:        return 3;
            case errc::not_a_winner:       return 4;
            case errc::generation_failure: return 5;
            default:                       return 2;
        }
    }

  private:
    errc code_;
};

}  // namespace mcdm

#endif  // MCDM_ERRORS_HPP
