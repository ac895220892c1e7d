#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace cantor {

enum class errc {
    degenerate_vector,
    length_mismatch,
    index_out_of_range,
    invalid_cumulative,
    resource_limit,
    out_of_range,
    invalid_data,
    insufficient_precision,
    insufficient_prefix,
    inconsistent_samples,
    unclassifiable_sample,
    no_gap_found,
    no_candidate,
    ambiguous,
    not_dependent,
    missing_sample,
    parse_error,
};

std::string_view to_string(errc code) noexcept;

// Failures of a sampling procedure, as opposed to malformed input.
bool is_procedure_failure(errc code) noexcept;

class error : public std::runtime_error {
public:
    error(errc code, const std::string& what)
        : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

    errc code() const noexcept { return code_; }

private:
    errc code_;
};

}  // namespace cantor
