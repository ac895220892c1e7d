#include "cantor/errors.hpp"

namespace cantor {

std::string_view to_string(errc code) noexcept {
    switch (code) {
        case errc::degenerate_vector: return "DegenerateVector";
        case errc::length_mismatch: return "LengthMismatch";
        case errc::index_out_of_range: return "IndexOutOfRange";
        case errc::invalid_cumulative: return "InvalidCumulative";
        case errc::resource_limit: return "ResourceLimit";
        case errc::out_of_range: return "OutOfRange";
        case errc::invalid_data: return "InvalidData";
        case errc::insufficient_precision: return "InsufficientPrecision";
        case errc::insufficient_prefix: return "InsufficientPrefix";
        case errc::inconsistent_samples: return "InconsistentSamples";
        case errc::unclassifiable_sample: return "UnclassifiableSample";
        case errc::no_gap_found: return "NoGapFound";
        case errc::no_candidate: return "NoCandidate";
        case errc::ambiguous: return "Ambiguous";
        case errc::not_dependent: return "NotDependent";
        case errc::missing_sample: return "MissingSample";
        case errc::parse_error: return "ParseError";
    }
    return "UnknownError";
}

bool is_procedure_failure(errc code) noexcept {
    switch (code) {
        case errc::inconsistent_samples:
        case errc::unclassifiable_sample:
        case errc::no_candidate:
        case errc::ambiguous:
            return true;
        default:
            return false;
    }
}

}  // namespace cantor
