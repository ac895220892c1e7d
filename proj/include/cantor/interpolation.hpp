#pragma once

#include <cstddef>
#include <variant>
#include <vector>

#include "cantor/digit_stream.hpp"
#include "cantor/digit_vector.hpp"
#include "cantor/rational.hpp"

namespace cantor {

struct DataPoint {
    Rational x;
    Rational y;
};

/// Data whose x may be a digit stream (irrational stand-in) or a rational.
struct MixedPoint {
    std::variant<Rational, DigitStream> x;
    Rational y;
};

/// Common-denominator form of a rational dataset: x_i = a_i / scale and
/// y_i = c_i / weight, with a_{i+1} - a_i >= c_{i+1} - c_i + 1 on every
/// segment including the two boundary ones.
struct NormalizedData {
    std::size_t scale;   // N
    std::size_t weight;  // C
    std::vector<std::size_t> a;
    std::vector<std::size_t> c;
};

/// Sorts by x and checks the dataset: distinct x, monotone y, everything
/// strictly inside (0,1). Throws invalid_data.
std::vector<DataPoint> checked_dataset(std::vector<DataPoint> points);

/// Smallest multiple of the x-denominator lcm meeting every gap constraint.
NormalizedData normalize(const std::vector<DataPoint>& points);

/// Block construction on a given normalization.
DigitVector build_interpolant(const NormalizedData& data);

/// A vector whose CDF passes through every data point exactly.
DigitVector interpolate(const std::vector<DataPoint>& points);

/// Same construction at a caller-chosen scale (a multiple of the normalized
/// one), used to exhibit non-unique interpolants.
DigitVector interpolate_at_scale(const std::vector<DataPoint>& points, std::size_t scale);

/// Rational brackets replacing each stream x. With u = base^-precision and
/// p the prefix value, the stream lies in [p, p + u); its brackets are
/// p - u and p + u, both pinned to the point's y.
std::vector<DataPoint> bracket_points(std::vector<MixedPoint> points, std::size_t precision);

DigitVector interpolate_bracketing(std::vector<MixedPoint> points, std::size_t precision);

/// Largest consecutive y-gap with (0,0) and (1,1) appended.
Rational max_error(const std::vector<DataPoint>& samples);

}  // namespace cantor
