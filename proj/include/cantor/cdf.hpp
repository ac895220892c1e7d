#pragma once

#include <cstddef>
#include <utility>
#include <variant>
#include <vector>

#include "cantor/digit_stream.hpp"
#include "cantor/digit_vector.hpp"
#include "cantor/rational.hpp"

namespace cantor {

inline constexpr std::size_t default_classify_depth = 64;

/// Exact bounds lo <= F(x) <= hi for a partially known point x.
struct Enclosure {
    Rational lo;
    Rational hi;

    Rational width() const { return hi - lo; }
    bool contains(const Rational& y) const { return lo <= y && y <= hi; }
};

struct RationalValue {
    Rational value;
};
/// Every fetched digit lay in D up to `depth`. A semi-decision: a
/// non-periodic stream that stays in D has an irrational F-value.
struct IrrationalAtDepth {
    std::size_t depth;
};
/// The base-N digit at 1-based `position` is outside D, so x is not in the
/// Cantor set and F(x) is rational.
struct NotMemberAt {
    std::size_t position;
};

using Classification = std::variant<RationalValue, IrrationalAtDepth, NotMemberAt>;

/// F_B(x) exactly, with F = 0 on x <= 0 and F = 1 on x >= 1.
Rational eval(const DigitVector& v, const Rational& x);

/// Brackets F on the stream by F at the two ends of its depth-digit prefix
/// interval. Streams in another base are re-expanded in base N first.
Enclosure eval_stream(const DigitVector& v, DigitStream& x, std::size_t depth);

using PlotPoint = std::pair<Rational, Rational>;

/// Corner points of the level-n piecewise linear approximant, sorted by x
/// and deduplicated; includes (0,0) and (1,1). Throws resource_limit.
std::vector<PlotPoint> piecewise_points(const DigitVector& v, std::size_t level);

/// Whether some base-N expansion of x in [0,1] uses only kept digits.
bool member_rational(const DigitVector& v, const Rational& x);

Classification classify(const DigitVector& v, const Rational& x);
Classification classify(const DigitVector& v, DigitStream& x, std::size_t depth = default_classify_depth);

/// eval(v, x) == sum_n b_n / |B| * eval(v, N x - n).
bool check_invariance(const DigitVector& v, const Rational& x);

/// F of the reversed vector at x, via 1 - F(1 - x); cross-checked against
/// direct evaluation of reverse(v).
Rational reverse_value(const DigitVector& v, const Rational& x);

}  // namespace cantor
