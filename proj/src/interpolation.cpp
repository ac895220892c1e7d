#include "cantor/interpolation.hpp"

#include <algorithm>
#include <numeric>
#include <string>

#include "cantor/errors.hpp"
#include "cantor/limits.hpp"

namespace cantor {
namespace {

bool inside_unit(const Rational& v) { return v.sign() > 0 && v < Rational(1); }

BigInt lcm_of(const BigInt& a, const BigInt& b) {
    BigInt out;
    mpz_lcm(out.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return out;
}

std::size_t to_size(const BigInt& v) {
    if (!v.fits_ulong_p() || v.get_ui() > max_bits()) {
        throw error(errc::resource_limit, "common denominator " + v.get_str() + " exceeds the length cap");
    }
    return v.get_ui();
}

// Scaled numerators at denominator N, or nullopt if some gap is too small.
std::optional<NormalizedData> try_scale(const std::vector<DataPoint>& points, std::size_t scale, std::size_t weight) {
    NormalizedData out{scale, weight, {}, {}};
    std::size_t prev_a = 0;
    std::size_t prev_c = 0;
    const BigInt n(static_cast<unsigned long>(scale));
    const BigInt c(static_cast<unsigned long>(weight));
    for (const auto& p : points) {
        const Rational ax = p.x * Rational(n);
        const Rational cy = p.y * Rational(c);
        if (!ax.is_integer() || !cy.is_integer()) return std::nullopt;
        const std::size_t a = ax.numerator().get_ui();
        const std::size_t ci = cy.numerator().get_ui();
        if (a - prev_a < ci - prev_c + 1) return std::nullopt;
        out.a.push_back(a);
        out.c.push_back(ci);
        prev_a = a;
        prev_c = ci;
    }
    if (scale - prev_a < weight - prev_c + 1) return std::nullopt;
    return out;
}

}  // namespace

std::vector<DataPoint> checked_dataset(std::vector<DataPoint> points) {
    if (points.empty()) {
        throw error(errc::invalid_data, "dataset is empty");
    }
    for (const auto& p : points) {
        if (!inside_unit(p.x) || !inside_unit(p.y)) {
            throw error(errc::invalid_data, "point (" + p.x.str() + ", " + p.y.str() + ") is not inside (0,1)^2");
        }
    }
    std::sort(points.begin(), points.end(), [](const DataPoint& l, const DataPoint& r) { return l.x < r.x; });
    for (std::size_t i = 1; i < points.size(); ++i) {
        if (points[i].x == points[i - 1].x) {
            throw error(errc::invalid_data, "repeated x " + points[i].x.str());
        }
        if (points[i].y < points[i - 1].y) {
            throw error(errc::invalid_data, "y decreases between x = " + points[i - 1].x.str() + " and x = " +
                                                points[i].x.str());
        }
    }
    return points;
}

NormalizedData normalize(const std::vector<DataPoint>& input) {
    const auto points = checked_dataset(input);
    BigInt x_lcm = 1;
    BigInt y_lcm = 1;
    for (const auto& p : points) {
        x_lcm = lcm_of(x_lcm, p.x.denominator());
        y_lcm = lcm_of(y_lcm, p.y.denominator());
    }
    const std::size_t base = to_size(x_lcm);
    const std::size_t weight = to_size(y_lcm);
    // Some t <= C + k + 1 always works: each gap grows by at least t.
    const std::size_t limit = weight + points.size() + 1;
    for (std::size_t t = 1; t <= limit; ++t) {
        if (base > max_bits() / t) break;
        if (auto out = try_scale(points, base * t, weight)) {
            return *out;
        }
    }
    throw error(errc::resource_limit, "no admissible common denominator within the length cap");
}

DigitVector build_interpolant(const NormalizedData& data) {
    std::vector<std::uint8_t> bits(data.scale, 0);
    std::size_t prev_a = 0;
    std::size_t prev_c = 0;
    auto fill = [&](std::size_t start, std::size_t run) {
        for (std::size_t j = 0; j < run; ++j) bits.at(start + j) = 1;
    };
    for (std::size_t i = 0; i < data.a.size(); ++i) {
        fill(prev_a, data.c[i] - prev_c);
        prev_a = data.a[i];
        prev_c = data.c[i];
    }
    fill(prev_a, data.weight - prev_c);
    return DigitVector::validate(data.scale, bits);
}

DigitVector interpolate(const std::vector<DataPoint>& points) { return build_interpolant(normalize(points)); }

DigitVector interpolate_at_scale(const std::vector<DataPoint>& input, std::size_t scale) {
    const auto points = checked_dataset(input);
    const NormalizedData base = normalize(points);
    if (scale == 0) {
        throw error(errc::invalid_data, "scale must be positive");
    }
    if (scale > max_bits()) {
        throw error(errc::resource_limit, "scale " + std::to_string(scale) + " exceeds the length cap");
    }
    const auto out = try_scale(points, scale, base.weight);
    if (!out) {
        throw error(errc::invalid_data, "scale " + std::to_string(scale) + " does not clear the data denominators or gaps");
    }
    return build_interpolant(*out);
}

std::vector<DataPoint> bracket_points(std::vector<MixedPoint> points, std::size_t precision) {
    if (precision == 0) {
        throw error(errc::out_of_range, "bracket precision must be at least 1");
    }
    struct Span {
        Rational lo;
        Rational hi;
        Rational y;
        bool exact;
    };
    std::vector<Span> spans;
    spans.reserve(points.size());
    for (auto& p : points) {
        if (const auto* r = std::get_if<Rational>(&p.x)) {
            spans.push_back({*r, *r, p.y, true});
            continue;
        }
        auto& stream = std::get<DigitStream>(p.x);
        const Rational unit(BigInt(1), big_pow(stream.base(), precision));
        const Rational prefix = stream.prefix_value(precision);
        // The stream lies in [prefix, prefix + unit]; step one unit outward.
        spans.push_back({prefix - unit, prefix + unit, p.y, false});
    }
    std::sort(spans.begin(), spans.end(), [](const Span& l, const Span& r) { return l.lo < r.lo; });
    for (std::size_t i = 0; i < spans.size(); ++i) {
        if (spans[i].lo.sign() <= 0 || spans[i].hi >= Rational(1)) {
            throw error(errc::insufficient_precision, "a bracket reaches 0 or 1 at precision " +
                                                          std::to_string(precision));
        }
        if (i > 0 && !(spans[i - 1].hi < spans[i].lo)) {
            throw error(errc::insufficient_precision, "brackets overlap at precision " + std::to_string(precision));
        }
    }
    std::vector<DataPoint> out;
    for (const auto& s : spans) {
        out.push_back({s.lo, s.y});
        if (!s.exact) out.push_back({s.hi, s.y});
    }
    return out;
}

DigitVector interpolate_bracketing(std::vector<MixedPoint> points, std::size_t precision) {
    return interpolate(bracket_points(std::move(points), precision));
}

Rational max_error(const std::vector<DataPoint>& samples) {
    const auto points = checked_dataset(samples);
    Rational prev = 0;
    Rational worst = 0;
    for (const auto& p : points) {
        worst = std::max(worst, p.y - prev);
        prev = p.y;
    }
    return std::max(worst, Rational(1) - prev);
}

}  // namespace cantor
