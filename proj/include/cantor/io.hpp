#pragma once

#include <iosfwd>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include <json.hpp>

#include "cantor/digit_vector.hpp"
#include "cantor/interpolation.hpp"
#include "cantor/rational.hpp"

namespace cantor::io {

/// `3:101`; a bare bit string is also accepted.
DigitVector parse_vector_text(std::string_view text);
std::string format_vector_text(const DigitVector& v);

/// Accepts {"base":N,"bits":"..."} or {"base":N,"digits":[...]}.
DigitVector vector_from_json(const nlohmann::json& j);
/// Always the bits form.
nlohmann::json vector_to_json(const DigitVector& v);

/// Text form, inline JSON, or a path to a JSON file.
DigitVector load_vector(std::string_view spec);

/// `x,y` lines of rationals; an optional `x,y` header line is skipped.
std::vector<DataPoint> read_dataset_csv(std::istream& in);
void write_dataset_csv(std::ostream& out, const std::vector<DataPoint>& points, std::string_view header = "x,y");

std::vector<std::pair<Rational, Rational>> read_table_csv(std::istream& in);

std::string format_value(const Rational& value, int digits);

std::vector<Rational> parse_rational_list(std::string_view text);

}  // namespace cantor::io
