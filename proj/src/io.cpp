#include "cantor/io.hpp"

#include <algorithm>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>
#include <string>

#include "cantor/errors.hpp"

namespace cantor::io {
namespace {

std::string_view trim(std::string_view s) {
    const auto first = s.find_first_not_of(" \t\r\n");
    if (first == std::string_view::npos) return {};
    const auto last = s.find_last_not_of(" \t\r\n");
    return s.substr(first, last - first + 1);
}

bool looks_like_vector_text(std::string_view s) {
    const auto colon = s.find(':');
    const std::string_view bits = colon == std::string_view::npos ? s : s.substr(colon + 1);
    const std::string_view base = colon == std::string_view::npos ? std::string_view{} : s.substr(0, colon);
    return !bits.empty() && std::all_of(bits.begin(), bits.end(), [](char c) { return c == '0' || c == '1'; }) &&
           std::all_of(base.begin(), base.end(), [](char c) { return c >= '0' && c <= '9'; }) &&
           (colon == std::string_view::npos || !base.empty());
}

std::vector<std::pair<Rational, Rational>> read_pairs(std::istream& in) {
    std::vector<std::pair<Rational, Rational>> out;
    std::string line;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        const std::string_view text = trim(line);
        if (text.empty() || text.front() == '#') continue;
        const auto comma = text.find(',');
        if (comma == std::string_view::npos) {
            throw error(errc::parse_error, "line " + std::to_string(line_no) + ": expected x,y");
        }
        const std::string_view left = trim(text.substr(0, comma));
        if (out.empty() && (left == "x")) continue;  // header
        try {
            out.emplace_back(Rational::parse(left), Rational::parse(text.substr(comma + 1)));
        } catch (const error& e) {
            throw error(errc::parse_error, "line " + std::to_string(line_no) + ": " + e.what());
        }
    }
    return out;
}

}  // namespace

DigitVector parse_vector_text(std::string_view text) {
    const std::string_view s = trim(text);
    if (!looks_like_vector_text(s)) {
        throw error(errc::parse_error, "expected a vector like 3:101, got '" + std::string(s) + "'");
    }
    const auto colon = s.find(':');
    if (colon == std::string_view::npos) {
        return DigitVector::from_bit_string(s);
    }
    const std::size_t base = std::stoul(std::string(s.substr(0, colon)));
    const std::string_view bits = s.substr(colon + 1);
    if (bits.size() != base) {
        throw error(errc::length_mismatch, "base " + std::to_string(base) + " needs " + std::to_string(base) +
                                               " bits, got " + std::to_string(bits.size()));
    }
    return DigitVector::from_bit_string(bits);
}

std::string format_vector_text(const DigitVector& v) { return std::to_string(v.base()) + ":" + v.bit_string(); }

DigitVector vector_from_json(const nlohmann::json& j) {
    try {
        if (!j.is_object() || !j.contains("base")) {
            throw error(errc::parse_error, "vector JSON needs a \"base\" field");
        }
        const auto base = j.at("base").get<std::size_t>();
        if (j.contains("bits")) {
            const auto bits = j.at("bits").get<std::string>();
            if (bits.size() != base) {
                throw error(errc::length_mismatch, "base " + std::to_string(base) + " needs " +
                                                       std::to_string(base) + " bits, got " +
                                                       std::to_string(bits.size()));
            }
            return DigitVector::from_bit_string(bits);
        }
        if (j.contains("digits")) {
            const auto digits = j.at("digits").get<std::vector<std::size_t>>();
            return DigitVector::from_digits(base, digits);
        }
        throw error(errc::parse_error, "vector JSON needs \"bits\" or \"digits\"");
    } catch (const nlohmann::json::exception& e) {
        throw error(errc::parse_error, std::string("bad vector JSON: ") + e.what());
    }
}

nlohmann::json vector_to_json(const DigitVector& v) {
    return nlohmann::json{{"base", v.base()}, {"bits", v.bit_string()}};
}

DigitVector load_vector(std::string_view spec) {
    const std::string_view s = trim(spec);
    auto from_json_text = [](const std::string& text) {
        nlohmann::json j;
        try {
            j = nlohmann::json::parse(text);
        } catch (const nlohmann::json::exception& e) {
            throw error(errc::parse_error, std::string("bad vector JSON: ") + e.what());
        }
        return vector_from_json(j);
    };
    if (!s.empty() && s.front() == '{') {
        return from_json_text(std::string(s));
    }
    if (looks_like_vector_text(s)) {
        return parse_vector_text(s);
    }
    std::ifstream file{std::string(s)};
    if (!file) {
        throw error(errc::parse_error, "'" + std::string(s) + "' is neither a vector nor a readable file");
    }
    std::stringstream buffer;
    buffer << file.rdbuf();
    const std::string content(trim(buffer.str()));
    if (!content.empty() && content.front() == '{') {
        return from_json_text(content);
    }
    return parse_vector_text(content);
}

std::vector<DataPoint> read_dataset_csv(std::istream& in) {
    std::vector<DataPoint> out;
    for (auto& [x, y] : read_pairs(in)) out.push_back({std::move(x), std::move(y)});
    return out;
}

void write_dataset_csv(std::ostream& out, const std::vector<DataPoint>& points, std::string_view header) {
    out << header << '\n';
    for (const auto& p : points) out << p.x << ',' << p.y << '\n';
}

std::vector<std::pair<Rational, Rational>> read_table_csv(std::istream& in) { return read_pairs(in); }

std::string format_value(const Rational& value, int digits) {
    return digits < 0 ? value.str() : value.decimal(digits);
}

std::vector<Rational> parse_rational_list(std::string_view text) {
    std::vector<Rational> out;
    std::size_t start = 0;
    while (start <= text.size()) {
        const auto comma = text.find(',', start);
        const std::string_view piece =
            trim(text.substr(start, comma == std::string_view::npos ? std::string_view::npos : comma - start));
        if (!piece.empty()) out.push_back(Rational::parse(piece));
        if (comma == std::string_view::npos) break;
        start = comma + 1;
    }
    return out;
}

}  // namespace cantor::io
