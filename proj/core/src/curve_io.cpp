#include "rbez/curve_io.hpp"

#include <fstream>
#include <sstream>

#include "json.hpp"

namespace rbez {

namespace {

using nlohmann::json;

void line_column(std::string_view text, std::size_t byte, std::size_t& line, std::size_t& column) {
  line = 1;
  column = 1;
  const std::size_t end = std::min(byte == 0 ? 0 : byte - 1, text.size());
  for (std::size_t i = 0; i < end; ++i) {
    if (text[i] == '\n') {
      ++line;
      column = 1;
    } else {
      ++column;
    }
  }
}

template <Scalar S>
S scalar_from_json(const json& value, const std::string& where) {
  std::string literal;
  if (value.is_string()) {
    literal = value.get<std::string>();
  } else if (value.is_number()) {
    // dump() yields the shortest round-trip text for floats, which the exact
    // parser then reads as the decimal the author wrote.
    literal = value.dump();
  } else {
    throw ParseError(where + ": expected a number or a string literal");
  }
  try {
    return parse_scalar<S>(literal);
  } catch (const ParseError& e) {
    throw ParseError(where + ": " + e.what());
  }
}

}  // namespace

template <Scalar S>
RationalBezierCurve<S> parse_curve_json(std::string_view text) {
  json doc;
  try {
    doc = json::parse(text.begin(), text.end());
  } catch (const json::parse_error& e) {
    std::size_t line = 0;
    std::size_t column = 0;
    line_column(text, e.byte, line, column);
    throw ParseError("malformed curve JSON", line, column);
  }
  if (!doc.is_object()) throw ParseError("curve JSON must be an object");
  if (!doc.contains("weights") || !doc["weights"].is_array()) {
    throw ParseError("curve JSON needs a \"weights\" array");
  }
  if (!doc.contains("points") || !doc["points"].is_array()) {
    throw ParseError("curve JSON needs a \"points\" array");
  }

  std::vector<S> weights;
  const json& jw = doc["weights"];
  for (std::size_t i = 0; i < jw.size(); ++i) {
    weights.push_back(scalar_from_json<S>(jw[i], "weights[" + std::to_string(i) + "]"));
  }
  std::vector<Vec<S>> points;
  const json& jp = doc["points"];
  for (std::size_t i = 0; i < jp.size(); ++i) {
    const std::string where = "points[" + std::to_string(i) + "]";
    if (!jp[i].is_array()) throw ParseError(where + ": expected an array of coordinates");
    std::vector<S> coords;
    for (std::size_t c = 0; c < jp[i].size(); ++c) {
      coords.push_back(scalar_from_json<S>(jp[i][c], where + "[" + std::to_string(c) + "]"));
    }
    points.emplace_back(std::move(coords));
  }
  return RationalBezierCurve<S>::validate(std::move(weights), std::move(points));
}

template <Scalar S>
RationalBezierCurve<S> load_curve_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot read curve file '" + path.string() + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_curve_json<S>(buf.str());
}

std::string curve_to_json(const RationalBezierCurve<Rational>& curve) {
  json doc;
  doc["weights"] = json::array();
  for (const Rational& w : curve.weights()) doc["weights"].push_back(format_scalar(w));
  doc["points"] = json::array();
  for (const auto& p : curve.points()) {
    json coords = json::array();
    for (const Rational& c : p.components()) coords.push_back(format_scalar(c));
    doc["points"].push_back(std::move(coords));
  }
  return doc.dump();
}

template RationalBezierCurve<double> parse_curve_json<double>(std::string_view);
template RationalBezierCurve<Rational> parse_curve_json<Rational>(std::string_view);
template RationalBezierCurve<double> load_curve_file<double>(const std::filesystem::path&);
template RationalBezierCurve<Rational> load_curve_file<Rational>(const std::filesystem::path&);

}  // namespace rbez
