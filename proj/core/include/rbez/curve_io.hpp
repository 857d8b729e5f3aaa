#ifndef RBEZ_CURVE_IO_HPP
#define RBEZ_CURVE_IO_HPP

#include <filesystem>
#include <string>
#include <string_view>

#include "rbez/curve.hpp"

namespace rbez {

/// Parses {"weights": [...], "points": [[...], ...]}. Scalars are JSON numbers
/// or strings holding a decimal or "p/q" literal. Syntax errors throw
/// ParseError with line and column; semantic errors name the offending member.
template <Scalar S>
RationalBezierCurve<S> parse_curve_json(std::string_view text);

/// Reads and parses a curve file. An unreadable file throws IoError.
template <Scalar S>
RationalBezierCurve<S> load_curve_file(const std::filesystem::path& path);

/// Canonical JSON with every scalar written as an exact string literal.
std::string curve_to_json(const RationalBezierCurve<Rational>& curve);

extern template RationalBezierCurve<double> parse_curve_json<double>(std::string_view);
extern template RationalBezierCurve<Rational> parse_curve_json<Rational>(std::string_view);
extern template RationalBezierCurve<double> load_curve_file<double>(const std::filesystem::path&);
extern template RationalBezierCurve<Rational> load_curve_file<Rational>(const std::filesystem::path&);

}  // namespace rbez

#endif  // RBEZ_CURVE_IO_HPP
