#pragma once

// Locale-independent CSV emission for the figure data.

#include <iosfwd>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "nanores/asymptotics.hpp"

namespace nanores::cli {

inline constexpr std::string_view kFigureHeader =
    "h,re_exact,im_exact,re_r0,im_r0,re_r0r1,im_r0r1,re_r0r1r2,im_r0r1r2";

/// 17 significant digits, C locale; enough to round-trip any double.
std::string format_g17(double value);

/// `digits` significant digits, C locale.
std::string format_g(double value, int digits);

void write_figure_csv(std::ostream& os, std::span<const FigureRow> rows);

/// Splits CSV text into numeric rows (header skipped). Throws std::invalid_argument on malformed input.
std::vector<std::vector<double>> parse_figure_csv(std::string_view text);

/// Re-emits parsed rows with the figure header.
std::string emit_numeric_csv(const std::vector<std::vector<double>>& rows);

} // namespace nanores::cli
