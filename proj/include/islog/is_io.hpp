#pragma once

#include <iosfwd>
#include <string>

#include "islog/canonical.hpp"
#include "islog/fusion.hpp"
#include "islog/info_system.hpp"
#include "islog/matrix.hpp"

namespace islog::io {

/// 12 significant digits, shortest form ("%.12g"). Every number the CLI
/// emits goes through this so outputs are byte-stable.
std::string format_sig(double v);

// The "is v1" text format: line 1 the version tag, line 2 tab-separated
// hypothesis labels, line 3 tab-separated observation labels, then one
// whitespace-separated row of the joint per hypothesis. Lines starting
// with '#' are comments; blank lines are ignored.
InfoSystem parse_is(std::istream& in, const std::string& origin);
InfoSystem read_is_file(const std::string& path);
std::string render_is_file(const InfoSystem& s);

/// Payoff matrix file: whitespace-separated numeric rows (rows = actions,
/// columns = hypotheses), '#' comments allowed.
Matrix read_payoff_file(const std::string& path);

/// Curve CSV: header "x,y", one vertex per line, 12 significant digits.
std::string render_curve_csv(const CanonicalCurve& c);

/// Self-contained SVG of the curve and the diagonal; plain text, no
/// plotting dependency.
std::string render_curve_svg(const CanonicalCurve& c);

std::string render_value_report_csv(const ValueReport& r);
std::string render_value_report_text(const ValueReport& r);

void write_file(const std::string& path, const std::string& content);

}  // namespace islog::io
