#include "islog/is_io.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <istream>
#include <limits>
#include <sstream>

#include "islog/errors.hpp"

namespace islog::io {

namespace {

std::string trim(const std::string& s) {
  std::size_t b = s.find_first_not_of(" \t\r\n");
  if (b == std::string::npos) return "";
  std::size_t e = s.find_last_not_of(" \t\r\n");
  return s.substr(b, e - b + 1);
}

bool content_line(const std::string& raw, std::string& out) {
  const std::string t = trim(raw);
  if (t.empty() || t[0] == '#') return false;
  out = t;
  return true;
}

std::vector<std::string> split_tabs(const std::string& s) {
  std::vector<std::string> out;
  std::size_t start = 0;
  while (true) {
    const std::size_t pos = s.find('\t', start);
    if (pos == std::string::npos) {
      out.push_back(trim(s.substr(start)));
      break;
    }
    out.push_back(trim(s.substr(start, pos - start)));
    start = pos + 1;
  }
  return out;
}

std::vector<double> parse_numbers(const std::string& line, const std::string& origin) {
  std::vector<double> out;
  std::istringstream iss(line);
  std::string tok;
  while (iss >> tok) {
    char* end = nullptr;
    const double v = std::strtod(tok.c_str(), &end);
    if (end == tok.c_str() || *end != '\0')
      fail(Errc::ParseError, origin + ": not a number: '" + tok + "'");
    out.push_back(v);
  }
  return out;
}

}  // namespace

std::string format_sig(double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.12g", v);
  return buf;
}

InfoSystem parse_is(std::istream& in, const std::string& origin) {
  std::vector<std::string> lines;
  std::string raw, line;
  while (std::getline(in, raw))
    if (content_line(raw, line)) lines.push_back(line);

  if (lines.empty()) fail(Errc::ParseError, origin + ": empty file");
  if (lines[0] != "is v1")
    fail(Errc::ParseError, origin + ": expected header 'is v1', got '" + lines[0] + "'");
  if (lines.size() < 3) fail(Errc::ParseError, origin + ": missing label lines");

  auto hyp = split_tabs(lines[1]);
  auto obs = split_tabs(lines[2]);
  const std::size_t rows = lines.size() - 3;
  if (rows != hyp.size())
    fail(Errc::ParseError, origin + ": expected " + std::to_string(hyp.size()) +
                               " matrix rows, found " + std::to_string(rows));
  Matrix joint(hyp.size(), obs.size());
  for (std::size_t r = 0; r < rows; ++r) {
    const auto nums = parse_numbers(lines[3 + r], origin);
    if (nums.size() != obs.size())
      fail(Errc::ParseError, origin + ": row " + std::to_string(r + 1) + " has " +
                                 std::to_string(nums.size()) + " entries, expected " +
                                 std::to_string(obs.size()));
    for (std::size_t c = 0; c < nums.size(); ++c) joint(r, c) = nums[c];
  }
  return InfoSystem(std::move(hyp), std::move(obs), std::move(joint));
}

InfoSystem read_is_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) fail(Errc::ParseError, "cannot open '" + path + "'");
  return parse_is(in, path);
}

std::string render_is_file(const InfoSystem& s) {
  std::ostringstream out;
  out << "is v1\n";
  for (std::size_t e = 0; e < s.n_hypotheses(); ++e)
    out << (e ? "\t" : "") << s.hypothesis_labels()[e];
  out << "\n";
  for (std::size_t i = 0; i < s.n_observations(); ++i)
    out << (i ? "\t" : "") << s.observation_labels()[i];
  out << "\n";
  for (std::size_t e = 0; e < s.n_hypotheses(); ++e) {
    for (std::size_t i = 0; i < s.n_observations(); ++i)
      out << (i ? "\t" : "") << format_sig(s.joint()(e, i));
    out << "\n";
  }
  return out.str();
}

Matrix read_payoff_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) fail(Errc::ParseError, "cannot open '" + path + "'");
  std::vector<std::vector<double>> rows;
  std::string raw, line;
  while (std::getline(in, raw)) {
    if (!content_line(raw, line)) continue;
    rows.push_back(parse_numbers(line, path));
  }
  if (rows.empty()) fail(Errc::ParseError, path + ": empty payoff matrix");
  for (const auto& r : rows)
    if (r.size() != rows.front().size())
      fail(Errc::ParseError, path + ": ragged payoff matrix");
  return Matrix::from_rows(rows);
}

std::string render_curve_csv(const CanonicalCurve& c) {
  std::ostringstream out;
  out << "x,y\n";
  for (const Point& p : c.vertices()) out << format_sig(p.x) << "," << format_sig(p.y) << "\n";
  return out.str();
}

std::string render_curve_svg(const CanonicalCurve& c) {
  // 520x520 canvas, 40px margins, y axis flipped.
  const double m = 40.0, side = 440.0;
  auto sx = [&](double x) { return m + side * x; };
  auto sy = [&](double y) { return m + side * (1.0 - y); };
  std::ostringstream out;
  out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"520\" height=\"520\" "
         "viewBox=\"0 0 520 520\">\n";
  out << "<rect x=\"" << m << "\" y=\"" << m << "\" width=\"" << side << "\" height=\"" << side
      << "\" fill=\"none\" stroke=\"#999\"/>\n";
  out << "<line x1=\"" << sx(0) << "\" y1=\"" << sy(0) << "\" x2=\"" << sx(1) << "\" y2=\""
      << sy(1) << "\" stroke=\"#999\" stroke-dasharray=\"4 4\"/>\n";
  out << "<polyline fill=\"none\" stroke=\"#1f4e8c\" stroke-width=\"2\" points=\"";
  for (std::size_t i = 0; i < c.vertices().size(); ++i) {
    const Point& p = c.vertices()[i];
    out << (i ? " " : "") << format_sig(sx(p.x)) << "," << format_sig(sy(p.y));
  }
  out << "\"/>\n";
  for (const Point& p : c.vertices())
    out << "<circle cx=\"" << format_sig(sx(p.x)) << "\" cy=\"" << format_sig(sy(p.y))
        << "\" r=\"3\" fill=\"#1f4e8c\"/>\n";
  out << "</svg>\n";
  return out.str();
}

std::string render_value_report_csv(const ValueReport& r) {
  std::ostringstream out;
  out << "score,h_p,h_q,h_fused,realized_min,realized_max,n_realized,guarantee_holds\n";
  for (const auto& row : r.rows) {
    double lo = std::numeric_limits<double>::quiet_NaN();
    double hi = std::numeric_limits<double>::quiet_NaN();
    for (double v : row.realized) {
      if (std::isnan(lo) || v < lo) lo = v;
      if (std::isnan(hi) || v > hi) hi = v;
    }
    out << row.score << "," << format_sig(row.h_p) << "," << format_sig(row.h_q) << ","
        << format_sig(row.h_fused) << "," << format_sig(lo) << "," << format_sig(hi) << ","
        << row.realized.size() << "," << (row.guarantee_holds ? "yes" : "no") << "\n";
  }
  return out.str();
}

std::string render_value_report_text(const ValueReport& r) {
  std::ostringstream out;
  out << "score\tH(P)\tH(Q)\tH(P+Q)\tmin H(R,P+Q)\tcouplings\tguarantee\n";
  for (const auto& row : r.rows) {
    double lo = std::numeric_limits<double>::quiet_NaN();
    for (double v : row.realized)
      if (std::isnan(lo) || v < lo) lo = v;
    out << row.score << "\t" << format_sig(row.h_p) << "\t" << format_sig(row.h_q) << "\t"
        << format_sig(row.h_fused) << "\t" << format_sig(lo) << "\t" << row.realized.size()
        << "\t" << (row.guarantee_holds ? "holds" : "VIOLATED") << "\n";
  }
  return out.str();
}

void write_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) fail(Errc::ParseError, "cannot write '" + path + "'");
  out << content;
}

}  // namespace islog::io
