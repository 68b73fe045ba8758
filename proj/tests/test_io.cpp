#include <doctest.h>

#include <sstream>

#include "islog/canonical.hpp"
#include "islog/errors.hpp"
#include "islog/fusion.hpp"
#include "islog/is_io.hpp"
#include "islog/rng.hpp"
#include "test_support.hpp"

using namespace islog;

namespace {
InfoSystem parse(const std::string& text) {
  std::istringstream in(text);
  return io::parse_is(in, "test");
}

Errc parse_code(const std::string& text) {
  try {
    parse(text);
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("expected a parse failure");
  return Errc::ParseError;
}
}  // namespace

TEST_CASE("format_sig: 12 significant digits, shortest form") {
  CHECK(io::format_sig(0.45) == "0.45");
  CHECK(io::format_sig(-0.32508297339144845) == "-0.325082973391");
  CHECK(io::format_sig(1.0) == "1");
  CHECK(io::format_sig(0.0001) == "0.0001");
}

TEST_CASE("is v1 parsing: happy path with comments and blanks") {
  const InfoSystem s = parse(
      "# a fixture\n"
      "is v1\n"
      "yes\tno\n"
      "i1\ti2\n"
      "\n"
      "0.45\t0.05\n"
      "0.05\t0.45\n");
  CHECK(s.hypothesis_labels() == std::vector<std::string>{"yes", "no"});
  CHECK(s.observation_labels() == std::vector<std::string>{"i1", "i2"});
  CHECK(s.joint()(1, 1) == 0.45);
}

TEST_CASE("is v1 parsing: sum tolerance boundary accepted") {
  CHECK_NOTHROW(parse("is v1\na\tb\no1\n0.5\n0.499999999\n"));
}

TEST_CASE("is v1 parsing: malformed inputs") {
  CHECK(parse_code("") == Errc::ParseError);
  CHECK(parse_code("nope\na\tb\no1\n0.5\n0.5\n") == Errc::ParseError);
  CHECK(parse_code("is v1\na\tb\no1\n0.5\n") == Errc::ParseError);          // missing row
  CHECK(parse_code("is v1\na\tb\no1\n0.5\n0.25\t0.25\n") == Errc::ParseError);  // ragged
  CHECK(parse_code("is v1\na\tb\no1\n0.5\nx\n") == Errc::ParseError);       // not a number
  // Validation failures surface with their own codes.
  CHECK(parse_code("is v1\na\tb\no1\to2\n0.5\t0.5\n0.1\t0.1\n") == Errc::SumNotOne);
  CHECK(parse_code("is v1\na\tb\no1\to2\n0.5\t0.5\n0\t0\n") == Errc::ZeroPriorRow);
}

TEST_CASE("is v1 render/parse round trip") {
  Rng rng(17);
  for (int t = 0; t < 20; ++t) {
    const InfoSystem s = testsup::rand_is(rng, 2 + rng.index(3), 1 + rng.index(5));
    const InfoSystem back = parse(io::render_is_file(s));
    CHECK(back.hypothesis_labels() == s.hypothesis_labels());
    CHECK(back.observation_labels() == s.observation_labels());
    for (std::size_t e = 0; e < s.n_hypotheses(); ++e)
      for (std::size_t i = 0; i < s.n_observations(); ++i)
        CHECK(back.joint()(e, i) == doctest::Approx(s.joint()(e, i)).epsilon(1e-12));
  }
}

TEST_CASE("curve CSV format") {
  const CanonicalCurve c = CanonicalCurve::from_vertices({{0, 0}, {0.1, 0.9}, {1, 1}});
  CHECK(io::render_curve_csv(c) == "x,y\n0,0\n0.1,0.9\n1,1\n");
}

TEST_CASE("curve SVG is self-contained and mentions every vertex") {
  const CanonicalCurve c = CanonicalCurve::from_vertices({{0, 0}, {0.25, 0.75}, {1, 1}});
  const std::string svg = io::render_curve_svg(c);
  CHECK(svg.find("<svg") == 0);
  CHECK(svg.find("</svg>") != std::string::npos);
  CHECK(svg.find("polyline") != std::string::npos);
  // three vertex markers
  std::size_t circles = 0, at = 0;
  while ((at = svg.find("<circle", at)) != std::string::npos) {
    ++circles;
    ++at;
  }
  CHECK(circles == 3);
}

TEST_CASE("payoff matrix file") {
  io::write_file("/tmp/islog_test_payoff.tsv", "# guess each hypothesis\n1 0\n0 1\n");
  const Matrix u = io::read_payoff_file("/tmp/islog_test_payoff.tsv");
  CHECK(u.rows() == 2);
  CHECK(u.cols() == 2);
  CHECK(u(0, 0) == 1.0);
  CHECK_THROWS_AS(io::read_payoff_file("/tmp/definitely_missing_payoff.tsv"), Error);
}

TEST_CASE("value report CSV and text share the same verdicts") {
  ValueReport rep;
  rep.rows.push_back({"log", -0.4, -0.5, -0.35, {-0.34, -0.33}, true});
  rep.rows.push_back({"quad", 0.6, 0.7, 0.75, {0.74}, false});
  const std::string csv = io::render_value_report_csv(rep);
  CHECK(csv.find("score,h_p,h_q,h_fused,realized_min,realized_max,n_realized,guarantee_holds") ==
        0);
  CHECK(csv.find("log,-0.4,-0.5,-0.35,-0.34,-0.33,2,yes") != std::string::npos);
  CHECK(csv.find("quad,0.6,0.7,0.75,0.74,0.74,1,no") != std::string::npos);
  const std::string text = io::render_value_report_text(rep);
  CHECK(text.find("holds") != std::string::npos);
  CHECK(text.find("VIOLATED") != std::string::npos);
  CHECK(!rep.all_hold());
}
