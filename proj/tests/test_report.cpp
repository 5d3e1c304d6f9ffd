#include <doctest.h>

#include <sstream>

#include <boost/property_tree/ptree.hpp>
#include <boost/property_tree/xml_parser.hpp>

#include "exh/errors.hpp"
#include "exh/region.hpp"
#include "exh/report.hpp"
#include "support.hpp"

using namespace exh;
namespace pt = boost::property_tree;

namespace {

ReportBody sample_body() {
  ReportBody b;
  b.problem = json{{"dim", 2}};
  b.point = {0, 0};
  b.f_value = 0.0;
  b.u_value = 0.0;
  b.exhausters.push_back({"f_upper", Exhauster(ExhausterKind::Upper, {fx::c1(), fx::c2()})});
  Verdict holds;
  holds.status = Status::Holds;
  holds.method = Method::Exact2d;
  holds.certificate = "covered";
  Verdict bad;
  bad.status = Status::Violated;
  bad.method = Method::LpEnumeration;
  bad.witness = Vector{1, 0};
  bad.certificate = "system #0";
  bad.warnings = {"set 0 contains the origin"};
  b.verdicts = {{ConditionId::MinUpperLower, holds}, {ConditionId::MaxUpperUpper, bad}};
  b.regularity = holds;
  b.oracle = {{OptSense::Max, bad}};
  b.notes = {"a note"};
  return b;
}

pt::ptree parse_xml(const std::string& s) {
  std::istringstream in(s);
  pt::ptree tree;
  pt::read_xml(in, tree);
  return tree;
}

std::size_t count_children(const pt::ptree& t, const std::string& name) {
  std::size_t n = 0;
  for (const auto& kv : t) n += kv.first == name;
  return n;
}

}  // namespace

TEST_CASE("report construction invariants") {
  ReportBody empty = sample_body();
  empty.verdicts.clear();
  CHECK_THROWS_AS(AnalysisReport{empty}, Error);
  ReportBody dup = sample_body();
  dup.verdicts.push_back(dup.verdicts.front());
  CHECK_THROWS_AS(AnalysisReport{dup}, Error);
  AnalysisReport r(sample_body());
  CHECK(r.verdict(ConditionId::MaxUpperUpper).status == Status::Violated);
  CHECK_THROWS_AS(r.verdict(ConditionId::UncMinLower), Error);
}

TEST_CASE("json rendering is deterministic, ordered and round-trips verdicts") {
  AnalysisReport r(sample_body());
  std::string a = render_report(r, ReportFormat::Json);
  CHECK(a == render_report(r, ReportFormat::Json));
  json j = json::parse(a);
  std::vector<std::string> keys;
  for (auto it = j.begin(); it != j.end(); ++it) keys.push_back(it.key());
  CHECK(keys == std::vector<std::string>{"problem", "point", "values", "exhausters", "conditions",
                                         "regularity", "oracle", "notes", "settings"});
  for (const auto& [id, v] : r.body().verdicts) {
    const json& jv = j["conditions"][std::string(to_string(id))];
    Verdict back = verdict_from_json(jv);
    CHECK(back.status == v.status);
    CHECK(back.method == v.method);
    CHECK(back.witness == v.witness);
    CHECK(back.certificate == v.certificate);
    CHECK(back.warnings == v.warnings);
    CHECK(jv["condition"] == std::string(to_string(id)));
    CHECK(jv["reading"] == reading_of(id));
  }
  CHECK(exhauster_from_json(j["exhausters"]["f_upper"]).sets().size() == 2);
  CHECK_FALSE(j.contains("elapsed_ms"));
  ReportBody timed = sample_body();
  timed.elapsed_ms = 1.5;
  CHECK(json::parse(render_report(AnalysisReport(timed), ReportFormat::Json)).contains("elapsed_ms"));
}

TEST_CASE("text rendering lists readings and witnesses") {
  std::string t = render_report(AnalysisReport(sample_body()), ReportFormat::Text);
  CHECK(t.find("MIN_UPPER_LOWER: holds") != std::string::npos);
  CHECK(t.find(reading_of(ConditionId::MaxUpperUpper)) != std::string::npos);
  CHECK(t.find("witness: (1, 0)") != std::string::npos);
  CHECK(t.find("note: a note") != std::string::npos);
}

TEST_CASE("svg of the four exhauster segments") {
  std::vector<SvgItem> items;
  for (const auto& c : {fx::c1(), fx::c2(), fx::c3(), fx::c4()}) items.push_back({c, {}});
  std::string s = render_svg(items);
  auto tree = parse_xml(s);
  const auto& svg = tree.get_child("svg");
  CHECK(count_children(svg, "g") == 4);
  // Each segment is one line between two square corners at pixel 200 or 600.
  for (const auto& kv : svg) {
    if (kv.first != "g") continue;
    REQUIRE(count_children(kv.second, "line") == 1);
    const auto& line = kv.second.get_child("line");
    for (const char* a : {"x1", "y1", "x2", "y2"}) {
      double v = line.get<double>(std::string("<xmlattr>.") + a);
      CHECK((v == doctest::Approx(200.0) || v == doctest::Approx(600.0)));
    }
  }
}

TEST_CASE("svg of cone sectors, points, polygons and arrows") {
  ArcSet sides = arcs_from_atom({AtomKind::KPlus, fx::c3()}).unite(arcs_from_atom({AtomKind::KPlus, fx::c4()}));
  std::vector<SvgItem> items{{sides, {"none", "#ccc", 0.5, 0.0, "K3 & K4"}},
                             {Polytope({{0.5, 0.5}}), {}},
                             {Polytope({{0, 0}, {1, 0}, {0, 1}, {0.2, 0.2}}), {}},
                             {Vector{1, 0}, {}},
                             {ArcSet::full(), {}}};
  std::string s = render_svg(items);
  auto tree = parse_xml(s);
  const auto& svg = tree.get_child("svg");
  CHECK(count_children(svg, "g") == items.size());
  auto it = svg.begin();
  while (it->first != "g") ++it;
  // Two sectors, one opening right (x > 400) and one left.
  CHECK(count_children(it->second, "path") == 2);
  std::vector<double> xs;
  for (const auto& kv : it->second) {
    if (kv.first != "path") continue;
    std::istringstream d(kv.second.get<std::string>("<xmlattr>.d"));
    std::string m, origin, l, p1;
    d >> m >> origin >> l >> p1;
    xs.push_back(std::stod(p1.substr(0, p1.find(','))));
  }
  std::sort(xs.begin(), xs.end());
  CHECK(xs.front() < 400.0);
  CHECK(xs.back() > 400.0);
  CHECK(s.find("<title>K3 &amp; K4</title>") != std::string::npos);
  CHECK(s.find("<circle") != std::string::npos);
  CHECK(s.find("<polygon points=\"400.00,400.00 600.00,400.00 400.00,200.00\"") != std::string::npos);
}

TEST_CASE("svg edge cases") {
  auto tree = parse_xml(render_svg({}));
  CHECK(count_children(tree.get_child("svg"), "g") == 0);
  CHECK_THROWS_AS(render_svg({{Polytope({{1, 0, 0}}), {}}}), DimensionError);
  CHECK_THROWS_AS(render_svg({{Vector{1, 0, 0}, {}}}), DimensionError);
}

TEST_CASE("json readers reject malformed input") {
  CHECK_THROWS_AS(polytope_from_json(json::array()), ParseError);
  CHECK_THROWS_AS(polytope_from_json(json::parse("[[1,2],[3]]")), ParseError);
  CHECK_THROWS_AS(exhauster_from_json(json::parse(R"({"kind":"upper","sets":[]})")), ParseError);
  CHECK_THROWS_AS(exhauster_from_json(json::parse(R"({"kind":"upper","dim":3,"sets":[[[1,2]]]})")), ParseError);
  CHECK_THROWS_AS(expr_from_json(json::parse(R"({"op":"pow","args":[]})"), 2), ParseError);
  CHECK_THROWS_AS(expr_from_json(json::parse(R"({"atom":{"terms":[{"c":1,"e":[1]}]}})"), 2), ParseError);
  CHECK_THROWS_AS(problem_from_json(json::parse(R"({"dim":2,"point":[0],"objective":{"atom":{"terms":[]}}})")),
                  ParseError);
  CHECK_THROWS_AS(read_json_file("/nonexistent/file.json"), ParseError);
}

TEST_CASE("expression json round-trip") {
  Expr e = Expr::scale(-2.0, fx::u_example());
  json j = to_json(e);
  Expr back = expr_from_json(j, 2);
  CHECK(to_json(back) == j);
  for (const auto& x : fx::circle(20)) CHECK(eval_expr(back, x) == eval_expr(e, x));
}
