#pragma once

#include <optional>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "exh/arcs.hpp"
#include "exh/conditions.hpp"
#include "exh/exhauster.hpp"
#include "exh/json_io.hpp"

namespace exh {

struct NamedExhauster {
  std::string name;  // f_upper, f_lower, u_upper, u_lower
  Exhauster family;
};

struct ReportSettings {
  double tol = kTol;
  int samples = 720;
  std::uint64_t seed = 0;
  std::size_t max_combinations = 1'000'000;
};

struct ReportBody {
  json problem;
  Vector point;
  double f_value = 0.0;
  std::optional<double> u_value;
  std::vector<NamedExhauster> exhausters;
  std::vector<std::pair<ConditionId, Verdict>> verdicts;
  std::optional<Verdict> regularity;
  std::vector<std::pair<OptSense, Verdict>> oracle;
  std::vector<std::string> notes;
  ReportSettings settings;
  std::optional<double> elapsed_ms;  // only rendered when set
};

// Validated analysis result: at least one verdict and no repeated id.
class AnalysisReport {
 public:
  explicit AnalysisReport(ReportBody body);

  const ReportBody& body() const { return body_; }
  const Verdict& verdict(ConditionId id) const;

 private:
  ReportBody body_;
};

enum class ReportFormat { Json, Text };

std::string render_report(const AnalysisReport& r, ReportFormat format);

struct SvgStyle {
  std::string stroke = "#1f4e9c";
  std::string fill = "none";
  double opacity = 1.0;
  double stroke_width = 3.0;
  std::string label;
};

struct SvgItem {
  std::variant<Polytope, ArcSet, Vector> shape;
  SvgStyle style;
};

struct SvgCanvas {
  int width = 800;
  int height = 800;
  double min_x = -2.0;
  double max_x = 2.0;
  double min_y = -2.0;
  double max_y = 2.0;
  double arc_radius = 1.8;
};

// Standalone SVG 1.1. Each item becomes one <g> element. Throws
// DimensionError for anything that is not planar.
std::string render_svg(const std::vector<SvgItem>& items, const SvgCanvas& canvas = {});

}  // namespace exh
