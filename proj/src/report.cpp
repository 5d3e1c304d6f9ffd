#include "exh/report.hpp"

#include <algorithm>
#include <cmath>
#include <iomanip>
#include <set>
#include <sstream>

#include "exh/errors.hpp"

namespace exh {

AnalysisReport::AnalysisReport(ReportBody body) : body_(std::move(body)) {
  if (body_.verdicts.empty()) throw Error("analysis report: no condition verdicts");
  std::set<ConditionId> seen;
  for (const auto& [id, v] : body_.verdicts) {
    if (!seen.insert(id).second) {
      throw Error("analysis report: condition " + std::string(to_string(id)) + " appears twice");
    }
  }
}

const Verdict& AnalysisReport::verdict(ConditionId id) const {
  for (const auto& [k, v] : body_.verdicts) {
    if (k == id) return v;
  }
  throw Error("analysis report: no verdict for " + std::string(to_string(id)));
}

namespace {

std::string sense_name(OptSense s) { return s == OptSense::Min ? "min" : "max"; }

std::string fmt(double x) {
  std::ostringstream os;
  os << std::setprecision(10) << x;
  return os.str();
}

std::string fmt(const Vector& v) {
  std::string s = "(";
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? ", " : "") + fmt(v[i]);
  return s + ")";
}

std::string fmt(const Exhauster& e) {
  std::string s = "{";
  for (std::size_t i = 0; i < e.sets().size(); ++i) {
    s += i ? ", co{" : "co{";
    const auto& vs = e.sets()[i].vertices();
    for (std::size_t k = 0; k < vs.size(); ++k) s += (k ? ";" : "") + fmt(vs[k]);
    s += "}";
  }
  return s + "}";
}

json render_json(const ReportBody& b) {
  json out = json::object();
  out["problem"] = b.problem;
  out["point"] = b.point;
  out["values"] = {{"f", b.f_value}, {"u", b.u_value ? json(*b.u_value) : json(nullptr)}};
  json ex = json::object();
  for (const auto& e : b.exhausters) ex[e.name] = to_json(e.family);
  out["exhausters"] = ex;
  json conds = json::object();
  for (const auto& [id, v] : b.verdicts) {
    json j = to_json(v, id);
    j["reading"] = reading_of(id);
    conds[std::string(to_string(id))] = j;
  }
  out["conditions"] = conds;
  out["regularity"] = b.regularity ? to_json(*b.regularity) : json(nullptr);
  json oracle = json::object();
  for (const auto& [s, v] : b.oracle) oracle[sense_name(s)] = to_json(v);
  out["oracle"] = oracle;
  out["notes"] = b.notes;
  out["settings"] = {{"tol", b.settings.tol},
                     {"samples", b.settings.samples},
                     {"seed", b.settings.seed},
                     {"max_combinations", b.settings.max_combinations}};
  if (b.elapsed_ms) out["elapsed_ms"] = *b.elapsed_ms;
  return out;
}

void text_verdict(std::ostringstream& os, const Verdict& v, const std::string& indent) {
  os << to_string(v.status) << " [" << to_string(v.method) << "]\n";
  if (v.witness) os << indent << "witness: " << fmt(*v.witness) << "\n";
  os << indent << "certificate: " << v.certificate << "\n";
  for (const auto& w : v.warnings) os << indent << "warning: " << w << "\n";
}

std::string render_text(const ReportBody& b) {
  std::ostringstream os;
  os << "point: " << fmt(b.point) << "\n";
  os << "f(x) = " << fmt(b.f_value);
  if (b.u_value) os << "    u(x) = " << fmt(*b.u_value);
  os << "\n";
  if (!b.exhausters.empty()) {
    os << "exhausters:\n";
    for (const auto& e : b.exhausters) os << "  " << e.name << ": " << fmt(e.family) << "\n";
  }
  os << "conditions:\n";
  for (const auto& [id, v] : b.verdicts) {
    os << "  " << to_string(id) << ": ";
    text_verdict(os, v, "      ");
    os << "      reading: " << reading_of(id) << "\n";
  }
  if (b.regularity) {
    os << "regularity: ";
    text_verdict(os, *b.regularity, "    ");
  }
  for (const auto& [s, v] : b.oracle) {
    os << "oracle (" << sense_name(s) << "): ";
    text_verdict(os, v, "    ");
  }
  for (const auto& n : b.notes) os << "note: " << n << "\n";
  return os.str();
}

}  // namespace

std::string render_report(const AnalysisReport& r, ReportFormat format) {
  if (format == ReportFormat::Json) return render_json(r.body()).dump(2) + "\n";
  return render_text(r.body());
}

namespace {

std::string xml_escape(const std::string& s) {
  std::string out;
  for (char c : s) {
    switch (c) {
      case '&':
        out += "&amp;";
        break;
      case '<':
        out += "&lt;";
        break;
      case '>':
        out += "&gt;";
        break;
      case '"':
        out += "&quot;";
        break;
      default:
        out += c;
    }
  }
  return out;
}

class Frame {
 public:
  explicit Frame(const SvgCanvas& c) : c_(c) {}
  double x(double v) const { return (v - c_.min_x) / (c_.max_x - c_.min_x) * c_.width; }
  double y(double v) const { return (c_.max_y - v) / (c_.max_y - c_.min_y) * c_.height; }
  double sx(double r) const { return r / (c_.max_x - c_.min_x) * c_.width; }
  double sy(double r) const { return r / (c_.max_y - c_.min_y) * c_.height; }
  std::string pt(double a, double b) const { return num(x(a)) + "," + num(y(b)); }

  static std::string num(double v) {
    std::ostringstream os;
    os << std::fixed << std::setprecision(2) << v;
    return os.str();
  }

 private:
  SvgCanvas c_;
};

struct P2 {
  double x;
  double y;
};

double cross(P2 o, P2 a, P2 b) { return (a.x - o.x) * (b.y - o.y) - (a.y - o.y) * (b.x - o.x); }

// Andrew's monotone chain; collinear input collapses to its two endpoints.
std::vector<P2> hull2d(std::vector<P2> pts) {
  std::sort(pts.begin(), pts.end(), [](P2 a, P2 b) { return a.x < b.x || (a.x == b.x && a.y < b.y); });
  pts.erase(std::unique(pts.begin(), pts.end(), [](P2 a, P2 b) { return a.x == b.x && a.y == b.y; }),
            pts.end());
  if (pts.size() < 3) return pts;
  std::vector<P2> h(2 * pts.size());
  std::size_t k = 0;
  for (const auto& p : pts) {
    while (k >= 2 && cross(h[k - 2], h[k - 1], p) <= 0) --k;
    h[k++] = p;
  }
  for (std::size_t i = pts.size() - 1, t = k + 1; i-- > 0;) {
    while (k >= t && cross(h[k - 2], h[k - 1], pts[i]) <= 0) --k;
    h[k++] = pts[i];
  }
  h.resize(k - 1);
  return h;
}

std::string style_attrs(const SvgStyle& s) {
  return "stroke=\"" + xml_escape(s.stroke) + "\" fill=\"" + xml_escape(s.fill) + "\" opacity=\"" +
         Frame::num(s.opacity) + "\" stroke-width=\"" + Frame::num(s.stroke_width) + "\"";
}

std::string draw_polytope(const Polytope& p, const SvgStyle& s, const Frame& f) {
  if (p.dim() != 2) throw DimensionError("render_svg: polytope must have dim 2");
  std::vector<P2> pts;
  for (const auto& v : p.vertices()) pts.push_back({v[0], v[1]});
  auto h = hull2d(pts);
  std::ostringstream os;
  if (h.size() == 1) {
    os << "<circle cx=\"" << Frame::num(f.x(h[0].x)) << "\" cy=\"" << Frame::num(f.y(h[0].y))
       << "\" r=\"5\" " << style_attrs(s) << "/>";
  } else if (h.size() == 2) {
    os << "<line x1=\"" << Frame::num(f.x(h[0].x)) << "\" y1=\"" << Frame::num(f.y(h[0].y))
       << "\" x2=\"" << Frame::num(f.x(h[1].x)) << "\" y2=\"" << Frame::num(f.y(h[1].y)) << "\" "
       << style_attrs(s) << "/>";
  } else {
    os << "<polygon points=\"";
    for (std::size_t i = 0; i < h.size(); ++i) os << (i ? " " : "") << f.pt(h[i].x, h[i].y);
    os << "\" " << style_attrs(s) << "/>";
  }
  return os.str();
}

std::string draw_arcs(const ArcSet& a, const SvgStyle& s, double r, const Frame& f) {
  std::ostringstream os;
  if (a.is_full()) {
    os << "<circle cx=\"" << Frame::num(f.x(0)) << "\" cy=\"" << Frame::num(f.y(0)) << "\" r=\""
       << Frame::num(f.sx(r)) << "\" " << style_attrs(s) << "/>";
    return os.str();
  }
  for (const auto& arc : a.arcs()) {
    double x1 = r * std::cos(arc.lo);
    double y1 = r * std::sin(arc.lo);
    double x2 = r * std::cos(arc.hi);
    double y2 = r * std::sin(arc.hi);
    if (arc.hi - arc.lo <= kAngularTol) {
      os << "<line x1=\"" << Frame::num(f.x(0)) << "\" y1=\"" << Frame::num(f.y(0)) << "\" x2=\""
         << Frame::num(f.x(x1)) << "\" y2=\"" << Frame::num(f.y(y1)) << "\" " << style_attrs(s)
         << "/>";
      continue;
    }
    int large = arc.hi - arc.lo > std::numbers::pi ? 1 : 0;
    // Counterclockwise in the plane is clockwise on screen (y points down).
    os << "<path d=\"M " << f.pt(0, 0) << " L " << f.pt(x1, y1) << " A " << Frame::num(f.sx(r))
       << " " << Frame::num(f.sy(r)) << " 0 " << large << " 0 " << f.pt(x2, y2) << " Z\" "
       << style_attrs(s) << "/>";
  }
  return os.str();
}

std::string draw_vector(const Vector& v, const SvgStyle& s, const Frame& f) {
  if (v.size() != 2) throw DimensionError("render_svg: vector must have dim 2");
  std::ostringstream os;
  os << "<line x1=\"" << Frame::num(f.x(0)) << "\" y1=\"" << Frame::num(f.y(0)) << "\" x2=\""
     << Frame::num(f.x(v[0])) << "\" y2=\"" << Frame::num(f.y(v[1])) << "\" " << style_attrs(s)
     << "/>";
  double len = std::hypot(v[0], v[1]);
  if (len > 0.0) {
    double ux = v[0] / len;
    double uy = v[1] / len;
    double head = 0.08;
    P2 tip{v[0], v[1]};
    P2 l{tip.x - head * ux - 0.5 * head * uy, tip.y - head * uy + 0.5 * head * ux};
    P2 r{tip.x - head * ux + 0.5 * head * uy, tip.y - head * uy - 0.5 * head * ux};
    os << "<polygon points=\"" << f.pt(tip.x, tip.y) << " " << f.pt(l.x, l.y) << " "
       << f.pt(r.x, r.y) << "\" fill=\"" << xml_escape(s.stroke) << "\" stroke=\"none\"/>";
  }
  return os.str();
}

}  // namespace

std::string render_svg(const std::vector<SvgItem>& items, const SvgCanvas& canvas) {
  Frame f(canvas);
  std::ostringstream os;
  os << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
  os << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" << canvas.width
     << "\" height=\"" << canvas.height << "\" viewBox=\"0 0 " << canvas.width << " "
     << canvas.height << "\">\n";
  os << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
  os << "<line x1=\"0\" y1=\"" << Frame::num(f.y(0)) << "\" x2=\"" << canvas.width << "\" y2=\""
     << Frame::num(f.y(0)) << "\" stroke=\"#999999\" stroke-width=\"1\"/>\n";
  os << "<line x1=\"" << Frame::num(f.x(0)) << "\" y1=\"0\" x2=\"" << Frame::num(f.x(0))
     << "\" y2=\"" << canvas.height << "\" stroke=\"#999999\" stroke-width=\"1\"/>\n";
  for (const auto& item : items) {
    os << "<g class=\"item\">";
    if (!item.style.label.empty()) os << "<title>" << xml_escape(item.style.label) << "</title>";
    if (const auto* p = std::get_if<Polytope>(&item.shape)) {
      os << draw_polytope(*p, item.style, f);
    } else if (const auto* a = std::get_if<ArcSet>(&item.shape)) {
      os << draw_arcs(*a, item.style, canvas.arc_radius, f);
    } else {
      os << draw_vector(std::get<Vector>(item.shape), item.style, f);
    }
    os << "</g>\n";
  }
  os << "</svg>\n";
  return os.str();
}

}  // namespace exh
