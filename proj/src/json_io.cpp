#include "exh/json_io.hpp"

#include <fstream>
#include <sstream>

#include "exh/errors.hpp"

namespace exh {
namespace {

Vector vector_from_json(const json& j, const char* what) {
  if (!j.is_array()) throw ParseError(std::string(what) + ": expected an array of numbers");
  Vector v;
  for (const auto& x : j) {
    if (!x.is_number()) throw ParseError(std::string(what) + ": expected a number");
    v.push_back(x.get<double>());
  }
  return v;
}

const json& field(const json& j, const char* key, const char* what) {
  if (!j.is_object() || !j.contains(key)) {
    throw ParseError(std::string(what) + ": missing \"" + key + "\"");
  }
  return j.at(key);
}

}  // namespace

json to_json(const Polytope& p) {
  json out = json::array();
  for (const auto& v : p.vertices()) out.push_back(v);
  return out;
}

Polytope polytope_from_json(const json& j) {
  if (!j.is_array() || j.empty()) throw ParseError("polytope: expected a nonempty array of vertices");
  std::vector<Vector> vs;
  for (const auto& v : j) vs.push_back(vector_from_json(v, "polytope vertex"));
  try {
    return Polytope(std::move(vs));
  } catch (const DimensionError& e) {
    throw ParseError(e.what());
  }
}

json to_json(const Expr& e) {
  switch (e.op()) {
    case Expr::Op::Atom: {
      json terms = json::array();
      for (const auto& t : e.smooth().terms()) terms.push_back({{"c", t.coef}, {"e", t.exponents}});
      return {{"atom", {{"terms", terms}}}};
    }
    case Expr::Op::Scale:
      return {{"op", "scale"}, {"coef", e.coef()}, {"arg", to_json(e.args().front())}};
    case Expr::Op::Sum:
    case Expr::Op::Max:
    case Expr::Op::Min: {
      json args = json::array();
      for (const auto& a : e.args()) args.push_back(to_json(a));
      const char* op = e.op() == Expr::Op::Sum ? "sum" : (e.op() == Expr::Op::Max ? "max" : "min");
      return {{"op", op}, {"args", args}};
    }
  }
  return {};
}

Expr expr_from_json(const json& j, int dim) {
  if (!j.is_object()) throw ParseError("expr: expected an object");
  try {
    if (j.contains("atom")) {
      const json& terms = field(j.at("atom"), "terms", "atom");
      if (!terms.is_array()) throw ParseError("atom: \"terms\" must be an array");
      std::vector<Monomial> mons;
      for (const auto& t : terms) {
        const json& c = field(t, "c", "atom term");
        const json& e = field(t, "e", "atom term");
        if (!c.is_number() || !e.is_array()) throw ParseError("atom term: bad \"c\" or \"e\"");
        Monomial m;
        m.coef = c.get<double>();
        for (const auto& x : e) {
          if (!x.is_number_integer()) throw ParseError("atom term: exponents must be integers");
          m.exponents.push_back(x.get<int>());
        }
        mons.push_back(std::move(m));
      }
      return Expr::atom(SmoothAtom(dim, std::move(mons)));
    }
    const json& op = field(j, "op", "expr");
    if (!op.is_string()) throw ParseError("expr: \"op\" must be a string");
    const std::string name = op.get<std::string>();
    if (name == "scale") {
      const json& coef = field(j, "coef", "scale");
      if (!coef.is_number()) throw ParseError("scale: \"coef\" must be a number");
      return Expr::scale(coef.get<double>(), expr_from_json(field(j, "arg", "scale"), dim));
    }
    const json& args = field(j, "args", "expr");
    if (!args.is_array() || args.empty()) throw ParseError("expr: \"args\" must be a nonempty array");
    std::vector<Expr> kids;
    for (const auto& a : args) kids.push_back(expr_from_json(a, dim));
    if (name == "sum") return Expr::sum(std::move(kids));
    if (name == "max") return Expr::max(std::move(kids));
    if (name == "min") return Expr::min(std::move(kids));
    throw ParseError("expr: unknown op \"" + name + "\"");
  } catch (const DimensionError& e) {
    throw ParseError(e.what());
  }
}

json to_json(const Exhauster& e) {
  json sets = json::array();
  for (const auto& s : e.sets()) sets.push_back(to_json(s));
  return {{"kind", std::string(to_string(e.kind()))}, {"dim", e.dim()}, {"sets", sets}};
}

Exhauster exhauster_from_json(const json& j) {
  const json& kind = field(j, "kind", "exhauster");
  const json& sets = field(j, "sets", "exhauster");
  if (!kind.is_string()) throw ParseError("exhauster: \"kind\" must be a string");
  if (!sets.is_array() || sets.empty()) throw ParseError("exhauster: \"sets\" must be a nonempty array");
  std::vector<Polytope> ps;
  for (const auto& s : sets) ps.push_back(polytope_from_json(s));
  try {
    Exhauster e(exhauster_kind_from_string(kind.get<std::string>()), std::move(ps));
    if (j.contains("dim") && (!j.at("dim").is_number_integer() || j.at("dim").get<int>() != e.dim())) {
      throw ParseError("exhauster: \"dim\" does not match the vertices");
    }
    return e;
  } catch (const DimensionError& e) {
    throw ParseError(e.what());
  }
}

json to_json(const Verdict& v, std::optional<ConditionId> id) {
  json out = json::object();
  if (id) out["condition"] = std::string(to_string(*id));
  out["status"] = std::string(to_string(v.status));
  out["method"] = std::string(to_string(v.method));
  out["witness"] = v.witness ? json(*v.witness) : json(nullptr);
  out["certificate"] = v.certificate;
  out["warnings"] = v.warnings;
  return out;
}

Verdict verdict_from_json(const json& j) {
  Verdict v;
  v.status = status_from_string(field(j, "status", "verdict").get<std::string>());
  v.method = method_from_string(field(j, "method", "verdict").get<std::string>());
  if (j.contains("witness") && !j.at("witness").is_null()) {
    v.witness = vector_from_json(j.at("witness"), "verdict witness");
  }
  if (j.contains("certificate")) v.certificate = j.at("certificate").get<std::string>();
  if (j.contains("warnings")) v.warnings = j.at("warnings").get<std::vector<std::string>>();
  return v;
}

std::string_view to_string(ProblemSense s) {
  switch (s) {
    case ProblemSense::Min:
      return "min";
    case ProblemSense::Max:
      return "max";
    case ProblemSense::Both:
      return "both";
  }
  return "?";
}

ProblemSpec problem_from_json(const json& j) {
  const json& dim = field(j, "dim", "problem");
  if (!dim.is_number_integer() || dim.get<int>() <= 0) {
    throw ParseError("problem: \"dim\" must be a positive integer");
  }
  const int n = dim.get<int>();
  Vector point = vector_from_json(field(j, "point", "problem"), "problem point");
  if (static_cast<int>(point.size()) != n) throw ParseError("problem: point length differs from dim");
  std::optional<Expr> constraint;
  if (j.contains("constraint") && !j.at("constraint").is_null()) {
    constraint = expr_from_json(j.at("constraint"), n);
  }
  ProblemSense sense = ProblemSense::Min;
  if (j.contains("sense")) {
    const std::string s = j.at("sense").is_string() ? j.at("sense").get<std::string>() : "";
    if (s == "min") {
      sense = ProblemSense::Min;
    } else if (s == "max") {
      sense = ProblemSense::Max;
    } else if (s == "both") {
      sense = ProblemSense::Both;
    } else {
      throw ParseError("problem: \"sense\" must be min, max or both");
    }
  }
  return ProblemSpec{n, expr_from_json(field(j, "objective", "problem"), n), std::move(constraint),
                     std::move(point), sense, j};
}

json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  try {
    return json::parse(ss.str());
  } catch (const json::exception& e) {
    throw ParseError(path + ": " + e.what());
  }
}

}  // namespace exh
