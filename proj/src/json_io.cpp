#include "liftfact/json_io.hpp"

#include "liftfact/error.hpp"

namespace liftfact {

namespace {

template <class... Ts>
struct overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
overloaded(Ts...) -> overloaded<Ts...>;

[[noreturn]] void bad(const std::string& what) { throw Error(ErrorCode::kParse, what); }

const json& field(const json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) bad(std::string("missing field '") + key + "'");
  return j.at(key);
}

}  // namespace

json to_json(const Rational& r) { return r.str(); }

json to_json(const Poly& p) {
  json a = json::array();
  for (const auto& c : p.coefficients()) a.push_back(c.str());
  return a;
}

json to_json(const PolyMatrix2& m) {
  return json::array({json::array({to_json(m.at(0, 0)), to_json(m.at(0, 1))}),
                      json::array({to_json(m.at(1, 0)), to_json(m.at(1, 1))})});
}

json to_json(const LiftingStep& s) {
  json payload = std::visit(overloaded{
                                [](const UpperLift& u) { return json{{"filter", to_json(u.filter)}}; },
                                [](const LowerLift& l) { return json{{"filter", to_json(l.filter)}}; },
                                [](const DelayDiag& d) { return json{{"m", d.m}, {"channel", d.channel}}; },
                                [](const GainDiag& g) { return json{{"k0", g.k0.str()}, {"k1", g.k1.str()}}; },
                                [](const Swap&) { return json::object(); },
                            },
                            s);
  return json{{"kind", step_kind(s)}, {"payload", payload}};
}

json to_json(const std::vector<LiftingStep>& steps) {
  json a = json::array();
  for (const auto& s : steps) a.push_back(to_json(s));
  return a;
}

json to_json(const Factorization& f) {
  return json{{"schema", kFactorizationSchema},
              {"source", to_json(f.source)},
              {"steps", to_json(f.steps)},
              {"trace", f.trace}};
}

json to_json(const DetMonomial& d) { return json{{"gain", d.gain.str()}, {"delay", d.delay}}; }

json to_json(const LdeSolution& s) {
  return json{{"x", to_json(s.x)}, {"y", to_json(s.y)}, {"reduced_in", std::string(reduced_in_name(s.reduced_in))}};
}

json to_json(const FactorizationTree& t) {
  json nodes = json::array();
  for (std::size_t i = 0; i < t.nodes.size(); ++i) {
    const TreeNode& n = t.nodes[i];
    json children = json::array();
    for (const auto& e : n.children) {
      json labels = json::array();
      for (const auto& d : e.directives) labels.push_back(render(d));
      children.push_back(json{{"directives", labels},
                              {"left", to_json(e.step.left)},
                              {"right", to_json(e.step.right)},
                              {"child", e.child}});
    }
    json node{{"id", i}, {"depth", n.depth}, {"quotient", to_json(n.quotient)}, {"children", children}};
    if (n.leaf) node["leaf"] = to_json(n.leaf->steps);
    if (n.truncated) node["truncated"] = true;
    nodes.push_back(node);
  }
  return json{{"schema", "liftfact/tree@1"},
              {"root", to_json(t.root)},
              {"leaf_count", t.leaves().size()},
              {"depth", t.depth()},
              {"nodes", nodes}};
}

Rational rational_from_json(const json& j) {
  if (j.is_string()) return Rational::parse(j.get<std::string>());
  if (j.is_number_integer()) return Rational(j.get<long>());
  bad("expected a rational as a \"p/q\" string, got " + j.dump());
}

Poly poly_from_json(const json& j) {
  if (!j.is_array()) bad("expected a coefficient list, got " + j.dump());
  std::vector<Rational> c;
  for (const auto& x : j) c.push_back(rational_from_json(x));
  return Poly(std::move(c));
}

PolyMatrix2 matrix_from_json(const json& j) {
  if (!j.is_array() || j.size() != 2 || !j[0].is_array() || !j[1].is_array() || j[0].size() != 2 ||
      j[1].size() != 2) {
    bad("expected a 2x2 matrix of coefficient lists");
  }
  return PolyMatrix2(poly_from_json(j[0][0]), poly_from_json(j[0][1]), poly_from_json(j[1][0]),
                     poly_from_json(j[1][1]));
}

LiftingStep step_from_json(const json& j) {
  const std::string kind = field(j, "kind").get<std::string>();
  const json payload = j.contains("payload") ? j.at("payload") : json::object();
  if (kind == "upper") return UpperLift{poly_from_json(field(payload, "filter"))};
  if (kind == "lower") return LowerLift{poly_from_json(field(payload, "filter"))};
  if (kind == "delay") {
    long m = field(payload, "m").get<long>();
    int ch = field(payload, "channel").get<int>();
    if (m < 1) bad("delay exponent must be at least 1");
    if (ch != 0 && ch != 1) bad("delay channel must be 0 or 1");
    return DelayDiag{static_cast<std::size_t>(m), ch};
  }
  if (kind == "gain") {
    GainDiag g{rational_from_json(field(payload, "k0")), rational_from_json(field(payload, "k1"))};
    if (g.k0.is_zero() || g.k1.is_zero()) bad("gain entries must be nonzero");
    return g;
  }
  if (kind == "swap") return Swap{};
  bad("unknown step kind '" + kind + "'");
}

std::vector<LiftingStep> steps_from_json(const json& j) {
  if (!j.is_array()) bad("expected a list of steps");
  std::vector<LiftingStep> out;
  for (const auto& s : j) out.push_back(step_from_json(s));
  return out;
}

Factorization factorization_from_json(const json& j) {
  Factorization f;
  f.source = matrix_from_json(field(j, "source"));
  f.steps = steps_from_json(field(j, "steps"));
  if (j.contains("trace")) f.trace = j.at("trace").get<std::vector<std::string>>();
  return f;
}

DetMonomial det_from_json(const json& j) {
  long d = field(j, "delay").get<long>();
  if (d < 0) bad("negative determinantal delay");
  return {rational_from_json(field(j, "gain")), static_cast<std::size_t>(d)};
}

}  // namespace liftfact
