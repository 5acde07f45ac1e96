#include "tgames/io.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "tgames/errors.hpp"

namespace tgames {

using nlohmann::json;

namespace {

const json& field(const json& obj, const char* key, const std::string& where) {
  if (!obj.is_object()) throw ParseError(where + ": expected an object");
  auto it = obj.find(key);
  if (it == obj.end()) throw ParseError(where + ": missing \"" + key + "\"");
  return *it;
}

std::string text_of(const json& j, const std::string& where) {
  if (!j.is_string()) throw ParseError(where + ": expected a string");
  return j.get<std::string>();
}

Time time_of(const json& j, const std::string& where) {
  if (j.is_number_unsigned()) return Time(j.get<std::uint64_t>());
  if (j.is_number_integer()) throw ParseError(where + ": time constants must be non-negative");
  if (j.is_string()) {
    try {
      return parse_time(j.get<std::string>());
    } catch (const ParseError& e) {
      throw ParseError(where + ": " + e.what());
    }
  }
  throw ParseError(where + ": expected an integer or a decimal string");
}

std::uint64_t small_of(const json& j, const std::string& where) {
  if (!j.is_number_unsigned()) throw ParseError(where + ": expected a non-negative integer");
  return j.get<std::uint64_t>();
}

json time_json(const Time& t) { return t.str(); }

TimeSet timeset_of(const json& j, const std::string& where) {
  if (j.is_string()) {
    const auto s = j.get<std::string>();
    if (s == "always") return TimeSet::always();
    if (s == "never") return TimeSet::never();
    throw ParseError(where + ": unknown availability \"" + s + "\"");
  }
  if (!j.is_object() || j.size() != 1) throw ParseError(where + ": availability must be a one-key object");
  const auto& [key, body] = *j.items().begin();
  if (key == "intervals") {
    if (!body.is_array()) throw ParseError(where + ": intervals must be an array");
    std::vector<TimeSet::Interval> items;
    for (const auto& iv : body) {
      if (!iv.is_array() || iv.size() != 2) throw ParseError(where + ": interval must be [a, b]");
      items.push_back({time_of(iv[0], where), time_of(iv[1], where)});
    }
    return TimeSet::intervals(std::move(items));
  }
  if (key == "periodic") {
    std::vector<Time> residues;
    const auto& rs = field(body, "residues", where);
    if (!rs.is_array()) throw ParseError(where + ": residues must be an array");
    for (const auto& r : rs) residues.push_back(time_of(r, where));
    return TimeSet::periodic(time_of(field(body, "offset", where), where), time_of(field(body, "period", where), where),
                             std::move(residues));
  }
  if (key == "threshold") {
    const auto op = text_of(field(body, "op", where), where);
    Time bound = time_of(field(body, "bound", where), where);
    if (op == "<=") return TimeSet::at_most(std::move(bound));
    if (op == ">=") return TimeSet::at_least(std::move(bound));
    throw ParseError(where + ": threshold op must be \"<=\" or \">=\"");
  }
  throw ParseError(where + ": unknown availability kind \"" + key + "\"");
}

json timeset_json(const TimeSet& ts) {
  if (ts.is<TimeSet::Always>()) return "always";
  if (ts.is<TimeSet::Never>()) return "never";
  if (ts.is<TimeSet::Intervals>()) {
    json items = json::array();
    for (const auto& iv : ts.as<TimeSet::Intervals>().items) items.push_back({time_json(iv.lo), time_json(iv.hi)});
    return {{"intervals", items}};
  }
  if (ts.is<TimeSet::Periodic>()) {
    const auto& p = ts.as<TimeSet::Periodic>();
    json rs = json::array();
    for (const auto& r : p.residues) rs.push_back(time_json(r));
    return {{"periodic", {{"offset", time_json(p.offset)}, {"period", time_json(p.period)}, {"residues", rs}}}};
  }
  const auto& th = ts.as<TimeSet::Threshold>();
  return {{"threshold",
           {{"op", th.op == TimeSet::Comparison::AtMost ? "<=" : ">="}, {"bound", time_json(th.bound)}}}};
}

Vertex vertex_of(const TemporalGame& g, const json& j, const std::string& where) {
  const auto name = text_of(j, where);
  const auto v = g.find(name);
  if (!v) throw ParseError(where + ": unknown vertex \"" + name + "\"");
  return *v;
}

std::vector<Vertex> targets_of(const TemporalGame& g, const json& obj) {
  const auto& ts = field(obj, "targets", "objective");
  if (!ts.is_array()) throw ParseError("objective: targets must be an array");
  std::vector<Vertex> out;
  for (const auto& t : ts) out.push_back(vertex_of(g, t, "objective targets"));
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

json names_json(const TemporalGame& g, const std::vector<Vertex>& vs) {
  json out = json::array();
  for (Vertex v : vs) out.push_back(g.name(v));
  return out;
}

json parse_json(std::string_view text) {
  try {
    return json::parse(text.begin(), text.end());
  } catch (const json::exception& e) {
    throw ParseError(std::string("malformed JSON: ") + e.what());
  }
}

}  // namespace

TemporalGame parse_game(std::string_view text) {
  const json doc = parse_json(text);
  if (!doc.is_object()) throw ParseError("game: top level must be an object");
  TemporalGame g;

  const auto& vertices = field(doc, "vertices", "game");
  if (!vertices.is_array()) throw ParseError("game: vertices must be an array");
  for (const auto& vj : vertices) {
    const auto name = text_of(field(vj, "id", "vertex"), "vertex id");
    const auto where = "vertex \"" + name + "\"";
    const auto owner = small_of(field(vj, "owner", where), where + " owner");
    if (owner != 1 && owner != 2) throw ParseError(where + ": owner must be 1 or 2");
    std::optional<Colour> colour;
    if (auto it = vj.find("colour"); it != vj.end() && !it->is_null()) {
      const auto c = small_of(*it, where + " colour");
      if (c > std::numeric_limits<Colour>::max()) throw ParseError(where + ": colour too large");
      colour = static_cast<Colour>(c);
    }
    if (g.find(name)) throw ParseError("duplicate vertex \"" + name + "\"");
    g.add_vertex(name, owner == 1 ? Player::One : Player::Two, colour);
  }

  if (auto it = doc.find("edges"); it != doc.end()) {
    if (!it->is_array()) throw ParseError("game: edges must be an array");
    for (const auto& ej : *it) {
      const Vertex from = vertex_of(g, field(ej, "from", "edge"), "edge from");
      const Vertex to = vertex_of(g, field(ej, "to", "edge"), "edge to");
      const auto where = "edge " + vertex_label(g, from) + "->" + vertex_label(g, to);
      if (g.edge(from, to)) throw ParseError(where + ": duplicate edge");
      g.set_edge(from, to, timeset_of(field(ej, "avail", where), where));
    }
  }

  const auto& obj = field(doc, "objective", "game");
  const auto type = text_of(field(obj, "type", "objective"), "objective type");
  if (type == "reach")
    g.set_objective(ReachObjective{targets_of(g, obj)});
  else if (type == "punctual")
    g.set_objective(PunctualObjective{targets_of(g, obj), time_of(field(obj, "targetTime", "objective"), "targetTime")});
  else if (type == "parity")
    g.set_objective(ParityObjective{});
  else
    throw ParseError("objective: unknown type \"" + type + "\"");

  g.set_initial(vertex_of(g, field(doc, "initial", "game"), "initial"));

  if (auto it = doc.find("class"); it != doc.end()) {
    const auto kind = text_of(field(*it, "kind", "class"), "class kind");
    if (kind == "static")
      g.set_class_hint(StaticClass{});
    else if (kind == "finite")
      g.set_class_hint(FiniteHorizonClass{time_of(field(*it, "horizon", "class"), "horizon")});
    else if (kind == "periodic")
      g.set_class_hint(PeriodicClass{time_of(field(*it, "period", "class"), "period")});
    else if (kind == "ultimately-periodic")
      g.set_class_hint(UltimatelyPeriodicClass{time_of(field(*it, "prefix", "class"), "prefix"),
                                               time_of(field(*it, "period", "class"), "period")});
    else
      throw ParseError("class: unknown kind \"" + kind + "\"");
  }
  return g;
}

std::string serialise_game(const TemporalGame& g) {
  json doc;
  json vertices = json::array();
  json edges = json::array();
  for (Vertex v = 0; v < g.size(); ++v) {
    json vj = {{"id", g.name(v)}, {"owner", to_int(g.owner(v))}};
    if (auto c = g.colour(v)) vj["colour"] = *c;
    vertices.push_back(std::move(vj));
    for (const auto& e : g.out_edges(v))
      edges.push_back({{"from", g.name(v)}, {"to", g.name(e.to)}, {"avail", timeset_json(e.avail)}});
  }
  doc["vertices"] = std::move(vertices);
  doc["edges"] = std::move(edges);
  doc["initial"] = g.size() > g.initial() ? json(g.name(g.initial())) : json(nullptr);

  std::visit(
      [&](const auto& o) {
        using O = std::decay_t<decltype(o)>;
        if constexpr (std::is_same_v<O, ReachObjective>)
          doc["objective"] = {{"type", "reach"}, {"targets", names_json(g, o.targets)}};
        else if constexpr (std::is_same_v<O, PunctualObjective>)
          doc["objective"] = {
              {"type", "punctual"}, {"targets", names_json(g, o.targets)}, {"targetTime", time_json(o.target_time)}};
        else
          doc["objective"] = {{"type", "parity"}};
      },
      g.objective());

  std::visit(
      [&](const auto& c) {
        using C = std::decay_t<decltype(c)>;
        if constexpr (std::is_same_v<C, StaticClass>)
          doc["class"] = {{"kind", "static"}};
        else if constexpr (std::is_same_v<C, FiniteHorizonClass>)
          doc["class"] = {{"kind", "finite"}, {"horizon", time_json(c.horizon)}};
        else if constexpr (std::is_same_v<C, PeriodicClass>)
          doc["class"] = {{"kind", "periodic"}, {"period", time_json(c.period)}};
        else
          doc["class"] = {{"kind", "ultimately-periodic"}, {"prefix", time_json(c.prefix)}, {"period", time_json(c.period)}};
      },
      g.class_hint());
  return doc.dump(2) + "\n";
}

Certificate parse_certificate(std::string_view text, const TemporalGame& g) {
  const json doc = parse_json(text);
  Certificate cert;
  const auto& vs = field(doc, "vertices", "certificate");
  if (!vs.is_array()) throw ParseError("certificate: vertices must be an array");
  for (const auto& v : vs) cert.vertices.push_back(vertex_of(g, v, "certificate vertex"));
  std::sort(cert.vertices.begin(), cert.vertices.end());
  cert.vertices.erase(std::unique(cert.vertices.begin(), cert.vertices.end()), cert.vertices.end());
  const auto& es = field(doc, "edges", "certificate");
  if (!es.is_array()) throw ParseError("certificate: edges must be an array");
  for (const auto& e : es) {
    const auto c = small_of(field(e, "colour", "certificate edge"), "certificate edge colour");
    if (c > std::numeric_limits<Colour>::max()) throw ParseError("certificate edge colour too large");
    cert.edges.push_back({vertex_of(g, field(e, "from", "certificate edge"), "certificate edge from"),
                          static_cast<Colour>(c), vertex_of(g, field(e, "to", "certificate edge"), "certificate edge to")});
  }
  std::sort(cert.edges.begin(), cert.edges.end());
  cert.edges.erase(std::unique(cert.edges.begin(), cert.edges.end()), cert.edges.end());
  cert.initial = vertex_of(g, field(doc, "initial", "certificate"), "certificate initial");
  return cert;
}

std::string serialise_certificate(const Certificate& cert, const TemporalGame& g) {
  json edges = json::array();
  for (const auto& e : cert.edges) edges.push_back({{"from", g.name(e.from)}, {"colour", e.colour}, {"to", g.name(e.to)}});
  const json doc = {{"vertices", names_json(g, cert.vertices)}, {"edges", edges}, {"initial", g.name(cert.initial)}};
  return doc.dump(2) + "\n";
}

std::string serialise_reduction_map(const TemporalGame& input, const ReductionOutput& out) {
  json map = json::object();
  for (Vertex v = 0; v < input.size(); ++v) map[input.name(v)] = out.game.name(out.vertex_map.at(v));
  const json doc = {{"vertexMap", map}, {"claim", out.claim}};
  return doc.dump(2) + "\n";
}

std::string read_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError("cannot read " + path.string());
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_file(const std::filesystem::path& path, std::string_view content) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw Error("cannot write " + path.string());
  out << content;
  if (!out) throw Error("cannot write " + path.string());
}

}  // namespace tgames
