#include "tgames/game.hpp"

#include <algorithm>

#include "tgames/errors.hpp"

namespace tgames {

Vertex TemporalGame::add_vertex(std::string name, Player owner, std::optional<Colour> colour) {
  if (index_.contains(name)) throw Error("duplicate vertex id \"" + name + "\"");
  const auto v = static_cast<Vertex>(names_.size());
  index_.emplace(name, v);
  names_.push_back(std::move(name));
  owners_.push_back(owner);
  colours_.push_back(colour);
  out_.emplace_back();
  return v;
}

void TemporalGame::set_edge(Vertex from, Vertex to, TimeSet avail) {
  if (from >= size() || to >= size()) throw Error("edge endpoint out of range");
  auto& list = out_[from];
  auto it = std::lower_bound(list.begin(), list.end(), to,
                             [](const TemporalEdge& e, Vertex w) { return e.to < w; });
  if (it != list.end() && it->to == to)
    it->avail = std::move(avail);
  else
    list.insert(it, TemporalEdge{to, std::move(avail)});
}

std::optional<Vertex> TemporalGame::find(std::string_view name) const {
  auto it = index_.find(std::string(name));
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

bool TemporalGame::fully_coloured() const {
  return std::all_of(colours_.begin(), colours_.end(), [](const auto& c) { return c.has_value(); });
}

const TimeSet* TemporalGame::edge(Vertex from, Vertex to) const {
  const auto& list = out_.at(from);
  auto it = std::lower_bound(list.begin(), list.end(), to,
                             [](const TemporalEdge& e, Vertex w) { return e.to < w; });
  if (it == list.end() || it->to != to) return nullptr;
  return &it->avail;
}

std::size_t TemporalGame::edge_count() const {
  std::size_t n = 0;
  for (const auto& l : out_) n += l.size();
  return n;
}

VertexSet TemporalGame::targets() const {
  VertexSet s(size());
  if (const auto* r = std::get_if<ReachObjective>(&objective_))
    for (Vertex v : r->targets) s.insert(v);
  if (const auto* p = std::get_if<PunctualObjective>(&objective_))
    for (Vertex v : p->targets) s.insert(v);
  return s;
}

bool operator==(const TemporalGame& a, const TemporalGame& b) {
  return a.names_ == b.names_ && a.owners_ == b.owners_ && a.colours_ == b.colours_ &&
         a.out_ == b.out_ && a.objective_ == b.objective_ && a.initial_ == b.initial_ &&
         a.hint_ == b.hint_;
}

std::vector<Vertex> successors(const TemporalGame& g, Vertex v, const Time& t) {
  std::vector<Vertex> out;
  for (const auto& e : g.out_edges(v))
    if (e.avail.contains(t)) out.push_back(e.to);
  return out;
}

StaticGameGraph::StaticGameGraph(std::vector<Player> owners)
    : owners_(std::move(owners)), succ_(owners_.size()), pred_(owners_.size()) {}

Vertex StaticGameGraph::add_vertex(Player owner, std::optional<Colour> colour) {
  const auto v = static_cast<Vertex>(owners_.size());
  owners_.push_back(owner);
  succ_.emplace_back();
  pred_.emplace_back();
  if (colour) {
    colours_.resize(owners_.size(), 0);
    colours_[v] = *colour;
  } else if (!colours_.empty()) {
    colours_.push_back(0);
  }
  return v;
}

namespace {
void sorted_insert(std::vector<Vertex>& list, Vertex w) {
  if (list.empty() || list.back() < w) {
    list.push_back(w);
    return;
  }
  auto it = std::lower_bound(list.begin(), list.end(), w);
  if (it == list.end() || *it != w) list.insert(it, w);
}
}  // namespace

void StaticGameGraph::add_edge(Vertex from, Vertex to) {
  if (from >= size() || to >= size()) throw Error("edge endpoint out of range");
  sorted_insert(succ_[from], to);
  sorted_insert(pred_[to], from);
}

void StaticGameGraph::set_colour(Vertex v, Colour c) {
  if (colours_.empty()) colours_.assign(size(), 0);
  colours_.at(v) = c;
}

bool StaticGameGraph::has_edge(Vertex from, Vertex to) const {
  const auto& l = succ_.at(from);
  return std::binary_search(l.begin(), l.end(), to);
}

std::size_t StaticGameGraph::edge_count() const {
  std::size_t n = 0;
  for (const auto& l : succ_) n += l.size();
  return n;
}

StaticGameGraph snapshot(const TemporalGame& g, const Time& t) {
  StaticGameGraph s;
  const bool coloured = g.fully_coloured();
  for (Vertex v = 0; v < g.size(); ++v)
    s.add_vertex(g.owner(v), coloured ? g.colour(v) : std::nullopt);
  for (Vertex v = 0; v < g.size(); ++v)
    for (const auto& e : g.out_edges(v))
      if (e.avail.contains(t)) s.add_edge(v, e.to);
  return s;
}

bool is_static(const TemporalGame& g) {
  for (Vertex v = 0; v < g.size(); ++v)
    for (const auto& e : g.out_edges(v))
      if (!e.avail.is<TimeSet::Always>() && !e.avail.is<TimeSet::Never>()) return false;
  return true;
}

TemporalGame embed_static(const StaticGameGraph& g, std::span<const std::string> names) {
  TemporalGame t;
  for (Vertex v = 0; v < g.size(); ++v) {
    std::string name = v < names.size() ? names[v] : "v" + std::to_string(v);
    t.add_vertex(std::move(name), g.owner(v),
                 g.has_colours() ? std::optional<Colour>(g.colour(v)) : std::nullopt);
  }
  for (Vertex v = 0; v < g.size(); ++v)
    for (Vertex w : g.successors(v)) t.set_edge(v, w, TimeSet::always());
  return t;
}

std::string vertex_label(const TemporalGame& g, Vertex v) {
  return v < g.size() ? "\"" + g.name(v) + "\"" : "#" + std::to_string(v);
}

}  // namespace tgames
