#include "cpyr/relations.hpp"

#include <algorithm>
#include <sstream>
#include <tuple>

#include <json.hpp>

#include "cpyr/containment.hpp"
#include "cpyr/errors.hpp"

namespace cpyr {

namespace {

Dart require_vertex(const LevelView& view, Dart d) {
  if (!view.contains(d)) {
    throw InvalidArgument("dart " + std::to_string(d.id()) + " is not alive at level " +
                          std::to_string(view.level()));
  }
  return view.vertex(d);
}

}  // namespace

namespace {

bool is_loop(const LevelView& view, Dart d) { return view.vertex(d) == view.vertex(view.alpha(d)); }

// The non-loop dart other than `d` in d's face when exactly two non-loop darts
// meet there: the face is then a regular point of one boundary curve, crossed
// only by self-loops, which run inside a region.
Dart other_at_regular_point(const LevelView& view, Dart d) {
  Dart other{};
  int count = 0;
  Dart e = d;
  do {
    if (!is_loop(view, e)) {
      ++count;
      if (e != d) other = e;
    }
    e = view.phi(e);
  } while (e != d);
  return count == 2 ? other : Dart{};
}

// Dart continuing the boundary piece of d (same two vertices) past the end of
// its segment, or Dart{0}.
Dart next_piece(const LevelView& view, Dart d) {
  const Dart x = other_at_regular_point(view, view.alpha(d));
  if (!x.valid() || view.vertex(x) != view.vertex(d)) return {};
  return x;
}

Dart prev_piece(const LevelView& view, Dart d) {
  const Dart y = other_at_regular_point(view, d);
  if (!y.valid() || view.vertex(view.alpha(y)) != view.vertex(d)) return {};
  return view.alpha(y);
}

}  // namespace

std::vector<Dart> edges_between(const LevelView& view, Dart a, Dart b) {
  const Dart va = require_vertex(view, a);
  const Dart vb = require_vertex(view, b);
  if (va == vb) throw InvalidArgument("edges_between needs two distinct vertices");
  std::vector<Dart> out;
  Dart d = va;
  do {
    if (view.vertex(view.alpha(d)) == vb) out.push_back(d);
    d = view.sigma(d);
  } while (d != va);
  return out;
}

std::vector<Segment> meets_each(const LevelView& view, Dart a, Dart b) {
  const auto darts = edges_between(view, a, b);
  std::vector<char> used(view.map().slot_count(), 0);
  std::vector<Segment> out;
  for (Dart d0 : darts) {
    if (used[d0.slot()]) continue;
    Dart first = d0;
    for (Dart p = prev_piece(view, first); p.valid() && p != d0; p = prev_piece(view, p)) {
      first = p;
    }
    Segment piece;
    Dart d = first;
    do {
      used[d.slot()] = 1;
      const Segment s = segment(view.pyramid(), view.level(), d);
      piece.darts.insert(piece.darts.end(), s.darts.begin(), s.darts.end());
      piece.cracks.insert(piece.cracks.end(), s.cracks.begin(), s.cracks.end());
      d = next_piece(view, d);
    } while (d.valid() && d != first && !used[d.slot()]);
    out.push_back(std::move(piece));
  }
  return out;
}

bool meets_exists(const LevelView& view, Dart a, Dart b) {
  const Dart va = require_vertex(view, a);
  const Dart vb = require_vertex(view, b);
  if (va == vb) return false;
  Dart d = va;
  do {
    if (view.vertex(view.alpha(d)) == vb) return true;
    d = view.sigma(d);
  } while (d != va);
  return false;
}

Rag rag_export(const LevelView& view) {
  Rag rag;
  const Dart ext = view.exterior_vertex();
  for (Dart v : view.vertices()) {
    if (v != ext) rag.vertices.push_back(v);
  }
  for (Dart d : view.map().darts()) {
    Dart u = view.vertex(d);
    Dart w = view.vertex(view.alpha(d));
    if (u == w || u == ext || w == ext) continue;
    if (CanonicalLess{}(w, u)) std::swap(u, w);
    rag.edges.emplace_back(u, w);
  }
  auto less = [](const std::pair<Dart, Dart>& x, const std::pair<Dart, Dart>& y) {
    if (x.first != y.first) return CanonicalLess{}(x.first, y.first);
    return CanonicalLess{}(x.second, y.second);
  };
  std::sort(rag.edges.begin(), rag.edges.end(), less);
  rag.edges.erase(std::unique(rag.edges.begin(), rag.edges.end()), rag.edges.end());
  return rag;
}

std::string rag_dot(const Rag& rag) {
  std::ostringstream os;
  os << "graph rag {\n";
  for (Dart v : rag.vertices) os << "  \"r" << v.id() << "\" [label=\"" << v.id() << "\"];\n";
  for (const auto& [a, b] : rag.edges) os << "  \"r" << a.id() << "\" -- \"r" << b.id() << "\";\n";
  os << "}\n";
  return os.str();
}

const char* to_string(Relation r) {
  switch (r) {
    case Relation::meets_exists: return "meets_exists";
    case Relation::meets_each: return "meets_each";
    case Relation::contains: return "contains";
    case Relation::inside: return "inside";
    case Relation::composed_of: return "composed_of";
  }
  return "?";
}

RelationReport relation_report(const LevelView& view, std::optional<Dart> filter) {
  RelationReport rep;
  rep.level = view.level();
  const Dart ext = view.exterior_vertex();
  for (Dart v : view.vertices()) {
    if (v != ext) rep.regions.push_back(v);
  }
  std::optional<Dart> only;
  if (filter) {
    only = require_vertex(view, *filter);
    if (*only == ext) throw InvalidArgument("the exterior is not a region");
  }
  auto keep = [&](Dart a, Dart b) { return !only || a == *only || b == *only; };

  for (const auto& [a, b] : rag_export(view).edges) {
    if (!keep(a, b)) continue;
    rep.entries.push_back({Relation::meets_exists, a, b, {}});
    rep.entries.push_back({Relation::meets_each, a, b, meets_each(view, a, b)});
  }

  rep.containment = view.redundant_edge_free();
  if (!rep.containment) {
    rep.warnings.push_back("level " + std::to_string(view.level()) +
                           " holds redundant edges; containment omitted");
  } else {
    for (Dart a : rep.regions) {
      for (Dart b : inside_all(view, a)) {
        if (b == ext || !keep(a, b)) continue;
        rep.entries.push_back({Relation::contains, a, b, {}});
        rep.entries.push_back({Relation::inside, b, a, {}});
      }
    }
  }

  if (view.level() == 0) {
    for (Dart v : rep.regions) {
      if (keep(v, v)) rep.entries.push_back({Relation::composed_of, v, v, {}});
    }
  } else {
    for (const auto& [v, parts] : view.pyramid().composition(view.level())) {
      if (v == ext) continue;
      for (Dart p : parts) {
        if (keep(v, v)) rep.entries.push_back({Relation::composed_of, v, p, {}});
      }
    }
  }

  std::stable_sort(rep.entries.begin(), rep.entries.end(),
                   [](const RelationEntry& x, const RelationEntry& y) {
                     if (x.relation != y.relation) return x.relation < y.relation;
                     if (x.a != y.a) return CanonicalLess{}(x.a, y.a);
                     return CanonicalLess{}(x.b, y.b);
                   });
  return rep;
}

std::string report_json(const RelationReport& report) {
  using nlohmann::json;
  json j;
  j["level"] = report.level;
  j["containment"] = report.containment;
  j["warnings"] = report.warnings;
  json regions = json::array();
  for (Dart r : report.regions) regions.push_back(r.id());
  j["regions"] = regions;
  json rel = json::array();
  for (const auto& e : report.entries) {
    json o{{"relation", to_string(e.relation)}, {"a", e.a.id()}, {"b", e.b.id()}};
    if (e.relation == Relation::meets_each) {
      o["count"] = e.segments.size();
      json segs = json::array();
      for (const auto& s : e.segments) {
        json darts = json::array();
        for (Dart d : s.darts) darts.push_back(d.id());
        segs.push_back({{"darts", darts}, {"freeman", freeman_chain(s)}});
      }
      o["segments"] = segs;
    }
    rel.push_back(o);
  }
  j["relations"] = rel;
  return j.dump(2) + "\n";
}

}  // namespace cpyr
