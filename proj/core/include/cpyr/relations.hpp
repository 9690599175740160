#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "cpyr/boundary.hpp"
#include "cpyr/level.hpp"

namespace cpyr {

/// Darts of sigma*(a) whose edge joins a to b.
std::vector<Dart> edges_between(const LevelView& view, Dart a, Dart b);

/// One segment per connected piece of the common border of a and b; empty
/// when they do not meet. A piece usually is one edge; when the self-loop
/// tying a hole to its region lands in the middle of a border, the two edges
/// on either side are joined back into one piece.
std::vector<Segment> meets_each(const LevelView& view, Dart a, Dart b);
bool meets_exists(const LevelView& view, Dart a, Dart b);

/// Region adjacency graph: simple graph over the regions (the exterior vertex
/// is left out), one edge per adjacent pair.
struct Rag {
  std::vector<Dart> vertices;                 // canonical darts, sorted
  std::vector<std::pair<Dart, Dart>> edges;   // first < second, sorted
};

Rag rag_export(const LevelView& view);
std::string rag_dot(const Rag& rag);

enum class Relation { meets_exists, meets_each, contains, inside, composed_of };
const char* to_string(Relation r);

struct RelationEntry {
  Relation relation = Relation::meets_exists;
  Dart a{};
  Dart b{};
  std::vector<Segment> segments;  // meets_each only
};

struct RelationReport {
  int level = 0;
  bool containment = true;        // false when the level holds redundant edges
  std::vector<std::string> warnings;
  std::vector<Dart> regions;
  std::vector<RelationEntry> entries;
};

/// All relations between the regions of a level, in a fixed order: by
/// relation kind, then by the canonical darts of a and b. With a filter only
/// the entries involving that region are kept. composed_of lists, for each
/// region, the regions of the level below it was built from (itself at
/// level 0).
RelationReport relation_report(const LevelView& view, std::optional<Dart> filter = std::nullopt);

/// JSON text: {"level", "containment", "warnings", "regions",
///  "relations": [{"relation", "a", "b", "count"?, "segments"?}]}.
/// Segments carry their darts and a Freeman chain.
std::string report_json(const RelationReport& report);

}  // namespace cpyr
