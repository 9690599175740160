#include "cpyr/containment.hpp"

#include <algorithm>
#include <string>

#include "cpyr/boundary.hpp"
#include "cpyr/errors.hpp"

namespace cpyr {

namespace {

void require_query(const LevelView& view, Dart v) {
  if (!view.contains(v)) {
    throw InvalidArgument("dart " + std::to_string(v.id()) + " is not alive at level " +
                          std::to_string(view.level()));
  }
  if (!view.redundant_edge_free()) {
    throw RedundantEdgeError("level " + std::to_string(view.level()) +
                             " holds redundant edges (face of dart " +
                             std::to_string(view.redundant_witness().id()) + ")");
  }
}

int junction(const LevelView& view, Dart a, Dart b) {
  return angle(view.last_move(a), view.first_move(b)).value();
}

}  // namespace

std::vector<LoopRecord> classify_loops(const LevelView& view, Dart v, ContainmentStats* stats) {
  require_query(view, v);
  const Dart vertex = view.vertex(v);

  struct Open {
    Dart dart;
    int prefix;  // or'(d_1 .. d_j)
  };
  std::vector<Open> stack;
  std::vector<char> open(view.map().slot_count(), 0);
  std::vector<LoopRecord> loops;

  Dart prev;
  int prefix = 0;
  Dart cur = v;
  std::size_t visits = 0;
  do {
    ++visits;
    const int before = prefix;  // or'(d_1 .. d_{k-1})
    prefix = prev.valid() ? before + junction(view, prev, cur) + view.orientation(cur)
                          : view.orientation(cur);
    const Dart partner = view.alpha(cur);
    if (view.vertex(partner) == vertex) {
      if (!stack.empty() && stack.back().dart == partner) {
        const Open o = stack.back();
        stack.pop_back();
        open[partner.slot()] = 0;
        const Dart after_first = view.sigma(o.dart);
        if (after_first == cur) throw InternalError("empty self-loop met while classifying");
        const int inner = before - o.prefix - junction(view, o.dart, after_first) +
                          junction(view, prev, after_first);
        if (inner != 4 && inner != -4) {
          throw InternalError("loop orientation " + std::to_string(inner) + " is not +-4");
        }
        loops.push_back({o.dart, cur, inner, inner == 4 ? o.dart : cur});
      } else if (open[partner.slot()]) {
        throw InternalError("self-loops at vertex " + std::to_string(vertex.id()) +
                            " are not nested");
      } else {
        stack.push_back({cur, prefix});
        open[cur.slot()] = 1;
      }
    }
    prev = cur;
    cur = view.sigma(cur);
  } while (cur != v);
  if (!stack.empty()) throw InternalError("unclosed self-loop while classifying");
  if (stats) stats->classify_visits += visits;
  return loops;
}

std::vector<Dart> starting_darts(const LevelView& view, Dart v, ContainmentStats* stats) {
  std::vector<Dart> out;
  for (const auto& l : classify_loops(view, v, stats)) out.push_back(l.starting);
  return out;
}

std::vector<Dart> inside_direct(const LevelView& view, Dart v, ContainmentStats* stats) {
  const auto starts = starting_darts(view, v, stats);
  const Dart vertex = view.vertex(v);
  std::vector<char> is_start(view.map().slot_count(), 0);
  for (Dart s : starts) is_start[s.slot()] = 1;

  std::vector<Dart> out;
  std::size_t visits = 0;
  for (Dart s : starts) {
    const Dart end = view.alpha(s);
    for (Dart e = view.sigma(s); e != end; e = view.sigma(e)) {
      ++visits;
      if (is_start[e.slot()]) {
        e = view.alpha(e);  // nested loop: its span is walked from its own start
        continue;
      }
      const Dart w = view.vertex(view.alpha(e));
      if (w != vertex) out.push_back(w);
    }
  }
  if (stats) stats->inside_visits += visits;
  std::sort(out.begin(), out.end(), CanonicalLess{});
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

std::vector<Dart> inside_all(const LevelView& view, Dart v) {
  const Dart vertex = view.vertex(v);
  std::vector<char> seen(view.map().slot_count(), 0);
  seen[vertex.slot()] = 1;
  std::vector<Dart> out;
  std::vector<Dart> todo;
  for (Dart w : inside_direct(view, v)) {
    seen[w.slot()] = 1;
    todo.push_back(w);
  }
  while (!todo.empty()) {
    const Dart u = todo.back();
    todo.pop_back();
    out.push_back(u);
    Dart e = u;
    do {
      const Dart w = view.vertex(view.alpha(e));
      if (!seen[w.slot()]) {
        seen[w.slot()] = 1;
        todo.push_back(w);
      }
      e = view.sigma(e);
    } while (e != u);
  }
  std::sort(out.begin(), out.end(), CanonicalLess{});
  return out;
}

bool contains(const LevelView& view, Dart a, Dart b) {
  if (!view.contains(b)) throw InvalidArgument("dart " + std::to_string(b.id()) + " is dead");
  const Dart target = view.vertex(b);
  if (view.vertex(a) == target) return false;
  const auto inside = inside_all(view, a);
  return std::binary_search(inside.begin(), inside.end(), target, CanonicalLess{});
}

std::vector<LoopCheck> check_loops(const LevelView& view, Dart v) {
  std::vector<LoopCheck> out;
  const auto loops = classify_loops(view, v);
  if (loops.empty()) return out;
  const auto cyc = orbit(view.map(), v, Permutation::sigma);
  const std::size_t p = cyc.size();
  auto index_of = [&](Dart d) {
    return static_cast<std::size_t>(std::find(cyc.begin(), cyc.end(), d) - cyc.begin());
  };
  for (const auto& loop : loops) {
    LoopCheck c{loop};
    const std::size_t j = index_of(loop.first);
    const std::size_t k = index_of(loop.second);
    std::vector<Dart> inner(cyc.begin() + static_cast<long>(j) + 1,
                            cyc.begin() + static_cast<long>(k));
    std::vector<Dart> outer;
    for (std::size_t r = k + 1; r < p; ++r) outer.push_back(cyc[r]);
    for (std::size_t r = 0; r < j; ++r) outer.push_back(cyc[r]);
    if (inner.empty() || outer.empty()) {
      out.push_back(c);
      continue;
    }
    c.inner_direct = sequence_orientation(view, inner, true);
    c.outer_direct = sequence_orientation(view, outer, true);
    const Dart after_j = cyc[(j + 1) % p];
    const Dart before_j = cyc[(j + p - 1) % p];
    const Dart before_k = cyc[(k + p - 1) % p];
    const Dart after_k = cyc[(k + 1) % p];
    c.brackets_ok = after_j != view.alpha(before_k) && before_j != view.alpha(after_k);
    out.push_back(c);
  }
  return out;
}

}  // namespace cpyr
