#include "thompson/simplify.hpp"

#include <map>
#include <optional>
#include <set>

namespace thompson {
namespace {

struct Working {
  std::vector<std::array<int, 4>> crossings;
  std::vector<bool> alive;
  int free_loops = 0;

  // Remove the given crossings; strands pass straight through each removed
  // crossing (slot s to s+2). Open ends are re-joined by renaming labels,
  // closed circuits become free loops.
  void remove(const std::vector<int>& dead) {
    struct Slot {
      int c, s;
    };
    std::vector<Slot> slots;
    std::map<int, std::vector<int>> by_label;
    for (int c : dead) {
      for (int s = 0; s < 4; ++s) {
        by_label[crossings[c][s]].push_back(static_cast<int>(slots.size()));
        slots.push_back({c, s});
      }
    }
    auto through = [&](int i) {
      for (int j = 0; j < static_cast<int>(slots.size()); ++j) {
        if (slots[j].c == slots[i].c && slots[j].s == (slots[i].s + 2) % 4) return j;
      }
      return -1;
    };
    auto along_arc = [&](int i) {
      const auto& v = by_label[crossings[slots[i].c][slots[i].s]];
      if (v.size() == 2) return v[0] == i ? v[1] : v[0];
      return -1;  // the arc's other end is a surviving crossing
    };
    std::vector<bool> used(slots.size(), false);
    std::vector<std::pair<int, int>> renames;
    for (int i = 0; i < static_cast<int>(slots.size()); ++i) {
      if (used[i] || along_arc(i) >= 0) continue;
      int cur = i;
      while (true) {
        used[cur] = true;
        int t = through(cur);
        used[t] = true;
        int next = along_arc(t);
        if (next < 0) {
          renames.push_back({crossings[slots[i].c][slots[i].s], crossings[slots[t].c][slots[t].s]});
          break;
        }
        cur = next;
      }
    }
    for (int i = 0; i < static_cast<int>(slots.size()); ++i) {
      if (used[i]) continue;
      ++free_loops;
      int cur = i;
      while (!used[cur]) {
        used[cur] = true;
        int t = through(cur);
        used[t] = true;
        cur = along_arc(t);
      }
    }
    for (int c : dead) alive[c] = false;
    for (auto [keep, drop] : renames) {
      for (std::size_t c = 0; c < crossings.size(); ++c) {
        if (!alive[c]) continue;
        for (int& a : crossings[c]) {
          if (a == drop) a = keep;
        }
      }
    }
  }

  std::optional<int> find_kink() const {
    for (std::size_t c = 0; c < crossings.size(); ++c) {
      if (!alive[c]) continue;
      for (int s = 0; s < 4; ++s) {
        if (crossings[c][s] == crossings[c][(s + 1) % 4]) return static_cast<int>(c);
      }
    }
    return std::nullopt;
  }

  std::optional<std::pair<int, int>> find_bigon() const {
    for (std::size_t x = 0; x < crossings.size(); ++x) {
      if (!alive[x]) continue;
      for (std::size_t y = x + 1; y < crossings.size(); ++y) {
        if (!alive[y]) continue;
        for (int i = 0; i < 4; ++i) {
          int s = crossings[x][i];
          int t = crossings[x][(i + 1) % 4];
          for (int j = 0; j < 4; ++j) {
            // The bigon face is traversed in opposite senses at its two
            // corners, so Y lists t before s.
            if (crossings[y][j] != t || crossings[y][(j + 1) % 4] != s) continue;
            // Arc s is on the same strand role (over or under) at both ends.
            if (i % 2 == (j + 1) % 2) return std::pair{static_cast<int>(x), static_cast<int>(y)};
          }
        }
      }
    }
    return std::nullopt;
  }
};

}  // namespace

SimplificationReport simplify(const LinkDiagram& d) {
  Working w;
  for (const Crossing& c : d.crossings()) w.crossings.push_back(c.arcs);
  w.alive.assign(w.crossings.size(), true);
  w.free_loops = d.free_loops();
  SimplificationReport report;
  while (true) {
    if (auto k = w.find_kink()) {
      w.remove({*k});
      ++report.r1_moves;
      continue;
    }
    if (auto b = w.find_bigon()) {
      w.remove({b->first, b->second});
      ++report.r2_moves;
      continue;
    }
    break;
  }
  std::vector<Crossing> rest;
  for (std::size_t c = 0; c < w.crossings.size(); ++c) {
    if (w.alive[c]) rest.push_back(Crossing{w.crossings[c]});
  }
  report.diagram = LinkDiagram(std::move(rest), w.free_loops).normalized();
  report.removed_unknots = w.free_loops - d.free_loops();
  return report;
}

}  // namespace thompson
