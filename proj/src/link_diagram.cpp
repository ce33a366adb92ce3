#include "thompson/link_diagram.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <map>
#include <sstream>

#include "thompson/errors.hpp"

namespace thompson {
namespace {

// Feeds an existing PD code back through the builder, optionally swapping the
// over/under roles.
LinkDiagram rebuild(const std::vector<Crossing>& crossings, int free_loops, bool swap_strands) {
  DiagramBuilder b;
  std::map<int, DiagramBuilder::Port> first_seen;
  for (std::size_t i = 0; i < crossings.size(); ++i) b.add_crossing(!swap_strands);
  for (std::size_t i = 0; i < crossings.size(); ++i) {
    for (int s = 0; s < 4; ++s) {
      int label = crossings[i].arcs[s];
      DiagramBuilder::Port here{static_cast<int>(i), s};
      auto it = first_seen.find(label);
      if (it == first_seen.end()) {
        first_seen.emplace(label, here);
      } else {
        b.connect(it->second, here);
        first_seen.erase(it);
      }
    }
  }
  if (!first_seen.empty()) {
    throw InvalidDiagram("arc label " + std::to_string(first_seen.begin()->first) + " occurs only once");
  }
  b.add_free_loops(free_loops);
  return b.build();
}

}  // namespace

LinkDiagram::LinkDiagram(std::vector<Crossing> crossings, int free_loops)
    : crossings_(std::move(crossings)), free_loops_(free_loops) {
  if (free_loops_ < 0) throw InvalidDiagram("negative free loop count");
  std::map<int, int> count;
  for (const Crossing& c : crossings_) {
    for (int a : c.arcs) ++count[a];
  }
  for (auto [label, n] : count) {
    if (n != 2) {
      throw InvalidDiagram("arc label " + std::to_string(label) + " occurs " + std::to_string(n) +
                           " times");
    }
  }
}

int LinkDiagram::component_count() const {
  // Walk strands: entering a crossing at slot s leaves at s+2.
  std::map<int, std::vector<std::pair<int, int>>> where;
  for (std::size_t i = 0; i < crossings_.size(); ++i) {
    for (int s = 0; s < 4; ++s) where[crossings_[i].arcs[s]].push_back({static_cast<int>(i), s});
  }
  std::map<int, bool> seen;
  int components = 0;
  for (auto& [label, occ] : where) {
    if (seen[label]) continue;
    ++components;
    int arc = label;
    auto at = occ[0];
    while (!seen[arc]) {
      seen[arc] = true;
      auto& o = where[arc];
      auto other = (o[0] == at) ? o[1] : o[0];
      int out_slot = (other.second + 2) % 4;
      at = {other.first, out_slot};
      arc = crossings_[other.first].arcs[out_slot];
    }
  }
  return components + free_loops_;
}

LinkDiagram LinkDiagram::mirror() const { return rebuild(crossings_, free_loops_, true); }

LinkDiagram LinkDiagram::normalized() const { return rebuild(crossings_, free_loops_, false); }

bool LinkDiagram::is_alternating() const {
  // Leaving a crossing at an even slot means we were on the under-strand.
  std::map<int, std::vector<std::pair<int, int>>> where;
  for (std::size_t i = 0; i < crossings_.size(); ++i) {
    for (int s = 0; s < 4; ++s) where[crossings_[i].arcs[s]].push_back({static_cast<int>(i), s});
  }
  for (auto& [label, occ] : where) {
    // Both ends of an arc must differ in over/under parity.
    if (occ[0].second % 2 == occ[1].second % 2) return false;
  }
  return true;
}

std::string LinkDiagram::to_pd() const {
  std::ostringstream out;
  for (const Crossing& c : crossings_) {
    out << "X(" << c.arcs[0] << ',' << c.arcs[1] << ',' << c.arcs[2] << ',' << c.arcs[3] << ")\n";
  }
  out << "O " << free_loops_ << '\n';
  return out.str();
}

LinkDiagram LinkDiagram::from_pd(std::string_view text) {
  std::vector<Crossing> crossings;
  int loops = 0;
  std::istringstream in{std::string(text)};
  std::string line;
  while (std::getline(in, line)) {
    std::string s;
    for (char c : line) {
      if (!std::isspace(static_cast<unsigned char>(c))) s.push_back(c);
    }
    if (s.empty()) continue;
    if (s[0] == 'O') {
      auto [p, ec] = std::from_chars(s.data() + 1, s.data() + s.size(), loops);
      if (ec != std::errc() || p != s.data() + s.size()) throw ParseError("PD line \"" + line + "\"");
      continue;
    }
    if (s.size() < 4 || s[0] != 'X' || s[1] != '(' || s.back() != ')') throw ParseError("PD line \"" + line + "\"");
    Crossing c;
    std::size_t pos = 2;
    for (int k = 0; k < 4; ++k) {
      auto [p, ec] = std::from_chars(s.data() + pos, s.data() + s.size() - 1, c.arcs[k]);
      if (ec != std::errc()) throw ParseError("PD line \"" + line + "\"");
      pos = static_cast<std::size_t>(p - s.data());
      if (k < 3) {
        if (s[pos] != ',') throw ParseError("PD line \"" + line + "\"");
        ++pos;
      }
    }
    if (pos != s.size() - 1) throw ParseError("PD line \"" + line + "\"");
    crossings.push_back(c);
  }
  return LinkDiagram(std::move(crossings), loops);
}

LinkDiagram disjoint_union(const LinkDiagram& a, const LinkDiagram& b) {
  int offset = 0;
  for (const Crossing& c : a.crossings_) {
    for (int x : c.arcs) offset = std::max(offset, x);
  }
  std::vector<Crossing> all = a.crossings_;
  for (Crossing c : b.crossings_) {
    for (int& x : c.arcs) x += offset;
    all.push_back(c);
  }
  return LinkDiagram(std::move(all), a.free_loops_ + b.free_loops_).normalized();
}

int DiagramBuilder::add_crossing(bool under_on_even) {
  under_on_even_.push_back(under_on_even);
  partner_.push_back({-1, -1, -1, -1});
  return static_cast<int>(partner_.size()) - 1;
}

void DiagramBuilder::connect(Port a, Port b) {
  auto& pa = partner_.at(a.crossing)[a.slot];
  auto& pb = partner_.at(b.crossing)[b.slot];
  if (pa >= 0 || pb >= 0 || (a.crossing == b.crossing && a.slot == b.slot)) {
    throw InvalidDiagram("port connected twice");
  }
  pa = b.crossing * 4 + b.slot;
  pb = a.crossing * 4 + a.slot;
}

LinkDiagram DiagramBuilder::build() const {
  const int ports = static_cast<int>(partner_.size()) * 4;
  for (int p = 0; p < ports; ++p) {
    if (partner_[p / 4][p % 4] < 0) throw InvalidDiagram("unconnected crossing port");
  }
  // label[p]: arc label of the edge leaving/entering port p; incoming[p] if
  // the traversal enters the crossing through p.
  std::vector<int> label(ports, 0);
  std::vector<bool> incoming(ports, false);
  int next_label = 1;
  for (int start = 0; start < ports; ++start) {
    if (label[start] != 0) continue;
    int exit = start;
    while (label[exit] == 0) {
      int enter = partner_[exit / 4][exit % 4];
      label[exit] = label[enter] = next_label++;
      incoming[enter] = true;
      exit = (enter / 4) * 4 + (enter % 4 + 2) % 4;
    }
  }
  std::vector<Crossing> crossings(partner_.size());
  for (std::size_t i = 0; i < partner_.size(); ++i) {
    int base = static_cast<int>(i) * 4;
    int first = under_on_even_[i] ? 0 : 1;
    if (!incoming[base + first]) first += 2;
    for (int k = 0; k < 4; ++k) crossings[i].arcs[k] = label[base + (first + k) % 4];
  }
  return LinkDiagram(std::move(crossings), free_loops_);
}

}  // namespace thompson
