#include "seifalt/link_diagrams.hpp"

#include <algorithm>
#include <cctype>
#include <functional>
#include <map>
#include <set>
#include <sstream>

namespace seifalt {

namespace {

int max_label(const PDCode& pd) {
  int m = 0;
  for (const auto& x : pd.crossings) {
    for (int v : x) m = std::max(m, v);
  }
  return m;
}

}  // namespace

void validate_pd(const PDCode& pd) {
  if (pd.free_loops < 0) fail(ErrorKind::InvalidArgument, "negative free loop count");
  std::map<int, int> uses;
  for (const auto& x : pd.crossings) {
    for (int v : x) {
      if (v < 1) fail(ErrorKind::LabelArityError, "arc labels must be positive");
      uses[v]++;
    }
  }
  const int n = static_cast<int>(pd.crossings.size());
  if (!pd.crossings.empty()) {
    for (int label = 1; label <= 2 * n; ++label) {
      auto it = uses.find(label);
      if (it == uses.end() || it->second != 2) {
        fail(ErrorKind::LabelArityError,
             "arc label " + std::to_string(label) + " must be used exactly twice");
      }
    }
    if (max_label(pd) != 2 * n) fail(ErrorKind::LabelArityError, "arc labels must be 1..2n");
  }
  resolve_orientations(pd);  // throws OrientationError when inconsistent
}

void validate_braid(const BraidWord& word) {
  if (word.strands < 1) fail(ErrorKind::InvalidArgument, "braid needs >= 1 strand");
  for (int letter : word.letters) {
    if (letter == 0 || std::abs(letter) >= word.strands) {
      fail(ErrorKind::InvalidArgument, "braid letter out of range");
    }
  }
}

void validate_pretzel(const PretzelSpec& spec) {
  if (spec.twists.empty()) fail(ErrorKind::InvalidArgument, "pretzel needs >= 1 twist region");
  for (int k : spec.twists) {
    if (k == 0) fail(ErrorKind::InvalidArgument, "pretzel twists must be nonzero");
  }
}

PDCode parse_pd(const std::string& text) {
  PDCode pd;
  size_t i = 0;
  auto skip_ws = [&] {
    while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
  };
  auto skip_separators = [&] {
    while (i < text.size() && (std::isspace(static_cast<unsigned char>(text[i])) || text[i] == ',')) ++i;
  };
  auto syntax = [&](const std::string& what) {
    fail(ErrorKind::SyntaxError, what + " at position " + std::to_string(i));
  };
  skip_separators();
  while (i < text.size()) {
    if (text[i] == 'U' || text[i] == 'u') {
      ++i;
      pd.free_loops += 1;
      skip_separators();
      continue;
    }
    if (text[i] != 'X' && text[i] != 'x') syntax("expected 'X'");
    ++i;
    skip_ws();
    if (i >= text.size() || text[i] != '(') syntax("expected '('");
    ++i;
    std::array<int, 4> quad{};
    for (int slot = 0; slot < 4; ++slot) {
      skip_ws();
      size_t start = i;
      while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) ++i;
      if (i == start) syntax("expected arc label");
      quad[slot] = std::stoi(text.substr(start, i - start));
      skip_ws();
      if (slot < 3) {
        if (i >= text.size() || text[i] != ',') syntax("expected ','");
        ++i;
      }
    }
    if (i >= text.size() || text[i] != ')') syntax("expected ')' (crossings take four labels)");
    ++i;
    pd.crossings.push_back(quad);
    skip_separators();
  }
  validate_pd(pd);
  return pd;
}

std::string emit_pd(const PDCode& pd) {
  std::ostringstream os;
  bool first = true;
  for (const auto& x : pd.crossings) {
    if (!first) os << " ";
    first = false;
    os << "X(" << x[0] << "," << x[1] << "," << x[2] << "," << x[3] << ")";
  }
  for (int i = 0; i < pd.free_loops; ++i) {
    if (!first) os << " ";
    first = false;
    os << "U";
  }
  return os.str();
}

BraidWord parse_braid(const std::string& text) {
  std::istringstream is(text);
  std::string head;
  if (!(is >> head) || head.rfind("strands=", 0) != 0) {
    fail(ErrorKind::SyntaxError, "braid text needs a leading strands=N header");
  }
  BraidWord word;
  try {
    word.strands = std::stoi(head.substr(8));
  } catch (const std::exception&) {
    fail(ErrorKind::SyntaxError, "bad strand count");
  }
  int letter = 0;
  while (is >> letter) word.letters.push_back(letter);
  if (!is.eof()) fail(ErrorKind::SyntaxError, "bad braid letter");
  validate_braid(word);
  return word;
}

std::string emit_braid(const BraidWord& word) {
  std::ostringstream os;
  os << "strands=" << word.strands;
  for (int letter : word.letters) os << " " << letter;
  return os.str();
}

std::vector<bool> resolve_orientations(const PDCode& pd) {
  const int n = static_cast<int>(pd.crossings.size());
  // Arc roles: slot a is always an arc head (incoming), slot c a tail.  For
  // the over-strand the variable x_i = "slot b is incoming" must give every
  // arc exactly one head and one tail.  Propagate with union-find parity.
  std::map<int, std::vector<std::pair<int, int>>> arc_slots;  // label -> (crossing, slot)
  for (int i = 0; i < n; ++i) {
    for (int s = 0; s < 4; ++s) arc_slots[pd.crossings[i][s]].push_back({i, s});
  }
  // parity[i]: 0 = b incoming, 1 = d incoming; -1 undetermined.
  std::vector<int> parity(n, -1);
  // Constraints between crossings sharing an over-arc; fixed roles at a/c
  // slots pin variables directly.
  struct Link {
    int other;
    int relation;  // 0 same, 1 different
  };
  std::vector<std::vector<Link>> adj(n);
  std::vector<std::pair<int, int>> pinned;  // (crossing, value)
  for (const auto& [label, slots] : arc_slots) {
    (void)label;
    if (slots.size() != 2) fail(ErrorKind::LabelArityError, "arc label not used exactly twice");
    const auto [c1, s1] = slots[0];
    const auto [c2, s2] = slots[1];
    auto fixed_role = [](int s) { return s == 0 ? +1 : (s == 2 ? -1 : 0); };  // +1 head, -1 tail
    const int r1 = fixed_role(s1);
    const int r2 = fixed_role(s2);
    auto over_head_value = [](int s) { return s == 1 ? 0 : 1; };  // value making this slot a head
    if (r1 != 0 && r2 != 0) {
      if (r1 + r2 != 0) fail(ErrorKind::OrientationError, "arc with two heads or two tails");
    } else if (r1 != 0) {
      // Slot 2 is over: its role must be the opposite of r1.
      const int want_head = (r1 == -1) ? 1 : 0;
      const int value = want_head ? over_head_value(s2) : 1 - over_head_value(s2);
      pinned.push_back({c2, value});
    } else if (r2 != 0) {
      const int want_head = (r2 == -1) ? 1 : 0;
      const int value = want_head ? over_head_value(s1) : 1 - over_head_value(s1);
      pinned.push_back({c1, value});
    } else {
      // Both over: one head one tail.
      const int rel = (over_head_value(s1) == over_head_value(s2)) ? 1 : 0;
      adj[c1].push_back({c2, rel});
      adj[c2].push_back({c1, rel});
    }
  }
  for (const auto& [c, v] : pinned) {
    if (parity[c] == -1) {
      parity[c] = v;
    } else if (parity[c] != v) {
      fail(ErrorKind::OrientationError, "inconsistent strand orientation");
    }
  }
  // Propagate from pinned crossings first, then seed leftover components
  // with the canonical choice.
  auto propagate = [&](int start) {
    std::vector<int> stack{start};
    while (!stack.empty()) {
      const int at = stack.back();
      stack.pop_back();
      for (const Link& l : adj[at]) {
        const int want = parity[at] ^ l.relation;
        if (parity[l.other] == -1) {
          parity[l.other] = want;
          stack.push_back(l.other);
        } else if (parity[l.other] != want) {
          fail(ErrorKind::OrientationError, "inconsistent strand orientation");
        }
      }
    }
  };
  for (int start = 0; start < n; ++start) {
    if (parity[start] != -1) propagate(start);
  }
  for (int start = 0; start < n; ++start) {
    if (parity[start] == -1) {
      parity[start] = 0;
      propagate(start);
    }
  }
  std::vector<bool> out(n);
  for (int i = 0; i < n; ++i) out[i] = (parity[i] == 0);
  return out;
}

int link_component_count(const PDCode& pd) {
  validate_pd(pd);
  if (pd.crossings.empty()) return pd.free_loops > 0 ? pd.free_loops : 1;
  const int m = max_label(pd);
  std::vector<int> parent(m + 1);
  for (int i = 0; i <= m; ++i) parent[i] = i;
  std::function<int(int)> find = [&](int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (const auto& x : pd.crossings) {
    parent[find(x[0])] = find(x[2]);
    parent[find(x[1])] = find(x[3]);
  }
  std::set<int> roots;
  for (int label = 1; label <= m; ++label) roots.insert(find(label));
  return static_cast<int>(roots.size()) + pd.free_loops;
}

SeifertCircles seifert_circles(const PDCode& pd) {
  validate_pd(pd);
  SeifertCircles out;
  const int n = static_cast<int>(pd.crossings.size());
  if (n == 0) {
    out.count = pd.free_loops > 0 ? pd.free_loops : 1;
    out.visits.resize(out.count);
    return out;
  }
  const auto b_in = resolve_orientations(pd);
  // Successor map along smoothed circles: incoming under joins outgoing
  // over, incoming over joins outgoing under.
  const int m = max_label(pd);
  std::vector<int> next(m + 1, 0);
  std::vector<std::pair<int, bool>> visit_after(m + 1);  // crossing between arc and next
  for (int i = 0; i < n; ++i) {
    const auto& x = pd.crossings[i];
    const int over_in = b_in[i] ? x[1] : x[3];
    const int over_out = b_in[i] ? x[3] : x[1];
    next[x[0]] = over_out;
    visit_after[x[0]] = {i, true};
    next[over_in] = x[2];
    visit_after[over_in] = {i, false};
  }
  out.circle_of_arc.assign(m + 1, -1);
  for (int start = 1; start <= m; ++start) {
    if (out.circle_of_arc[start] != -1) continue;
    const int circle = out.count++;
    out.visits.push_back({});
    int arc = start;
    while (out.circle_of_arc[arc] == -1) {
      out.circle_of_arc[arc] = circle;
      out.visits[circle].push_back(visit_after[arc]);
      arc = next[arc];
    }
  }
  for (int i = 0; i < pd.free_loops; ++i) {
    out.count++;
    out.visits.push_back({});
  }
  return out;
}

PDCode braid_to_pd(const BraidWord& word) {
  validate_braid(word);
  const int n = word.strands;
  PDCode pd;
  if (word.letters.empty()) {
    pd.free_loops = n;
    return pd;
  }
  // Arc per strand position, sequential labels; closure merges final arcs
  // with initial ones.
  int next_label = 1;
  std::vector<int> arc(n + 1);
  std::vector<int> initial(n + 1);
  for (int j = 1; j <= n; ++j) {
    arc[j] = next_label++;
    initial[j] = arc[j];
  }
  std::vector<std::array<int, 4>> crossings;
  for (int letter : word.letters) {
    const int g = std::abs(letter);
    const int u = arc[g];
    const int v = arc[g + 1];
    const int w1 = next_label++;
    const int w2 = next_label++;
    if (letter > 0) {
      // over: strand g (SW -> NE); under in at SE.
      crossings.push_back({v, w2, w1, u});
    } else {
      // over: strand g+1 (SE -> NW); under in at SW.
      crossings.push_back({u, v, w2, w1});
    }
    arc[g] = w1;
    arc[g + 1] = w2;
  }
  // Closure: identify the final arc at each position with the initial one.
  std::map<int, int> rename;
  for (int j = 1; j <= n; ++j) {
    if (arc[j] != initial[j]) rename[arc[j]] = initial[j];
  }
  for (auto& x : crossings) {
    for (int& v : x) {
      auto it = rename.find(v);
      if (it != rename.end()) v = it->second;
    }
  }
  // Strands never crossed keep arc[j] == initial[j]: closed trivial loops.
  int loops = 0;
  std::set<int> used;
  for (const auto& x : crossings) {
    for (int v : x) used.insert(v);
  }
  for (int j = 1; j <= n; ++j) {
    if (!used.count(initial[j])) ++loops;
  }
  // Compact labels to 1..2c.
  std::map<int, int> compact;
  for (const auto& x : crossings) {
    for (int v : x) compact.emplace(v, 0);
  }
  int fresh = 1;
  for (auto& [old_label, new_label] : compact) new_label = fresh++;
  for (auto& x : crossings) {
    for (int& v : x) v = compact.at(v);
  }
  pd.crossings = std::move(crossings);
  pd.free_loops = loops;
  validate_pd(pd);
  return pd;
}

PDCode pretzel_diagram(const PretzelSpec& spec) {
  validate_pretzel(spec);
  // The standard two-disk surface is a Seifert surface iff an orientation
  // makes the two strands of every region anti-parallel, which holds exactly
  // when all twist parities agree.
  const int parity = ((std::abs(spec.twists[0]) % 2) + 2) % 2;
  for (int k : spec.twists) {
    if (std::abs(k) % 2 != parity) {
      fail(ErrorKind::UnorientableSpec,
           "mixed twist parities: the standard pretzel surface is not a Seifert surface");
    }
  }
  // Build the diagram region by region: region i has |k_i| crossings between
  // two anti-parallel strands (left flows down at the top, right up); tops
  // chain to the next region cyclically, bottoms likewise (the necklace
  // closure whose boundary bounds the two-disk surface).
  PDCode pd;
  int next_label = 1;
  const int n = static_cast<int>(spec.twists.size());
  std::vector<int> top_left(n), top_right(n), bottom_left(n), bottom_right(n);
  for (int i = 0; i < n; ++i) {
    const int k = std::abs(spec.twists[i]);
    const bool positive = spec.twists[i] > 0;
    int left = next_label++;
    int right = next_label++;
    top_left[i] = left;
    top_right[i] = right;
    for (int t = 0; t < k; ++t) {
      const int nl = next_label++;
      const int nr = next_label++;
      // Ends counterclockwise: UL, LL, LR, UR -> arcs left, nl, nr, right.
      const std::array<int, 4> ccw = {left, nl, nr, right};
      const bool left_down = (t % 2 == 0);
      int a_end;  // index into ccw of the incoming under-strand
      if (positive) {
        // Under-strand from upper-right to lower-left; flow = right strand.
        const bool down = !left_down;
        a_end = down ? 3 : 1;  // UR when flowing down, LL when flowing up
      } else {
        // Under-strand from upper-left to lower-right; flow = left strand.
        a_end = left_down ? 0 : 2;
      }
      pd.crossings.push_back(
          {ccw[a_end], ccw[(a_end + 1) % 4], ccw[(a_end + 2) % 4], ccw[(a_end + 3) % 4]});
      left = nl;
      right = nr;
    }
    bottom_left[i] = left;
    bottom_right[i] = right;
  }
  // Merge: region i's right chain joins region i+1's left chain at top and
  // bottom; the last joins back to the first.
  std::map<int, int> rename;
  auto canon = [&rename](int label) {
    while (rename.count(label)) label = rename.at(label);
    return label;
  };
  for (int i = 0; i < n; ++i) {
    const int j = (i + 1) % n;
    rename[canon(top_left[j])] = canon(top_right[i]);
    rename[canon(bottom_left[j])] = canon(bottom_right[i]);
  }
  for (auto& x : pd.crossings) {
    for (int& v : x) v = canon(v);
  }
  std::map<int, int> compact;
  for (const auto& x : pd.crossings) {
    for (int v : x) compact.emplace(v, 0);
  }
  int fresh = 1;
  for (auto& [old_label, new_label] : compact) new_label = fresh++;
  for (auto& x : pd.crossings) {
    for (int& v : x) v = compact.at(v);
  }
  validate_pd(pd);
  return pd;
}

}  // namespace seifalt
