#include "melon/melonic.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <stdexcept>
#include <string>

#include "melon/families.hpp"

namespace melon::melonic {
namespace {

std::size_t idx(int one_based) { return static_cast<std::size_t>(one_based - 1); }

// Size of banana k of stage p, where stage 0 is the initial single edge.
int banana_size(const MelonicConstruction& c, int p, int k) {
  return p == 0 ? 1 : c.stage(p).banana_sizes[idx(k)];
}

void require_valid(const MelonicConstruction& c) {
  const auto violations = validate(c);
  if (!violations.empty()) {
    throw std::invalid_argument("invalid melonic construction: stage " +
                                std::to_string(violations.front().stage) + ": " +
                                violations.front().message);
  }
}

// Removes stage s and renumbers parent references to later stages.
void erase_stage(MelonicConstruction& c, int s) {
  c.stages.erase(c.stages.begin() + static_cast<std::ptrdiff_t>(s - 1));
  for (auto& st : c.stages) {
    if (st.parent_stage > s) --st.parent_stage;
  }
}

// Replaces the 1-banana targeted by stage s with the whole tuple of stage s.
void splice_into_parent(MelonicConstruction& c, int s) {
  const Stage spliced = c.stage(s);
  const int p = spliced.parent_stage;
  const int k = spliced.parent_banana;
  const int r = static_cast<int>(spliced.banana_sizes.size());

  auto& parent_sizes = c.stage(p).banana_sizes;
  parent_sizes.erase(parent_sizes.begin() + static_cast<std::ptrdiff_t>(k - 1));
  parent_sizes.insert(parent_sizes.begin() + static_cast<std::ptrdiff_t>(k - 1),
                      spliced.banana_sizes.begin(), spliced.banana_sizes.end());

  for (int t = 1; t <= c.depth(); ++t) {
    if (t == s) continue;
    Stage& st = c.stage(t);
    if (st.parent_stage == s) {
      st.parent_stage = p;
      st.parent_banana = k - 1 + st.parent_banana;
    } else if (st.parent_stage == p && st.parent_banana > k) {
      st.parent_banana += r - 1;
    }
  }
  erase_stage(c, s);
}

struct Tree {
  std::vector<std::vector<std::vector<int>>> children;  // [stage][banana] -> child stages
  std::vector<std::string> keys;                        // [stage], 1-based (slot 0 unused)
};

Tree build_tree(const MelonicConstruction& c) {
  Tree t;
  const int n = c.depth();
  t.children.resize(static_cast<std::size_t>(n) + 1);
  for (int s = 1; s <= n; ++s) t.children[static_cast<std::size_t>(s)].resize(c.stage(s).banana_sizes.size());
  for (int s = 2; s <= n; ++s) {
    const Stage& st = c.stage(s);
    t.children[static_cast<std::size_t>(st.parent_stage)][idx(st.parent_banana)].push_back(s);
  }
  t.keys.resize(static_cast<std::size_t>(n) + 1);
  for (int s = n; s >= 1; --s) {
    const Stage& st = c.stage(s);
    std::string key = "(";
    for (std::size_t i = 0; i < st.banana_sizes.size(); ++i) {
      if (i) key += ',';
      key += std::to_string(st.banana_sizes[i]);
    }
    key += ')';
    auto& per_banana = t.children[static_cast<std::size_t>(s)];
    for (std::size_t k = 0; k < per_banana.size(); ++k) {
      auto& kids = per_banana[k];
      if (kids.empty()) continue;
      std::sort(kids.begin(), kids.end(), [&](int a, int b) {
        const auto& ka = t.keys[static_cast<std::size_t>(a)];
        const auto& kb = t.keys[static_cast<std::size_t>(b)];
        return ka != kb ? ka < kb : a < b;
      });
      key += std::to_string(k + 1) + '{';
      for (int child : kids) key += t.keys[static_cast<std::size_t>(child)];
      key += '}';
    }
    t.keys[static_cast<std::size_t>(s)] = std::move(key);
  }
  return t;
}

const IntPoly kSPlusTwo{2, 1};

}  // namespace

int MelonicConstruction::edge_count() const {
  int edges = 1;
  for (const auto& st : stages) {
    edges += std::accumulate(st.banana_sizes.begin(), st.banana_sizes.end(), 0) - 1;
  }
  return edges;
}

MelonicConstruction banana(int n) { return {{Stage{{n}, 0, 1}}}; }

MelonicConstruction banana_string(std::vector<int> sizes) { return {{Stage{std::move(sizes), 0, 1}}}; }

MelonicConstruction necklace(int m, int n) {
  return {{Stage{{m + 1}, 0, 1}, Stage{std::vector<int>(static_cast<std::size_t>(n - 1), m), 1, 1}}};
}

MelonicConstruction clasped_necklace(int m, int n) {
  return {{Stage{{2}, 0, 1}, Stage{std::vector<int>(static_cast<std::size_t>(n - 1), m), 1, 1}}};
}

std::vector<Violation> validate(const MelonicConstruction& c) {
  std::vector<Violation> out;
  if (c.stages.empty()) {
    out.push_back({1, 0, "construction has no stages"});
    return out;
  }
  std::map<std::pair<int, int>, int> targets;
  for (int s = 1; s <= c.depth(); ++s) {
    const Stage& st = c.stage(s);
    if (st.banana_sizes.empty()) {
      out.push_back({1, s, "banana tuple is empty"});
    } else if (std::any_of(st.banana_sizes.begin(), st.banana_sizes.end(), [](int a) { return a < 1; })) {
      out.push_back({1, s, "banana sizes must be positive"});
    }

    const bool parent_ok = s == 1 ? st.parent_stage == 0 : (st.parent_stage > 0 && st.parent_stage < s);
    if (!parent_ok) {
      out.push_back({2, s, s == 1 ? "first stage must have parent stage 0"
                                  : "parent stage must lie strictly between 0 and the stage index"});
      continue;
    }

    const int p = st.parent_stage;
    const int width = p == 0 ? 1 : static_cast<int>(c.stage(p).banana_sizes.size());
    if (st.parent_banana < 1 || st.parent_banana > width) {
      out.push_back({3, s, "parent banana " + std::to_string(st.parent_banana) + " out of range 1.." +
                               std::to_string(width)});
      continue;
    }

    const int used = ++targets[{p, st.parent_banana}];
    const int size = p == 0 ? 1 : c.stage(p).banana_sizes[idx(st.parent_banana)];
    if (size >= 1 && used > size) {
      out.push_back({4, s, "banana " + std::to_string(st.parent_banana) + " of stage " + std::to_string(p) +
                               " has " + std::to_string(size) + " edges but is replaced " +
                               std::to_string(used) + " times"});
    }
  }
  return out;
}

bool is_reduced(const MelonicConstruction& c) {
  for (const auto& st : c.stages) {
    if (st.parent_stage >= 1 && banana_size(c, st.parent_stage, st.parent_banana) == 1) return false;
  }
  return true;
}

MelonicConstruction normalize(const MelonicConstruction& c) {
  require_valid(c);
  MelonicConstruction out = c;
  for (;;) {
    int target = 0;
    for (int s = 2; s <= out.depth() && target == 0; ++s) {
      const Stage& st = out.stage(s);
      if (banana_size(out, st.parent_stage, st.parent_banana) == 1) target = s;
    }
    if (target == 0) return out;
    splice_into_parent(out, target);
  }
}

MelonicConstruction merge_single_banana_stage(const MelonicConstruction& c, int s) {
  require_valid(c);
  if (s < 2 || s > c.depth() || c.stage(s).banana_sizes.size() != 1) {
    throw std::invalid_argument("merge_single_banana_stage: stage must be a later single-banana stage");
  }
  MelonicConstruction out = c;
  const Stage merged = out.stage(s);
  out.stage(merged.parent_stage).banana_sizes[idx(merged.parent_banana)] += merged.banana_sizes.front() - 1;
  for (auto& st : out.stages) {
    if (st.parent_stage == s) {
      st.parent_stage = merged.parent_stage;
      st.parent_banana = merged.parent_banana;
    }
  }
  erase_stage(out, s);
  return out;
}

std::string canonical_key(const MelonicConstruction& c) {
  if (c.stages.empty()) return "()";
  return build_tree(c).keys[1];
}

MelonicConstruction canonicalize(const MelonicConstruction& c) {
  if (c.stages.empty()) return c;
  const Tree t = build_tree(c);
  MelonicConstruction out;
  out.stages.reserve(c.stages.size());
  std::vector<int> new_index(static_cast<std::size_t>(c.depth()) + 1, 0);

  // Iterative pre-order; children pushed in reverse to pop in sorted order.
  std::vector<int> todo{1};
  while (!todo.empty()) {
    const int s = todo.back();
    todo.pop_back();
    Stage st = c.stage(s);
    if (st.parent_stage > 0) st.parent_stage = new_index[static_cast<std::size_t>(st.parent_stage)];
    out.stages.push_back(std::move(st));
    new_index[static_cast<std::size_t>(s)] = out.depth();
    const auto& per_banana = t.children[static_cast<std::size_t>(s)];
    for (std::size_t k = per_banana.size(); k-- > 0;) {
      for (auto it = per_banana[k].rbegin(); it != per_banana[k].rend(); ++it) todo.push_back(*it);
    }
  }
  return out;
}

std::string to_string(const MelonicConstruction& c) {
  std::string out = "[";
  for (std::size_t i = 0; i < c.stages.size(); ++i) {
    const Stage& st = c.stages[i];
    if (i) out += ", ";
    out += "((";
    for (std::size_t j = 0; j < st.banana_sizes.size(); ++j) {
      if (j) out += ',';
      out += std::to_string(st.banana_sizes[j]);
    }
    out += ")," + std::to_string(st.parent_stage) + "," + std::to_string(st.parent_banana) + ")";
  }
  return out + "]";
}

graph::Multigraph to_graph(const MelonicConstruction& c) {
  require_valid(c);
  struct Banana {
    int u, v;
    std::vector<int> free_edges;  // not yet replaced, creation order
  };
  std::vector<graph::Edge> edges{{0, 1}};
  std::vector<bool> alive{true};
  int num_vertices = 2;
  // bananas[s][k-1]; stage 0 holds the initial edge.
  std::vector<std::vector<Banana>> bananas(static_cast<std::size_t>(c.depth()) + 1);
  bananas[0].push_back({0, 1, {0}});

  for (int s = 1; s <= c.depth(); ++s) {
    const Stage& st = c.stage(s);
    Banana& target = bananas[static_cast<std::size_t>(st.parent_stage)][idx(st.parent_banana)];
    const int replaced = target.free_edges.front();
    target.free_edges.erase(target.free_edges.begin());
    alive[static_cast<std::size_t>(replaced)] = false;
    const auto [u, v] = edges[static_cast<std::size_t>(replaced)];

    int left = u;
    const auto r = st.banana_sizes.size();
    for (std::size_t i = 0; i < r; ++i) {
      const int right = (i + 1 == r) ? v : num_vertices++;
      Banana b{left, right, {}};
      for (int e = 0; e < st.banana_sizes[i]; ++e) {
        b.free_edges.push_back(static_cast<int>(edges.size()));
        edges.push_back({left, right});
        alive.push_back(true);
      }
      bananas[static_cast<std::size_t>(s)].push_back(std::move(b));
      left = right;
    }
  }

  graph::Multigraph g(num_vertices);
  for (std::size_t i = 0; i < edges.size(); ++i) {
    if (alive[i]) g.add_edge(edges[i].u, edges[i].v);
  }
  return g;
}

ClassPoly ClassCalculator::class_of(const MelonicConstruction& c) {
  return {reduced_class(canonicalize(normalize(c))), Basis::S};
}

// Requires a valid, reduced, canonical construction.
IntPoly ClassCalculator::reduced_class(const MelonicConstruction& c) {
  std::string key = canonical_key(c);
  if (auto it = memo_.find(key); it != memo_.end()) return it->second;

  auto recurse = [this](const MelonicConstruction& sub) { return reduced_class(canonicalize(normalize(sub))); };

  const Stage& last = c.stages.back();
  const auto& sizes = last.banana_sizes;
  IntPoly result;

  if (c.depth() == 1) {
    // A string of bananas.
    result = IntPoly{1};
    for (int a : sizes) result *= families::b_poly(a).poly;
  } else if (sizes.size() == 1) {
    // A single a-banana: the parent banana gains a-1 parallel edges.
    result = recurse(merge_single_banana_stage(c, c.depth()));
  } else if (std::all_of(sizes.begin(), sizes.end(), [](int a) { return a == 1; })) {
    // A string of r 1-bananas splits an edge r-1 times.
    MelonicConstruction shorter = c;
    shorter.stages.pop_back();
    result = pow(kSPlusTwo, static_cast<unsigned>(sizes.size() - 1)) * recurse(shorter);
  } else {
    // Deletion-contraction on the largest banana of the last stage.
    const auto largest = *std::max_element(sizes.begin(), sizes.end());
    std::size_t m = 0;
    for (std::size_t i = 0; i < sizes.size(); ++i) {
      if (sizes[i] == largest) {
        m = i;
        if (tie_break_ == TieBreak::LowestIndex) break;
      }
    }

    MelonicConstruction expanded = c;  // T': the chosen banana becomes one edge
    expanded.stages.back().banana_sizes[m] = 1;

    MelonicConstruction contracted = c;  // T'': the chosen banana is contracted away
    auto& csizes = contracted.stages.back().banana_sizes;
    csizes.erase(csizes.begin() + static_cast<std::ptrdiff_t>(m));

    MelonicConstruction deleted = c;  // T''': the replaced edge is deleted
    deleted.stages.pop_back();
    deleted.stage(last.parent_stage).banana_sizes[idx(last.parent_banana)] -= 1;

    IntPoly dangling{1};
    for (std::size_t i = 0; i < sizes.size(); ++i) {
      if (i != m) dangling *= families::b_poly(sizes[i]).poly;
    }

    result = families::f_poly(largest).poly * recurse(expanded) +
             families::g_poly(largest).poly * recurse(contracted) +
             dangling * families::h_poly(largest).poly * recurse(deleted);
  }

  memo_.emplace(std::move(key), result);
  return result;
}

ClassPoly class_of(const MelonicConstruction& c) { return ClassCalculator().class_of(c); }

std::vector<MelonicConstruction> enumerate_constructions(int max_edges, EnumerationOptions options) {
  if (max_edges < 1) throw std::invalid_argument("enumerate_constructions: max_edges must be positive");

  // compositions[t] = ordered tuples of positive integers summing to t.
  std::vector<std::vector<std::vector<int>>> compositions(static_cast<std::size_t>(max_edges) + 1);
  compositions[0].push_back({});
  for (int t = 1; t <= max_edges; ++t) {
    for (int first = 1; first <= t; ++first) {
      for (const auto& rest : compositions[static_cast<std::size_t>(t - first)]) {
        std::vector<int> comp{first};
        comp.insert(comp.end(), rest.begin(), rest.end());
        compositions[static_cast<std::size_t>(t)].push_back(std::move(comp));
      }
    }
  }

  std::map<std::string, MelonicConstruction> found;
  std::vector<MelonicConstruction> frontier;
  auto offer = [&](MelonicConstruction c) {
    std::string key = canonical_key(c);
    if (found.count(key)) return;
    c = canonicalize(c);
    frontier.push_back(c);
    found.emplace(std::move(key), std::move(c));
  };

  for (int t = 1; t <= max_edges; ++t) {
    for (const auto& comp : compositions[static_cast<std::size_t>(t)]) offer(banana_string(comp));
  }

  // Grow by one leaf stage at a time; every construction is reachable by
  // removing its last stage, so this closes over the whole edge bound.
  while (!frontier.empty()) {
    std::vector<MelonicConstruction> current;
    current.swap(frontier);
    for (const auto& c : current) {
      const int edges = c.edge_count();
      std::map<std::pair<int, int>, int> used;
      for (int s = 2; s <= c.depth(); ++s) ++used[{c.stage(s).parent_stage, c.stage(s).parent_banana}];
      for (int p = 1; p <= c.depth(); ++p) {
        const auto& psizes = c.stage(p).banana_sizes;
        for (int k = 1; k <= static_cast<int>(psizes.size()); ++k) {
          const int a = psizes[idx(k)];
          if (options.reduced_only && a == 1) continue;
          if (used[{p, k}] >= a) continue;
          for (int total = 2; edges + total - 1 <= max_edges; ++total) {
            for (const auto& comp : compositions[static_cast<std::size_t>(total)]) {
              MelonicConstruction next = c;
              next.stages.push_back(Stage{comp, p, k});
              offer(std::move(next));
            }
          }
        }
      }
    }
  }

  std::vector<MelonicConstruction> out;
  out.reserve(found.size());
  for (auto& [key, c] : found) out.push_back(std::move(c));
  return out;
}

}  // namespace melon::melonic
