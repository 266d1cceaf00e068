#include "qplink/diagram.hpp"

#include <algorithm>
#include <cstdint>
#include <deque>
#include <map>
#include <numeric>

namespace qplink {

namespace {

struct Occurrence {
  int edge = -1;  // compressed edge id
  int end = -1;   // 0 or 1: which endpoint of that edge
};

struct DiagramGraph {
  int ncross = 0;
  int nedges = 0;
  std::vector<std::array<std::pair<int, int>, 2>> endpoints;  // edge -> two (crossing, slot)
  std::vector<std::array<Occurrence, 4>> occ;                 // crossing/slot -> edge endpoint
  std::vector<int> comp_of_edge;
  int ncomp = 0;
  std::vector<int> head_end;  // edge -> endpoint index where it arrives
};

struct UnionFind {
  std::vector<int> parent;
  explicit UnionFind(int n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
  int find(int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }
  void unite(int a, int b) { parent[find(a)] = find(b); }
};

DiagramGraph build_graph(const PDDiagram& d) {
  DiagramGraph g;
  g.ncross = static_cast<int>(d.crossings.size());

  std::map<int, int> label_to_edge;
  g.occ.resize(g.ncross);
  for (int c = 0; c < g.ncross; ++c)
    for (int s = 0; s < 4; ++s) {
      const int label = d.crossings[c][s];
      auto it = label_to_edge.find(label);
      int e;
      if (it == label_to_edge.end()) {
        e = g.nedges++;
        label_to_edge.emplace(label, e);
        g.endpoints.push_back({std::pair<int, int>{c, s}, std::pair<int, int>{-1, -1}});
        g.occ[c][s] = {e, 0};
      } else {
        e = it->second;
        if (g.endpoints[e][1].first != -1)
          throw std::invalid_argument("PD: edge label appears more than twice");
        g.endpoints[e][1] = {c, s};
        g.occ[c][s] = {e, 1};
      }
    }
  for (int e = 0; e < g.nedges; ++e)
    if (g.endpoints[e][1].first == -1)
      throw std::invalid_argument("PD: edge label appears only once");

  // Link components: strand continuation pairs slots 0-2 and 1-3.
  UnionFind uf(g.nedges);
  for (int c = 0; c < g.ncross; ++c) {
    uf.unite(g.occ[c][0].edge, g.occ[c][2].edge);
    uf.unite(g.occ[c][1].edge, g.occ[c][3].edge);
  }
  g.comp_of_edge.assign(g.nedges, -1);
  for (int e = 0; e < g.nedges; ++e) {
    const int r = uf.find(e);
    if (g.comp_of_edge[r] == -1) g.comp_of_edge[r] = g.ncomp++;
    g.comp_of_edge[e] = g.comp_of_edge[r];
  }

  // Base orientation: boolean per edge endpoint, "edge arrives here".
  // The two endpoints of an edge disagree, and the two slots of one
  // strand passing a crossing disagree; any remaining freedom (one bit
  // per component) is fixed by orienting the least unassigned edge.
  std::vector<std::array<int, 2>> arrives(g.nedges, {-1, -1});
  std::deque<std::pair<int, int>> queue;
  auto set_var = [&](int e, int end, int value) {
    if (arrives[e][end] == value) return;
    if (arrives[e][end] != -1) throw std::invalid_argument("PD: inconsistent orientations");
    arrives[e][end] = value;
    queue.emplace_back(e, end);
  };
  auto propagate = [&]() {
    while (!queue.empty()) {
      auto [e, end] = queue.front();
      queue.pop_front();
      const int v = arrives[e][end];
      set_var(e, 1 - end, 1 - v);
      const auto [c, s] = g.endpoints[e][end];
      const auto& other = g.occ[c][(s + 2) % 4];
      set_var(other.edge, other.end, 1 - v);
    }
  };
  for (int e = 0; e < g.nedges; ++e)
    if (arrives[e][0] == -1) {
      set_var(e, 0, 1);
      propagate();
    }

  g.head_end.resize(g.nedges);
  for (int e = 0; e < g.nedges; ++e) g.head_end[e] = arrives[e][0] == 1 ? 0 : 1;
  return g;
}

// Incoming slots of the two strands at crossing c under the flip choice.
struct CrossingFlow {
  int under_in = 0;  // 0 or 2
  int over_in = 1;   // 1 or 3
};

CrossingFlow flow_at(const DiagramGraph& g, const std::vector<int>& flip, int c) {
  auto arrives_here = [&](int slot) {
    const auto& o = g.occ[c][slot];
    const bool base = g.head_end[o.edge] == o.end;
    return base != (flip[g.comp_of_edge[o.edge]] != 0);
  };
  CrossingFlow f;
  f.under_in = arrives_here(0) ? 0 : 2;
  f.over_in = arrives_here(1) ? 1 : 3;
  return f;
}

int crossing_sign(const CrossingFlow& f) {
  return f.over_in == (f.under_in + 3) % 4 ? +1 : -1;
}

long long det_abs(std::vector<std::vector<long long>> m) {
  const std::size_t n = m.size();
  if (n == 0) return 1;
  std::vector<std::vector<__int128>> a(n, std::vector<__int128>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) a[i][j] = m[i][j];
  __int128 prev = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (a[k][k] == 0) {
      std::size_t p = k + 1;
      while (p < n && a[p][k] == 0) ++p;
      if (p == n) return 0;
      std::swap(a[k], a[p]);
      for (std::size_t j = 0; j < n; ++j) a[k][j] = -a[k][j];
    }
    for (std::size_t i = k + 1; i < n; ++i)
      for (std::size_t j = k + 1; j < n; ++j)
        a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) / prev;
    prev = a[k][k];
  }
  __int128 det = a[n - 1][n - 1];
  if (det < 0) det = -det;
  return static_cast<long long>(det);
}

}  // namespace

int diagram_components(const PDDiagram& d) {
  if (d.crossings.empty()) return 1;
  return build_graph(d).ncomp;
}

SeifertData2D seifert_algorithm(const PDDiagram& d, const OrientationAssignment& o) {
  SeifertData2D out;
  if (d.crossings.empty()) {
    out.seifert_circles = 1;
    out.euler = 1;
    out.positive = true;
    return out;
  }
  const auto g = build_graph(d);
  if (static_cast<int>(o.flip.size()) != g.ncomp)
    throw std::invalid_argument("orientation: wrong component count");

  out.crossings = g.ncross;
  out.positive = true;
  UnionFind circles(g.nedges);
  for (int c = 0; c < g.ncross; ++c) {
    const auto f = flow_at(g, o.flip, c);
    if (crossing_sign(f) < 0) out.positive = false;
    // Oriented smoothing: each incoming strand exits through the other
    // strand's outgoing slot.
    circles.unite(g.occ[c][f.under_in].edge, g.occ[c][(f.over_in + 2) % 4].edge);
    circles.unite(g.occ[c][f.over_in].edge, g.occ[c][(f.under_in + 2) % 4].edge);
  }
  std::vector<int> roots;
  for (int e = 0; e < g.nedges; ++e) roots.push_back(circles.find(e));
  std::sort(roots.begin(), roots.end());
  out.seifert_circles =
      static_cast<int>(std::unique(roots.begin(), roots.end()) - roots.begin());
  out.euler = out.seifert_circles - out.crossings;
  return out;
}

std::optional<OrientationAssignment> find_positive_orientation(const PDDiagram& d) {
  if (d.crossings.empty()) return OrientationAssignment{{0}};
  const auto g = build_graph(d);
  if (g.ncomp > 20)
    throw std::invalid_argument("orientation search: more than 20 components");
  const int k = g.ncomp;
  for (std::uint32_t mask = 0; mask < (1u << (k - 1)); ++mask) {
    OrientationAssignment o;
    o.flip.assign(k, 0);
    for (int j = 1; j < k; ++j) o.flip[j] = (mask >> (k - 1 - j)) & 1u;
    bool all_positive = true;
    for (int c = 0; c < g.ncross && all_positive; ++c)
      all_positive = crossing_sign(flow_at(g, o.flip, c)) > 0;
    if (all_positive) return o;
  }
  return std::nullopt;
}

long long link_determinant(const PDDiagram& d) {
  if (d.crossings.empty()) return 1;
  const auto g = build_graph(d);

  {  // the diagram (not just each component) must be connected
    UnionFind uf(g.ncross);
    for (int e = 0; e < g.nedges; ++e)
      uf.unite(g.endpoints[e][0].first, g.endpoints[e][1].first);
    for (int c = 1; c < g.ncross; ++c)
      if (uf.find(c) != uf.find(0))
        throw std::invalid_argument("determinant: disconnected diagram");
  }

  // Faces of the rotation system: leave through an edge, turn to the next
  // slot counterclockwise.
  const int ndarts = 4 * g.ncross;
  auto next_dart = [&](int dart) {
    const int c = dart / 4, s = dart % 4;
    const auto& o = g.occ[c][s];
    const auto [c2, s2] = g.endpoints[o.edge][1 - o.end];
    return 4 * c2 + (s2 + 1) % 4;
  };
  std::vector<int> face_of(ndarts, -1);
  int nfaces = 0;
  for (int start = 0; start < ndarts; ++start) {
    if (face_of[start] != -1) continue;
    int dart = start;
    while (face_of[dart] == -1) {
      face_of[dart] = nfaces;
      dart = next_dart(dart);
    }
    ++nfaces;
  }

  // Checkerboard coloring: the two sides of each edge get opposite colors.
  std::vector<int> color(nfaces, -1);
  std::deque<int> queue;
  color[0] = 0;
  queue.push_back(0);
  std::vector<std::vector<int>> adjacency(nfaces);
  for (int e = 0; e < g.nedges; ++e) {
    const int f1 = face_of[4 * g.endpoints[e][0].first + g.endpoints[e][0].second];
    const int f2 = face_of[4 * g.endpoints[e][1].first + g.endpoints[e][1].second];
    adjacency[f1].push_back(f2);
    adjacency[f2].push_back(f1);
  }
  while (!queue.empty()) {
    const int f = queue.front();
    queue.pop_front();
    for (int h : adjacency[f]) {
      if (color[h] == -1) {
        color[h] = 1 - color[f];
        queue.push_back(h);
      } else if (color[h] == color[f]) {
        throw std::invalid_argument("determinant: diagram is not checkerboard colorable");
      }
    }
  }

  std::vector<int> white_index(nfaces, -1);
  int nwhite = 0;
  for (int f = 0; f < nfaces; ++f)
    if (color[f] == 0) white_index[f] = nwhite++;

  std::vector<std::vector<long long>> goeritz(nwhite, std::vector<long long>(nwhite, 0));
  for (int c = 0; c < g.ncross; ++c) {
    // White corners sit on one diagonal; the diagonal determines the sign.
    const int s = color[face_of[4 * c + 0]] == 0 ? 0 : 1;
    const int eta = s == 0 ? +1 : -1;
    const int fa = white_index[face_of[4 * c + s]];
    const int fb = white_index[face_of[4 * c + s + 2]];
    if (fa != fb) {
      goeritz[fa][fb] -= eta;
      goeritz[fb][fa] -= eta;
    }
  }
  for (int i = 0; i < nwhite; ++i) {
    long long sum = 0;
    for (int j = 0; j < nwhite; ++j)
      if (j != i) sum += goeritz[i][j];
    goeritz[i][i] = -sum;
  }

  // Any principal minor of corank one presents the first homology.
  std::vector<std::vector<long long>> minor(nwhite - 1, std::vector<long long>(nwhite - 1));
  for (int i = 1; i < nwhite; ++i)
    for (int j = 1; j < nwhite; ++j) minor[i - 1][j - 1] = goeritz[i][j];
  return det_abs(std::move(minor));
}

namespace {

// Crossing with arcs a = top-left in, b = top-right in, c = bottom-left
// out, d = bottom-right out; the flag picks which incoming strand dives
// under.  Slots are listed counterclockwise from the incoming under-strand.
std::array<int, 4> twist_crossing(int a, int b, int c, int d, bool under_from_right) {
  if (under_from_right) return {b, a, c, d};
  return {a, c, d, b};
}

struct LabelPool {
  int next = 0;
  std::vector<int> parent;
  int fresh() {
    parent.push_back(next);
    return next++;
  }
  int find(int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }
  void unite(int a, int b) { parent[find(a)] = find(b); }
};

PDDiagram finish(const std::vector<std::array<int, 4>>& raw, LabelPool& pool) {
  PDDiagram out;
  std::map<int, int> compress;
  for (const auto& cr : raw) {
    std::array<int, 4> tuple{};
    for (int s = 0; s < 4; ++s) {
      const int rep = pool.find(cr[s]);
      auto it = compress.find(rep);
      if (it == compress.end())
        it = compress.emplace(rep, static_cast<int>(compress.size()) + 1).first;
      tuple[s] = it->second;
    }
    out.crossings.push_back(tuple);
  }
  return out;
}

}  // namespace

PDDiagram pretzel_diagram(const std::vector<int>& t) {
  if (t.size() < 3) throw std::invalid_argument("pretzel diagram: need at least 3 bands");
  for (int ti : t)
    if (ti == 0) throw std::invalid_argument("pretzel diagram: zero band");

  LabelPool pool;
  std::vector<std::array<int, 4>> raw;
  const int p = static_cast<int>(t.size());
  std::vector<std::vector<int>> left(p), right(p);
  for (int i = 0; i < p; ++i) {
    const int m = std::abs(t[i]);
    for (int j = 0; j <= m; ++j) {
      left[i].push_back(pool.fresh());
      right[i].push_back(pool.fresh());
    }
    for (int j = 1; j <= m; ++j)
      raw.push_back(twist_crossing(left[i][j - 1], right[i][j - 1], left[i][j], right[i][j],
                                   t[i] < 0));
  }
  for (int i = 0; i + 1 < p; ++i) {
    pool.unite(right[i].front(), left[i + 1].front());
    pool.unite(right[i].back(), left[i + 1].back());
  }
  pool.unite(right[p - 1].front(), left[0].front());
  pool.unite(right[p - 1].back(), left[0].back());
  return finish(raw, pool);
}

PDDiagram four_plat_diagram(const std::vector<int>& r) {
  if (r.empty()) throw std::invalid_argument("4-plat: empty tuple");
  for (int ri : r)
    if (ri == 0) throw std::invalid_argument("4-plat: zero entry");

  LabelPool pool;
  std::vector<std::array<int, 4>> raw;
  std::array<int, 4> cur{};
  for (auto& e : cur) e = pool.fresh();
  const std::array<int, 4> top = cur;
  for (std::size_t m = 0; m < r.size(); ++m) {
    const int k = m % 2 == 0 ? 1 : 2;  // sigma_2 then sigma_3, alternating
    for (int j = 0; j < std::abs(r[m]); ++j) {
      const int a = cur[k], b = cur[k + 1];
      const int c = pool.fresh(), d = pool.fresh();
      raw.push_back(twist_crossing(a, b, c, d, r[m] < 0));
      cur[k] = c;
      cur[k + 1] = d;
    }
  }
  pool.unite(top[0], top[1]);
  pool.unite(top[2], top[3]);
  if (r.size() % 2 == 1) {  // word ends on the middle pair
    pool.unite(cur[0], cur[1]);
    pool.unite(cur[2], cur[3]);
  } else {  // word ends on the right pair; the closure wraps around
    pool.unite(cur[0], cur[3]);
    pool.unite(cur[1], cur[2]);
  }
  return finish(raw, pool);
}

}  // namespace qplink
