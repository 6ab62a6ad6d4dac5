#include "falcert/nerve.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace falcert {

namespace {

std::pair<int, int> norm_edge(int a, int b) {
  return a < b ? std::make_pair(a, b) : std::make_pair(b, a);
}

std::string edge_str(std::pair<int, int> e) {
  return "(" + std::to_string(e.first) + "," + std::to_string(e.second) + ")";
}

std::string face_str(const std::array<int, 3>& f) {
  return "(" + std::to_string(f[0]) + "," + std::to_string(f[1]) + "," +
         std::to_string(f[2]) + ")";
}

}  // namespace

int NerveGraph::vertex_count() const {
  std::set<int> vs;
  for (const auto& f : faces) vs.insert(f.begin(), f.end());
  return int(vs.size());
}

std::vector<std::pair<int, int>> NerveGraph::edges() const {
  std::set<std::pair<int, int>> es;
  for (const auto& f : faces)
    for (int i = 0; i < 3; ++i) es.insert(norm_edge(f[i], f[(i + 1) % 3]));
  return {es.begin(), es.end()};
}

bool NerveGraph::is_red(std::pair<int, int> e) const {
  auto n = norm_edge(e.first, e.second);
  for (auto r : red_edges)
    if (norm_edge(r.first, r.second) == n) return true;
  return false;
}

std::vector<int> NerveGraph::neighbors(int v) const {
  std::set<int> ns;
  for (const auto& f : faces)
    for (int i = 0; i < 3; ++i) {
      if (f[i] == v) {
        ns.insert(f[(i + 1) % 3]);
        ns.insert(f[(i + 2) % 3]);
      }
    }
  return {ns.begin(), ns.end()};
}

long long NerveGraph::degree(int v) const { return (long long)neighbors(v).size(); }

bool NerveGraph::is_face_triple(int a, int b, int c) const {
  std::array<int, 3> want{a, b, c};
  std::sort(want.begin(), want.end());
  for (auto f : faces) {
    std::array<int, 3> s = f;
    std::sort(s.begin(), s.end());
    if (s == want) return true;
  }
  return false;
}

ValidationReport validate_nerve(const NerveGraph& g) {
  ValidationReport rep;
  auto fail = [&](std::string check, std::string witness) {
    rep.valid = false;
    rep.issues.push_back({std::move(check), std::move(witness)});
  };

  if (g.faces.empty()) {
    fail("nonempty", "no faces");
    return rep;
  }

  for (const auto& f : g.faces)
    if (f[0] == f[1] || f[1] == f[2] || f[0] == f[2])
      fail("no-loops", "degenerate face " + face_str(f));

  // Oriented closed surface: each directed edge appears exactly once.
  std::map<std::pair<int, int>, int> directed;
  for (const auto& f : g.faces)
    for (int i = 0; i < 3; ++i) directed[{f[i], f[(i + 1) % 3]}]++;
  for (const auto& [e, count] : directed) {
    if (count > 1) fail("directed-edge-once", "directed edge " + edge_str(e));
    if (!directed.count({e.second, e.first}))
      fail("edge-in-two-faces", "unpaired directed edge " + edge_str(e));
  }

  // No two faces on the same vertex set.
  {
    std::set<std::array<int, 3>> seen;
    for (auto f : g.faces) {
      std::array<int, 3> s = f;
      std::sort(s.begin(), s.end());
      if (!seen.insert(s).second) fail("no-repeated-face", face_str(f));
    }
  }

  rep.vertices = g.vertex_count();
  rep.face_count = int(g.faces.size());
  rep.edge_count = int(g.edges().size());

  if (3 * rep.face_count != 2 * rep.edge_count)
    fail("three-F-equals-two-E", "3F=" + std::to_string(3 * rep.face_count) +
                                     " 2E=" + std::to_string(2 * rep.edge_count));
  if (rep.vertices - rep.edge_count + rep.face_count != 2)
    fail("euler-characteristic-2",
         "V-E+F=" + std::to_string(rep.vertices - rep.edge_count + rep.face_count));

  // Connectivity over faces sharing edges.
  {
    std::map<std::pair<int, int>, std::vector<int>> edge_faces;
    for (int i = 0; i < int(g.faces.size()); ++i)
      for (int k = 0; k < 3; ++k)
        edge_faces[norm_edge(g.faces[i][k], g.faces[i][(k + 1) % 3])].push_back(i);
    std::vector<int> stack{0};
    std::set<int> seen{0};
    while (!stack.empty()) {
      int f = stack.back();
      stack.pop_back();
      for (int k = 0; k < 3; ++k)
        for (int nb : edge_faces[norm_edge(g.faces[f][k], g.faces[f][(k + 1) % 3])])
          if (seen.insert(nb).second) stack.push_back(nb);
    }
    if (int(seen.size()) != rep.face_count)
      fail("connected", std::to_string(seen.size()) + " of " +
                            std::to_string(rep.face_count) + " faces reachable");
  }

  // Coloring: red edges exist in the graph and are distinct.
  auto all_edges = g.edges();
  std::set<std::pair<int, int>> edge_set(all_edges.begin(), all_edges.end());
  std::set<std::pair<int, int>> red_set;
  for (auto r : g.red_edges) {
    auto n = norm_edge(r.first, r.second);
    if (!edge_set.count(n)) fail("red-edges-in-graph", edge_str(n));
    if (!red_set.insert(n).second) fail("red-edges-distinct", edge_str(n));
  }

  // Every face carries exactly one red edge.
  for (const auto& f : g.faces) {
    int reds = 0;
    for (int i = 0; i < 3; ++i)
      if (red_set.count(norm_edge(f[i], f[(i + 1) % 3]))) ++reds;
    if (reds != 1)
      fail("one-red-edge-per-face",
           face_str(f) + " has " + std::to_string(reds) + " red edges");
  }

  // Red edges pair up the faces: #red = F/2.
  if (2 * int(red_set.size()) != rep.face_count)
    fail("red-count-is-half-faces", std::to_string(red_set.size()) + " red, " +
                                        std::to_string(rep.face_count) + " faces");

  return rep;
}

std::vector<std::array<int, 3>> generalized_crossing_disk_cycles(
    const NerveGraph& g, std::pair<int, int> red_edge) {
  if (!g.is_red(red_edge)) throw NotRedEdge();
  int u = red_edge.first, v = red_edge.second;
  std::vector<int> nu = g.neighbors(u);
  std::vector<int> nv = g.neighbors(v);
  std::set<int> nv_set(nv.begin(), nv.end());
  std::vector<std::array<int, 3>> cycles;
  for (int x : nu) {
    if (x == u || x == v || !nv_set.count(x)) continue;
    if (!g.is_face_triple(u, v, x)) cycles.push_back({u, v, x});
  }
  return cycles;
}

std::pair<int, int> unique_crossing_disk_circle(const NerveGraph& g) {
  for (auto r : g.red_edges)
    if (generalized_crossing_disk_cycles(g, r).empty()) return r;
  throw NoneFound(
      "every red edge lies in a non-trivial 3-cycle; input violates the "
      "nerve axioms");
}

int low_degree_vertex(const NerveGraph& g) {
  std::set<int> vs;
  for (const auto& f : g.faces) vs.insert(f.begin(), f.end());
  for (int v : vs)
    if (g.degree(v) <= 5) return v;
  throw InternalError(
      "no vertex of degree <= 5; impossible for a sphere triangulation");
}

}  // namespace falcert
