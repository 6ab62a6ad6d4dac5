#ifndef FALCERT_TESTS_NERVE_CORPUS_HPP
#define FALCERT_TESTS_NERVE_CORPUS_HPP

#include <map>
#include <random>
#include <set>

#include "falcert/nerve.hpp"

namespace falcert::testsupport {

// Octahedron on vertices {0:+x, 1:-x, 2:+y, 3:-y, 4:+z, 5:-z} with a
// 4-red-edge coloring giving every face exactly one red edge.
inline NerveGraph octahedral_nerve() {
  NerveGraph g;
  g.faces = {{0, 2, 4}, {2, 1, 4}, {1, 3, 4}, {3, 0, 4},
             {2, 0, 5}, {1, 2, 5}, {3, 1, 5}, {0, 3, 5}};
  g.red_edges = {{0, 2}, {0, 3}, {1, 4}, {1, 5}};
  return g;
}

// Oriented K4 (the smallest sphere triangulation) with the one-red-per-face
// matching coloring {01, 23}.
inline NerveGraph k4_nerve() {
  NerveGraph g;
  g.faces = {{0, 1, 2}, {1, 0, 3}, {2, 3, 0}, {3, 2, 1}};
  g.red_edges = {{0, 1}, {2, 3}};
  return g;
}

// Five-vertex nerve containing the crossing-disk subgraph: red edge (0,1)
// lies in the non-facial 3-cycle (0,1,4), and the quadrilaterals on both
// sides of that cycle are closed up by the red diagonals (2,4) and (3,4).
inline NerveGraph doubled_crossing_disk_nerve() {
  NerveGraph g;
  g.faces = {{0, 1, 2}, {1, 0, 3}, {2, 1, 4}, {0, 2, 4}, {0, 4, 3}, {1, 3, 4}};
  g.red_edges = {{0, 1}, {2, 4}, {3, 4}};
  return g;
}

// Random oriented sphere triangulation grown from K4 by face splits and
// degree-safe edge flips.  No coloring.
inline NerveGraph random_sphere_triangulation(std::mt19937& rng, int max_vertices) {
  NerveGraph g;
  g.faces = {{0, 1, 2}, {1, 0, 3}, {2, 3, 0}, {3, 2, 1}};
  int next_vertex = 4;
  std::uniform_int_distribution<int> op(0, 99);

  auto degree_of = [&](int v) {
    std::set<int> nb;
    for (auto& f : g.faces)
      for (int i = 0; i < 3; ++i)
        if (f[i] == v) {
          nb.insert(f[(i + 1) % 3]);
          nb.insert(f[(i + 2) % 3]);
        }
    return int(nb.size());
  };
  auto adjacent = [&](int a, int b) {
    for (auto& f : g.faces)
      for (int i = 0; i < 3; ++i)
        if ((f[i] == a && f[(i + 1) % 3] == b) ||
            (f[i] == b && f[(i + 1) % 3] == a))
          return true;
    return false;
  };

  int steps = max_vertices * 3;
  for (int s = 0; s < steps; ++s) {
    if (op(rng) < 55 && next_vertex < max_vertices) {
      // 1 -> 3 face split.
      std::uniform_int_distribution<std::size_t> pick(0, g.faces.size() - 1);
      std::size_t idx = pick(rng);
      std::array<int, 3> f = g.faces[idx];
      g.faces.erase(g.faces.begin() + long(idx));
      g.faces.push_back({f[0], f[1], next_vertex});
      g.faces.push_back({f[1], f[2], next_vertex});
      g.faces.push_back({f[2], f[0], next_vertex});
      ++next_vertex;
    } else {
      // Edge flip: pick a face and its first edge, flip if safe.
      std::uniform_int_distribution<std::size_t> pick(0, g.faces.size() - 1);
      auto f1 = g.faces[pick(rng)];
      int a = f1[0], b = f1[1], c = f1[2];
      int f2i = -1, d = -1;
      for (int i = 0; i < int(g.faces.size()); ++i) {
        auto& f = g.faces[i];
        for (int k = 0; k < 3; ++k)
          if (f[k] == b && f[(k + 1) % 3] == a) {
            f2i = i;
            d = f[(k + 2) % 3];
          }
      }
      if (f2i < 0 || d == c) continue;
      if (adjacent(c, d)) continue;
      if (degree_of(a) <= 3 || degree_of(b) <= 3) continue;
      int f1i = -1;
      for (int i = 0; i < int(g.faces.size()); ++i)
        if (g.faces[i] == std::array<int, 3>{a, b, c} ||
            g.faces[i] == std::array<int, 3>{b, c, a} ||
            g.faces[i] == std::array<int, 3>{c, a, b})
          f1i = i;
      if (f1i < 0) continue;
      g.faces[f1i] = {a, d, c};
      g.faces[f2i] = {b, c, d};
    }
  }
  return g;
}

// Random *colored* nerve: grown from the colored K4 by operations that keep
// the one-red-edge-per-face axiom.
//   - Splitting a face with red edge {x,y} and third vertex z into three
//     puts the new red edge at {z, w}: the {x,y}-face keeps its red edge and
//     the other two new faces share {z, w}.
//   - Flipping an edge {a,b} with opposite vertices c, d is allowed when the
//     two incident red edges land in different new faces (or {a,b} itself is
//     red, in which case the new diagonal {c,d} becomes red).
inline NerveGraph random_colored_nerve(std::mt19937& rng, int max_vertices) {
  NerveGraph g = k4_nerve();
  int next_vertex = 4;

  auto norm = [](int a, int b) {
    return a < b ? std::make_pair(a, b) : std::make_pair(b, a);
  };
  std::set<std::pair<int, int>> red(
      {norm(g.red_edges[0].first, g.red_edges[0].second),
       norm(g.red_edges[1].first, g.red_edges[1].second)});

  auto degree_of = [&](int v) {
    std::set<int> nb;
    for (auto& f : g.faces)
      for (int i = 0; i < 3; ++i)
        if (f[i] == v) {
          nb.insert(f[(i + 1) % 3]);
          nb.insert(f[(i + 2) % 3]);
        }
    return int(nb.size());
  };
  auto adjacent = [&](int a, int b) {
    for (auto& f : g.faces)
      for (int i = 0; i < 3; ++i)
        if ((f[i] == a && f[(i + 1) % 3] == b) || (f[i] == b && f[(i + 1) % 3] == a))
          return true;
    return false;
  };

  std::uniform_int_distribution<int> op(0, 99);
  int steps = max_vertices * 3;
  for (int s = 0; s < steps; ++s) {
    std::uniform_int_distribution<std::size_t> pick(0, g.faces.size() - 1);
    if (op(rng) < 55 && next_vertex < max_vertices) {
      std::size_t idx = pick(rng);
      std::array<int, 3> f = g.faces[idx];
      // Rotate so the red edge is (f[0], f[1]).
      int rotations = 0;
      while (!red.count(norm(f[0], f[1]))) {
        std::rotate(f.begin(), f.begin() + 1, f.end());
        if (++rotations > 3) throw InternalError("face without red edge");
      }
      int w = next_vertex++;
      g.faces.erase(g.faces.begin() + long(idx));
      g.faces.push_back({f[0], f[1], w});
      g.faces.push_back({f[1], f[2], w});
      g.faces.push_back({f[2], f[0], w});
      red.insert(norm(f[2], w));
    } else {
      auto f1 = g.faces[pick(rng)];
      int a = f1[0], b = f1[1], c = f1[2];
      int f2i = -1, d = -1;
      for (int i = 0; i < int(g.faces.size()); ++i) {
        auto& f = g.faces[i];
        for (int k = 0; k < 3; ++k)
          if (f[k] == b && f[(k + 1) % 3] == a) {
            f2i = i;
            d = f[(k + 2) % 3];
          }
      }
      if (f2i < 0 || d == c) continue;
      if (adjacent(c, d)) continue;
      if (degree_of(a) <= 3 || degree_of(b) <= 3) continue;

      bool ab_red = red.count(norm(a, b)) > 0;
      bool color_ok;
      if (ab_red) {
        color_ok = true;  // both new faces share the new red diagonal {c,d}
      } else {
        // New faces are (a,d,c) and (b,c,d); each must inherit exactly one
        // red edge from {ca or bc} x {ad or db}.
        bool red_in_adc = red.count(norm(c, a)) + red.count(norm(a, d)) == 1;
        bool red_in_bcd = red.count(norm(b, c)) + red.count(norm(d, b)) == 1;
        color_ok = red_in_adc && red_in_bcd;
      }
      if (!color_ok) continue;

      int f1i = -1;
      for (int i = 0; i < int(g.faces.size()); ++i)
        if (g.faces[i] == std::array<int, 3>{a, b, c} ||
            g.faces[i] == std::array<int, 3>{b, c, a} ||
            g.faces[i] == std::array<int, 3>{c, a, b})
          f1i = i;
      if (f1i < 0) continue;
      g.faces[f1i] = {a, d, c};
      g.faces[f2i] = {b, c, d};
      if (ab_red) {
        red.erase(norm(a, b));
        red.insert(norm(c, d));
      }
    }
  }
  g.red_edges.assign(red.begin(), red.end());
  return g;
}

}  // namespace falcert::testsupport

#endif
