#include <doctest.h>

#include <random>

#include "falcert/nerve.hpp"
#include "nerve_corpus.hpp"

using namespace falcert;
using testsupport::doubled_crossing_disk_nerve;
using testsupport::k4_nerve;
using testsupport::octahedral_nerve;
using testsupport::random_sphere_triangulation;

namespace {

bool structurally_valid(const NerveGraph& g) {
  auto rep = validate_nerve(g);
  for (const auto& issue : rep.issues) {
    if (issue.check != "one-red-edge-per-face" &&
        issue.check != "red-count-is-half-faces" &&
        issue.check != "red-edges-in-graph")
      return false;
  }
  return true;
}

// Oriented icosahedron; all vertices have degree 5.
NerveGraph icosahedron() {
  NerveGraph g;
  g.faces = {{0, 1, 2},  {0, 2, 3},  {0, 3, 4},  {0, 4, 5},   {0, 5, 1},
             {1, 5, 6},  {1, 6, 7},  {1, 7, 2},  {2, 7, 8},   {2, 8, 3},
             {3, 8, 9},  {3, 9, 4},  {4, 9, 10}, {4, 10, 5},  {5, 10, 6},
             {6, 10, 11}, {7, 6, 11}, {8, 7, 11}, {9, 8, 11}, {10, 9, 11}};
  return g;
}

long long six_minus_degree_sum(const NerveGraph& g) {
  std::set<int> vs;
  for (const auto& f : g.faces) vs.insert(f.begin(), f.end());
  long long total = 0;
  for (int v : vs) total += 6 - g.degree(v);
  return total;
}

}  // namespace

TEST_CASE("octahedral nerve validates") {
  auto rep = validate_nerve(octahedral_nerve());
  CHECK(rep.valid);
  CHECK(rep.vertices == 6);
  CHECK(rep.edge_count == 12);
  CHECK(rep.face_count == 8);
}

TEST_CASE("octahedral nerve with two red edges on one face is rejected") {
  NerveGraph g = octahedral_nerve();
  g.red_edges = {{0, 2}, {2, 4}, {1, 4}, {1, 5}};  // face (0,2,4) gets two
  auto rep = validate_nerve(g);
  CHECK(!rep.valid);
  bool witnessed = false;
  for (const auto& issue : rep.issues)
    if (issue.check == "one-red-edge-per-face" &&
        issue.witness.find("(0,2,4)") != std::string::npos)
      witnessed = true;
  CHECK(witnessed);
}

TEST_CASE("K4 colorings, exhaustively") {
  // The smallest sphere triangulation admits exactly the three perfect
  // matchings as one-red-per-face colorings; anything else fails.
  NerveGraph base = k4_nerve();
  auto all_edges = base.edges();
  REQUIRE(all_edges.size() == 6);
  int valid_count = 0;
  for (std::size_t i = 0; i < all_edges.size(); ++i)
    for (std::size_t j = i + 1; j < all_edges.size(); ++j) {
      NerveGraph g = base;
      g.red_edges = {all_edges[i], all_edges[j]};
      if (validate_nerve(g).valid) ++valid_count;
    }
  CHECK(valid_count == 3);

  CHECK(validate_nerve(k4_nerve()).valid);
  NerveGraph bad = k4_nerve();
  bad.red_edges = {{0, 1}, {0, 2}};
  CHECK(!validate_nerve(bad).valid);
}

TEST_CASE("broken complexes are reported with witnesses") {
  NerveGraph g;
  g.faces = {{0, 1, 2}, {1, 0, 3}, {2, 3, 0}};  // missing one K4 face
  auto rep = validate_nerve(g);
  CHECK(!rep.valid);

  NerveGraph loops;
  loops.faces = {{0, 0, 1}};
  CHECK(!validate_nerve(loops).valid);

  NerveGraph pillow;  // two faces on the same vertex set
  pillow.faces = {{0, 1, 2}, {2, 1, 0}};
  pillow.red_edges = {{0, 1}};
  CHECK(!validate_nerve(pillow).valid);
}

TEST_CASE("crossing-disk cycles on the octahedron are all trivial") {
  NerveGraph g = octahedral_nerve();
  for (auto red : g.red_edges)
    CHECK(generalized_crossing_disk_cycles(g, red).empty());
  CHECK(unique_crossing_disk_circle(g) == g.red_edges[0]);
  CHECK_THROWS_AS(generalized_crossing_disk_cycles(g, {2, 4}), NotRedEdge);
}

TEST_CASE("nerve containing the crossing-disk subgraph") {
  NerveGraph g = doubled_crossing_disk_nerve();
  REQUIRE(validate_nerve(g).valid);

  auto cycles = generalized_crossing_disk_cycles(g, {0, 1});
  REQUIRE(cycles.size() == 1);
  std::array<int, 3> c = cycles[0];
  std::sort(c.begin(), c.end());
  CHECK(c == std::array<int, 3>{0, 1, 4});

  // The red diagonal inside the quadrilateral region is uniquely disked.
  auto disk = unique_crossing_disk_circle(g);
  CHECK(disk == std::make_pair(2, 4));
}

TEST_CASE("no uniquely disked circle signals an axiom violation") {
  NerveGraph g = doubled_crossing_disk_nerve();
  g.red_edges = {{0, 1}};  // keep only the doubly-disked circle
  CHECK_THROWS_AS(unique_crossing_disk_circle(g), NoneFound);
}

TEST_CASE("low degree vertices") {
  NerveGraph oct = octahedral_nerve();
  int v = low_degree_vertex(oct);
  CHECK(oct.degree(v) == 4);

  NerveGraph ico = icosahedron();
  CHECK(structurally_valid(ico));
  CHECK(ico.degree(low_degree_vertex(ico)) == 5);
  CHECK(six_minus_degree_sum(ico) == 12);
}

TEST_CASE("random sphere triangulations satisfy the Euler degree count") {
  std::mt19937 rng(90210);
  for (int i = 0; i < 40; ++i) {
    NerveGraph g = random_sphere_triangulation(rng, 10 + int(i) * 4);
    CAPTURE(i);
    REQUIRE(structurally_valid(g));
    CHECK(six_minus_degree_sum(g) == 12);
    int v = low_degree_vertex(g);
    CHECK(g.degree(v) <= 5);
  }
}

TEST_CASE("every random colored nerve has a uniquely disked circle") {
  // Colored generator maintains the one-red-per-face axiom, so the full
  // validator must accept and the uniquely-disked guarantee must hold.
  std::mt19937 rng(31337);
  int with_doubled_disks = 0;
  for (int i = 0; i < 60; ++i) {
    NerveGraph g = testsupport::random_colored_nerve(rng, 8 + (i % 20) * 4);
    CAPTURE(i);
    REQUIRE(validate_nerve(g).valid);
    bool some_nontrivial = false;
    for (auto red : g.red_edges)
      if (!generalized_crossing_disk_cycles(g, red).empty()) some_nontrivial = true;
    if (some_nontrivial) ++with_doubled_disks;
    CHECK_NOTHROW(unique_crossing_disk_circle(g));
  }
  // The corpus is not all trivial: some instances carry circles with more
  // than one generalized crossing disk.
  CHECK(with_doubled_disks > 0);
}
