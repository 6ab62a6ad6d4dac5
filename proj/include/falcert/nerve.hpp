#ifndef FALCERT_NERVE_HPP
#define FALCERT_NERVE_HPP

#include <array>
#include <map>
#include <string>
#include <vector>

#include "falcert/errors.hpp"

namespace falcert {

// Edge-colored triangulation of the 2-sphere, dual to the unshaded faces of
// the right-angled polyhedron of a fully augmented link: a red edge per
// crossing circle, every triangle carrying exactly one red edge.
struct NerveGraph {
  std::vector<std::array<int, 3>> faces;        // oriented vertex triples
  std::vector<std::pair<int, int>> red_edges;   // unordered pairs

  int vertex_count() const;
  std::vector<std::pair<int, int>> edges() const;  // normalized u < v
  bool is_red(std::pair<int, int> e) const;
  std::vector<int> neighbors(int v) const;
  long long degree(int v) const;
  bool is_face_triple(int a, int b, int c) const;  // as an unordered set
};

struct ValidationIssue {
  std::string check;
  std::string witness;
};

struct ValidationReport {
  bool valid = true;
  std::vector<ValidationIssue> issues;
  int vertices = 0, edge_count = 0, face_count = 0;
};

// Reports every structural invariant pass/fail with a witness:
// simplicial oriented triangulation (each directed edge once, no repeated
// face, no loops), connectivity, Euler characteristic 2, 3F = 2E, red edges
// present in the graph, exactly one red edge per face, #red = F/2.
ValidationReport validate_nerve(const NerveGraph& g);

// All 3-cycles through the given red edge that do not bound a face; an empty
// list means the crossing circle has only its standard crossing disk.
std::vector<std::array<int, 3>> generalized_crossing_disk_cycles(
    const NerveGraph& g, std::pair<int, int> red_edge);

// First red edge (input order) whose non-trivial 3-cycle list is empty; the
// existence is guaranteed on valid nerves.
std::pair<int, int> unique_crossing_disk_circle(const NerveGraph& g);

// A vertex of degree <= 5; always exists since sum_v (6 - deg v) = 12 on a
// sphere triangulation.  Coloring is not required.
int low_degree_vertex(const NerveGraph& g);

}  // namespace falcert

#endif
