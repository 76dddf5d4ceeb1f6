#pragma once
// Graph surgery: the rewrite operations behind the reduction proofs. Every
// operation is pure (returns a new Graph) and keeps the result simple by
// discarding parallel edges created by merges.

#include <array>
#include <optional>
#include <vector>

#include "core/graph.hpp"

namespace tricolor {

struct Identification {
  int u, v;        // the merged pair (non-adjacent)
  int merged;      // label carrying the merged vertex: min(u, v)
};

// Merges non-adjacent u, v into min(u,v). Errors: unknown_vertex,
// adjacent_pair (identifying adjacent vertices would create a loop).
Graph identify(const Graph& g, int u, int v, Identification* info = nullptr);

// Merges N[u] = {u} ∪ N(u) into a single vertex w = min(N[u]); requires
// deg(u) = 3 and N(u) independent (the i-th extension's contraction gadget).
// Postcondition: n' = n - 3. Errors: unknown_vertex, wrong_degree,
// neighborhood_not_independent.
Graph contract_closed_neighborhood(const Graph& g, int u, int* merged = nullptr);

// Composition spec for O(G1, G2): delete edge x-y of G1, split z of G2 into
// two non-adjacent vertices covering N(z) by the disjoint parts (part1,
// rest), identify x with the part1 side and y with the other.
struct DhgoSpec {
  int x, y;                 // edge of g1 to delete
  int z;                    // vertex of g2 to split
  std::vector<int> part1;   // non-empty proper subset of N(z), attached to x
};

// Labels of g2 are shifted above g1's label range; the two merged vertices
// keep labels x and y. Errors: unknown_edge, unknown_vertex, invalid_spec
// (part1 empty, not a proper subset of N(z), or duplicate entries).
Graph dhgo_compose(const Graph& g1, const Graph& g2, const DhgoSpec& spec);

// Occurrence of K4' (K4 with the three edges at one vertex subdivided): a
// triangle t1 t2 t3, three distinct subdivision vertices s1 s2 s3 with
// si ~ ti, and an apex a adjacent to exactly s1 s2 s3 — the apex must have
// degree 3 in the host graph, the other six vertices may have more edges.
struct K4PrimeOccurrence {
  int apex;
  std::array<int, 3> mids;      // subdivision vertices, apex-adjacent
  std::array<int, 3> triangle;  // outer triangle, triangle[i] ~ mids[i]
};

// First occurrence in deterministic label order, or nullopt.
std::optional<K4PrimeOccurrence> find_k4prime(const Graph& g);
// All apexes of occurrences, sorted.
std::vector<int> k4prime_apexes(const Graph& g);

Graph add_edge(const Graph& g, int u, int v);      // errors: edge_exists, not_simple (u==v)
Graph delete_edge(const Graph& g, int u, int v);   // errors: unknown_edge
Graph delete_vertex(const Graph& g, int v);        // errors: unknown_vertex

// Thm-13-style split: replaces z by two adjacent copies z1 = z and
// z2 = (fresh label); each neighbor of z attaches to z1 if in cover_a, and
// to z2 if in cover_b; covers may overlap and must union to N(z).
// Errors: unknown_vertex, invalid_split.
Graph split_vertex(const Graph& g, int z, const std::vector<int>& cover_a,
                   const std::vector<int>& cover_b, int* z1 = nullptr, int* z2 = nullptr);

}  // namespace tricolor
