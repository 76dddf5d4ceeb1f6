#pragma once
// Error taxonomy shared by every module. Core code throws tc::Error; the C
// API boundary translates the code into a status and keeps the message.

#include <stdexcept>
#include <string>

namespace tricolor {

enum class Errc {
  ok = 0,
  not_simple,            // self-loop or duplicate edge in input
  disconnected,          // operation requires a connected graph
  non_planar,            // no planar embedding exists (or rotation fails Euler)
  unknown_vertex,        // label not in the graph
  unknown_edge,          // edge not in the graph
  edge_exists,           // add_edge on an existing edge
  adjacent_pair,         // identify() on adjacent vertices
  not_a_cycle,           // vertex sequence is not a simple cycle / facial cycle
  wrong_degree,          // operation pinned to a specific degree
  neighborhood_not_independent,
  invalid_split,         // split_vertex cover/partition violation
  invalid_spec,          // malformed composition spec
  result_not_simple,     // composition would create parallel edges
  diagonal_present,      // 4-face already has a chord
  too_many_triangles,    // hypothesis admits at most one triangle
  invalid_constraints,   // constraint set fails its own invariants
  improper_partial,      // precoloring conflicts along the face
  not_critical,          // bound audit requires a 4-critical input
  cap_exceeded,          // size cap (n <= 64, enumeration caps) exceeded
  bad_header,            // planar_code header mismatch
  truncated,             // planar_code byte stream ends mid-graph
  parse_error,           // malformed text input
  io_error,
  internal,              // broken invariant inside the library
};

const char* errc_name(Errc c);

struct Error : std::runtime_error {
  Errc code;
  Error(Errc c, const std::string& msg) : std::runtime_error(msg), code(c) {}
};

[[noreturn]] inline void fail(Errc c, const std::string& msg) { throw Error(c, msg); }

}  // namespace tricolor
