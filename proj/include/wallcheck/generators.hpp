#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "wallcheck/graph.hpp"

namespace wallcheck {

// ---------------------------------------------------------------------------
// Condensed walls

struct CondensedWallSpec {
  int size = 1;            // r >= 1
  bool jump_edges = true;  // false builds the modified wall W^-
};

/// A condensed wall of size r: terminals a and b, bottleneck vertices
/// z_0..z_r (c = z_0, d = z_r), and r rows of 2r vertices. Row j lies
/// between z_{j-1} (adjacent to its odd positions) and z_j (adjacent to its
/// even positions); a meets every row's first vertex, b every row's last.
/// The struct keeps the address maps so callers can name vertices by
/// (layer, position).
struct CondensedWall {
  LabeledGraph graph;
  int size = 0;
  bool jumps = true;
  VertexId a = 0, b = 0;
  std::vector<VertexId> z;                   // z[0..r]
  std::vector<std::vector<VertexId>> rows;   // rows[j-1][k-1] = u^j_k

  VertexId zvert(int i) const;
  /// pos in 1..2r, or negative counting from the right (-1 = last).
  VertexId u(int layer, int pos) const;
  int width() const { return 2 * size; }
  VertexId c() const { return z.front(); }
  VertexId d() const { return z.back(); }
  std::vector<Edge> jump_edge_list() const;
  /// Vertices of layer j: the row plus z_{j-1} and z_j.
  std::vector<VertexId> layer_vertices(int layer) const;
  /// Edges induced on layer j.
  std::vector<Edge> layer_edges(int layer) const;
};

CondensedWall gen_condensed_wall(const CondensedWallSpec& spec);

// ---------------------------------------------------------------------------
// Walls

/// m rows by n brick-columns, with an optional per-edge subdivision plan
/// keyed by elementary wall edges.
struct WallSpec {
  int rows = 1;
  int cols = 1;
  std::map<Edge, int> subdivision;
};

struct Brick {
  int gap = 0;    // which pair of grid rows, 1..m
  int index = 0;  // position within the gap, 1..n
  std::vector<VertexId> cycle;  // closed walk, first vertex not repeated
  bool outer = false;           // touches the wall's outer face
};

struct BrickCertificate {
  std::vector<Brick> bricks;
  std::vector<std::vector<int>> adjacent;  // indices of bricks sharing a vertex
};

struct Wall {
  LabeledGraph graph;
  BrickCertificate cert;
  int rows = 0;  // m
  int cols = 0;  // n
  std::map<std::pair<int, int>, VertexId> at;  // (grid row, grid col) -> id
  /// Expansion of each elementary edge into its subdivided path.
  std::map<Edge, Path> expansion;
};

LabeledGraph gen_elementary_grid(int m, int n);
Wall gen_elementary_wall(int m, int n);
Wall gen_wall(const WallSpec& spec);

/// Minimal subgraph containing every brick with at least three adjacent
/// bricks. For any wall of size >= 2x2 this trims the private parts of the
/// two corner bricks.
Wall body(const Wall& wall);

// ---------------------------------------------------------------------------
// Brick walls B1..B10 and B1^2

enum class BrickWallId { B1, B2, B3, B4, B5, B6, B7, B8, B9, B10, B1Sq };

std::optional<BrickWallId> brick_wall_from_name(const std::string& name);
std::string brick_wall_name(BrickWallId id);
int brick_wall_count(BrickWallId id);

struct BrickWall {
  LabeledGraph graph;
  BrickCertificate cert;
  /// Honeycomb coordinates of each elementary vertex.
  std::map<VertexId, std::pair<int, int>> coords;
  std::map<std::pair<int, int>, VertexId> at;
  std::map<Edge, Path> expansion;
};

/// The elementary graph of the given id, subdivided per plan. B1Sq takes the
/// lengths of its two connecting paths; both join antipodal corners of the
/// two hexagons.
BrickWall gen_brick_wall(BrickWallId id, const std::map<Edge, int>& plan = {},
                         int p1_len = 1, int p2_len = 1);

// ---------------------------------------------------------------------------
// Terminal edges and G*

struct TerminalEdges {
  Edge e1, e2;
};

/// Smallest number of distinct bricks sharing a vertex (or, with
/// edge_incidence, an edge) with some e1-e2 path, not counting bricks that
/// contain e1 or e2. Values of 7 or more are all reported as 7. Branch and
/// bound over paths; throws BudgetError when the node budget runs out.
int min_bricks_between(const Wall& wall, Edge e1, Edge e2,
                       std::uint64_t budget = 50'000'000,
                       bool edge_incidence = false);

/// Canonical choice of two outer-face body edges near diagonally opposite
/// corners, verified to satisfy the seven-brick condition above.
TerminalEdges pick_terminal_edges(const Wall& wall,
                                  std::uint64_t budget = 50'000'000);

/// True when every a-c path in g leaves b and d in different components of
/// g minus the path, checked exhaustively. Equivalent formulation used here:
/// g has no pair of vertex-disjoint a-c and b-d paths. Terminals are read
/// from roles.
bool check_terminal_orientation(const LabeledGraph& exterior,
                                std::uint64_t budget = 200'000'000);

struct GStarSpec {
  WallSpec wall{6, 4, {}};
  int fold = 2;  // r
  std::optional<TerminalEdges> terminal_edges;
  std::uint64_t budget = 200'000'000;
};

struct GStar {
  LabeledGraph graph;
  int fold = 0;
  Wall base;            // B, ids shared with the exterior part of graph
  Edge e1, e2;
  VertexId a = 0, b = 0, c = 0, d = 0;
  CondensedWall wall_part;      // address map into graph (terminals merged)
  LabeledGraph exterior_base;   // B - e1 - e2 with terminal roles, same ids
};

/// Union of an r-fold of B - {e1,e2} with a condensed wall of size r, the
/// wall terminals identified with the endpoints of e1 and e2 so that a,b
/// share an edge and the orientation check holds (c and d are swapped once
/// if needed; failure of both pairings is a construction error).
GStar build_gstar(const GStarSpec& spec);

// ---------------------------------------------------------------------------
// Hosts with exterior attachments

struct CdPathHost {
  LabeledGraph graph;
  CondensedWall wall;
  std::vector<std::vector<VertexId>> cd_paths;  // each c..d inclusive
};

/// Condensed wall (jumps optional) plus `count` edge-disjoint length-2
/// c-d paths, internally disjoint from the wall.
CdPathHost gen_wall_with_cd_paths(int size, int count, bool jumps = false);

struct ExteriorBrickHost {
  LabeledGraph graph;
  CondensedWall wall;
  std::vector<VertexId> hex;  // corners, cyclic
  int fold = 1;
  /// Midpoints of the k-th copy (0-based) of hexagon edge i -> i+1.
  VertexId hex_mid(int i, int k) const;
  VertexId attach_mid(int corner, int k) const;  // corner in {0,1,2}
  LabeledGraph const* g() const { return &graph; }
};

/// Modified condensed wall plus a fold-fold hexagon whose corners 0,1,2 are
/// joined to d, b and c by fold-fold attachment edges.
ExteriorBrickHost gen_wall_with_exterior_brick(int size, int fold);

struct ExteriorB2Host {
  LabeledGraph graph;
  CondensedWall wall;
  std::vector<VertexId> ring;  // s0..s5, first brick cycle
  std::vector<VertexId> tail;  // t1..t4; second brick is s5,t1..t4,s0
  int fold = 1;
  VertexId ring_mid(int i, int k) const;   // edge s_i -> s_{i+1}
  VertexId tail_mid(int i, int k) const;   // edges s5-t1,t1-t2,..,t4-s0
  VertexId attach_mid(TerminalName t, int k) const;
};

/// Modified condensed wall plus a fold-fold two-brick graph attached to all
/// four terminals: c at s1, b at s2, a at t4, d at t3.
ExteriorB2Host gen_wall_with_exterior_b2(int size, int fold);

// ---------------------------------------------------------------------------
// Id plumbing

LabeledGraph shift_ids(const LabeledGraph& g, VertexId offset);
LabeledGraph disjoint_union(const LabeledGraph& a, const LabeledGraph& b);

}  // namespace wallcheck
