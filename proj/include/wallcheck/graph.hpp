#pragma once

#include <compare>
#include <cstdint>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace wallcheck {

using VertexId = std::uint32_t;

struct InputError : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct BudgetError : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct CertificateError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Unordered vertex pair, normalized so u < v. Loops are never representable
/// as graph edges; constructing an Edge with equal endpoints is allowed only
/// so parsers can detect and reject them.
struct Edge {
  VertexId u = 0;
  VertexId v = 0;
  Edge() = default;
  Edge(VertexId a, VertexId b) : u(a < b ? a : b), v(a < b ? b : a) {}
  friend auto operator<=>(const Edge&, const Edge&) = default;
};

enum class TerminalName : std::uint8_t { A, B, C, D };

char terminal_letter(TerminalName t);
std::optional<TerminalName> terminal_from_letter(char c);

enum class RoleKind : std::uint8_t {
  Plain,
  Terminal,
  Bottleneck,
  RowVertex,
  SubdivisionVertex,
  BranchVertex,
};

struct Role {
  RoleKind kind = RoleKind::Plain;
  TerminalName which = TerminalName::A;  // Terminal
  int index = 0;                         // Bottleneck
  int layer = 0;                         // RowVertex
  int position = 0;                      // RowVertex, 1-based within the row
  Edge origin{};                         // SubdivisionVertex

  friend bool operator==(const Role&, const Role&) = default;

  static Role plain() { return {}; }
  static Role terminal(TerminalName t);
  static Role bottleneck(int index);
  static Role row(int layer, int position);
  static Role subdivision(Edge origin);
  static Role branch();
};

enum class EdgeClass : std::uint8_t { Plain, JumpEdge, TerminalAttachment };

/// Simple undirected graph with per-vertex roles and per-edge classes.
/// Vertex ids are opaque and stable: deletions never renumber, so any
/// certificate that names vertices stays meaningful across host mutation.
/// Role and class maps are total with Plain defaults; only non-Plain
/// entries are stored.
class LabeledGraph {
 public:
  LabeledGraph() = default;
  explicit LabeledGraph(std::string name) : name_(std::move(name)) {}

  VertexId add_vertex(Role role = {});
  void add_vertex(VertexId id, Role role = {});
  void add_edge(VertexId u, VertexId v, EdgeClass cls = EdgeClass::Plain);
  void remove_edge(Edge e);
  void remove_vertex(VertexId v);
  void set_role(VertexId v, Role role);
  void set_edge_class(Edge e, EdgeClass cls);

  bool has_vertex(VertexId v) const { return adj_.count(v) != 0; }
  bool has_edge(Edge e) const;
  std::size_t vertex_count() const { return adj_.size(); }
  std::size_t edge_count() const { return edge_count_; }

  std::vector<VertexId> vertices() const;            // ascending
  std::vector<Edge> edges() const;                   // ascending
  const std::vector<VertexId>& neighbors(VertexId v) const;  // ascending
  std::size_t degree(VertexId v) const { return neighbors(v).size(); }
  std::size_t max_degree() const;

  Role role(VertexId v) const;
  EdgeClass edge_class(Edge e) const;

  const std::string& name() const { return name_; }
  void set_name(std::string n) { name_ = std::move(n); }

  /// Smallest id never used so far; fresh vertices are allocated from here.
  VertexId next_id() const { return next_; }

  std::optional<VertexId> find_terminal(TerminalName t) const;

  friend bool operator==(const LabeledGraph& a, const LabeledGraph& b);

 private:
  std::string name_;
  std::map<VertexId, std::vector<VertexId>> adj_;
  std::map<VertexId, Role> roles_;        // non-Plain only
  std::map<Edge, EdgeClass> classes_;     // non-Plain only
  std::size_t edge_count_ = 0;
  VertexId next_ = 0;
};

/// Path as an ordered vertex list v0..vk, k >= 1, vertices pairwise distinct.
struct Path {
  std::vector<VertexId> verts;

  Path() = default;
  explicit Path(std::vector<VertexId> vs) : verts(std::move(vs)) {}

  std::size_t length() const { return verts.empty() ? 0 : verts.size() - 1; }
  VertexId front() const { return verts.front(); }
  VertexId back() const { return verts.back(); }
  bool valid_in(const LabeledGraph& g) const;
  std::vector<Edge> edges() const;

  friend bool operator==(const Path&, const Path&) = default;
};

// Transformations. Each returns a new graph; inputs are never mutated.

/// Replaces e by a path with `inner` fresh vertices tagged
/// SubdivisionVertex(e). inner = 0 is the identity.
LabeledGraph subdivide_edge(const LabeledGraph& g, Edge e, int inner);

/// Replaces every edge uv by r internally disjoint u-m_i-v paths with fresh
/// midpoints m_i tagged SubdivisionVertex(uv). The result is simple and has
/// |V| + r|E| vertices and 2r|E| edges.
LabeledGraph r_fold(const LabeledGraph& g, int r);

/// Merges v into u (the surviving vertex keeps id u). Parallel edges arising
/// from the merge collapse to one. If exactly one of the two carries a
/// non-Plain role, the merged vertex keeps it; two distinct non-Plain roles
/// are a role-conflict error.
LabeledGraph identify_vertices(const LabeledGraph& g, VertexId u, VertexId v);

LabeledGraph delete_edges(const LabeledGraph& g, const std::vector<Edge>& es);
LabeledGraph delete_vertices(const LabeledGraph& g,
                             const std::vector<VertexId>& vs);

/// Fresh midpoints of the bundle that replaced original edge e in r_fold(g,r).
std::vector<VertexId> fold_midpoints(const LabeledGraph& folded, Edge e);

/// Terminal lookup by role; c and d fall back to the bottlenecks of smallest
/// and largest index when no Terminal role is present, which is how condensed
/// walls carry them.
VertexId require_terminal(const LabeledGraph& g, TerminalName t);

}  // namespace wallcheck
