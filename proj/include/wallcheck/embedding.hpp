#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "wallcheck/graph.hpp"

namespace wallcheck {

/// Certificate that a subdivision of `pattern` appears as a subgraph of a
/// host: every pattern vertex gets a distinct host image, every pattern edge
/// a host path between the right images, and paths meet each other and the
/// images only at their endpoints.
struct Embedding {
  std::string pattern;
  std::map<VertexId, VertexId> branch_map;
  std::map<Edge, Path> path_map;

  std::set<VertexId> image_vertices() const;
  std::set<Edge> image_edges() const;
};

enum class SearchOutcome { Found, None, BudgetExceeded };

struct SearchStats {
  std::uint64_t nodes = 0;
  std::uint64_t witnesses = 0;
  bool exhausted = false;
};

struct SearchConstraints {
  std::set<VertexId> forbidden;                        // host vertices
  std::map<VertexId, VertexId> pins;                   // pattern -> host
  std::map<VertexId, std::vector<VertexId>> domains;   // pattern -> allowed hosts
  std::optional<std::set<Edge>> allowed_edges;         // confine witness to subgraph
  std::uint64_t node_budget = 100'000'000;
  std::optional<std::uint64_t> witness_cap;
};

/// Checks every Embedding invariant against host and pattern. Runs in time
/// linear in the certificate. References to vertices or edges that do not
/// exist in pattern or host raise CertificateError; a well-formed but wrong
/// certificate just returns false.
bool verify_embedding(const LabeledGraph& host, const Embedding& emb,
                      const LabeledGraph& pattern);

struct EmbeddingResult {
  SearchOutcome outcome = SearchOutcome::None;
  std::optional<Embedding> witness;
  SearchStats stats;
};

/// Deterministic branch-and-bound search for a subdivision of pattern in
/// host. Returns the first witness in canonical order, an exhaustion result
/// (the whole constrained space was explored), or a budget verdict.
EmbeddingResult find_topological_minor(const LabeledGraph& host,
                                       const LabeledGraph& pattern,
                                       const SearchConstraints& c = {});

/// Emits every constrained embedding; two embeddings are distinct iff their
/// branch maps or their paths differ. The sink returns false to stop early.
SearchStats enumerate_embeddings(const LabeledGraph& host,
                                 const LabeledGraph& pattern,
                                 const SearchConstraints& c,
                                 const std::function<bool(const Embedding&)>& sink);

/// Core-level witness: images of the pattern's branch vertices (degree != 2)
/// and one host path per suppressed branch-to-branch chain. Expansions that
/// only re-designate degree-2 pattern vertices along the same paths are not
/// enumerated separately.
struct CoreWitness {
  std::map<VertexId, VertexId> images;
  struct ChainPath {
    VertexId pu, pv;                  // chain ends (pattern ids)
    std::vector<VertexId> inner;      // pattern's degree-2 chain, pu side first
    Path host_path;                   // from image(pu) to image(pv)
  };
  std::vector<ChainPath> chains;
};

SearchStats enumerate_core_witnesses(
    const LabeledGraph& host, const LabeledGraph& pattern,
    const SearchConstraints& c,
    const std::function<bool(const CoreWitness&)>& sink);

/// Canonical expansion of a core witness into a full certificate (inner
/// pattern vertices take the earliest positions on their host paths).
Embedding expand_core_witness(const CoreWitness& w, const LabeledGraph& pattern,
                              const std::string& pattern_name);

// ---------------------------------------------------------------------------
// Linkages

struct Linkage {
  Path pab, pcd;
};

bool verify_linkage(const LabeledGraph& host, const Linkage& l, VertexId a,
                    VertexId b, VertexId c, VertexId d);

struct LinkageResult {
  SearchOutcome outcome = SearchOutcome::None;
  std::optional<Linkage> witness;
  SearchStats stats;
};

/// Vertex-disjoint s1-t1 and s2-t2 paths, by exhaustive path enumeration
/// with separation pruning. Optional edge exclusions support edge-disjoint
/// outer searches.
LinkageResult find_disjoint_pair(const LabeledGraph& host, VertexId s1,
                                 VertexId t1, VertexId s2, VertexId t2,
                                 std::uint64_t budget = 100'000'000,
                                 const std::set<Edge>& excluded_edges = {});

/// (a-b, c-d)-linkage with terminals read from roles (c and d fall back to
/// the extreme bottlenecks).
LinkageResult find_linkage(const LabeledGraph& host,
                           std::uint64_t budget = 100'000'000);

struct TwoLinkagesResult {
  SearchOutcome outcome = SearchOutcome::None;
  std::optional<std::pair<Linkage, Linkage>> witness;
  SearchStats stats;
};

/// Two linkages sharing no edge, or an exhaustion certificate that none
/// exist. Exhaustive over the first linkage, with a full linkage search on
/// the edge-residual graph inside.
TwoLinkagesResult find_two_edge_disjoint_linkages(
    const LabeledGraph& host, std::uint64_t budget = 100'000'000);

// ---------------------------------------------------------------------------
// Packings

struct Packing {
  std::vector<Embedding> embeddings;
};

bool verify_packing(const LabeledGraph& host, const Packing& p,
                    const LabeledGraph& pattern);

struct PackingResult {
  SearchOutcome outcome = SearchOutcome::None;
  std::optional<Packing> witness;
  SearchStats stats;
};

/// k pairwise edge-disjoint embeddings of pattern (vertex sharing allowed),
/// greedy-first with backtracking.
PackingResult find_edge_disjoint_packing(const LabeledGraph& host,
                                         const LabeledGraph& pattern, int k,
                                         const SearchConstraints& c = {});

}  // namespace wallcheck
