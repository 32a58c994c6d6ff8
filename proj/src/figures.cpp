#include "wallcheck/figures.hpp"

#include <algorithm>

namespace wallcheck {

namespace {

struct EdgeListBuilder {
  const CondensedWall& w;
  std::vector<Edge> edges;

  EdgeListBuilder(const CondensedWall& wall) : w(wall) {}

  void row_run(int layer, int from, int to) {
    int width = w.width();
    if (from < 0) from = width + 1 + from;
    if (to < 0) to = width + 1 + to;
    for (int p = std::min(from, to); p < std::max(from, to); ++p)
      edges.emplace_back(w.u(layer, p), w.u(layer, p + 1));
  }
  void uz(int layer, int pos, int zidx) {
    edges.emplace_back(w.u(layer, pos), w.zvert(zidx));
  }
  void ua(int layer, int pos) { edges.emplace_back(w.u(layer, pos), w.a); }
  void ub(int layer, int pos) { edges.emplace_back(w.u(layer, pos), w.b); }
};

void require_present(const LabeledGraph& host, const std::vector<Edge>& edges,
                     const char* what) {
  for (Edge e : edges)
    if (!host.has_edge(e))
      throw InputError(std::string(what) + ": host too small for this placement");
}

PlacedTemplate extract(const LabeledGraph& host, BrickWallId pattern_id,
                       const std::vector<Edge>& tmpl,
                       std::vector<VertexId> attachments) {
  require_present(host, tmpl, "template");
  BrickWall pat = gen_brick_wall(pattern_id);
  SearchConstraints c;
  c.allowed_edges = std::set<Edge>(tmpl.begin(), tmpl.end());
  c.node_budget = 200'000'000;
  auto res = find_topological_minor(host, pat.graph, c);
  if (res.outcome != SearchOutcome::Found)
    throw InputError("template subgraph is not a " +
                     brick_wall_name(pattern_id) + " subdivision");
  PlacedTemplate out;
  out.embedding = *res.witness;
  out.embedding.pattern = brick_wall_name(pattern_id);
  out.pattern_name = brick_wall_name(pattern_id);
  out.attachments = std::move(attachments);
  out.edges_used = {tmpl.begin(), tmpl.end()};
  return out;
}

}  // namespace

PlacedTemplate place_b3_in_layer(const CondensedWall& w, int layer) {
  if (w.size < 6) throw InputError("B3 layer template needs wall size >= 6");
  EdgeListBuilder b(w);
  int z0 = layer - 1, z1 = layer;
  b.uz(layer, 3, z0);
  b.uz(layer, 7, z0);
  b.uz(layer, -2, z0);
  b.row_run(layer, 2, -1);
  b.uz(layer, 2, z1);
  b.uz(layer, -1, z1);
  return extract(w.graph, BrickWallId::B3, b.edges, {});
}

PlacedTemplate place_b6_in_layers(const CondensedWall& w, int layer) {
  if (w.size < 6) throw InputError("B6 template needs wall size >= 6");
  if (layer + 2 > w.size) throw InputError("B6 template needs three layers");
  EdgeListBuilder b(w);
  int r1 = layer, r2 = layer + 1, r3 = layer + 2;
  int z0 = layer - 1, z1 = layer, z2 = layer + 1, z3 = layer + 2;

  b.ua(r1, 1);
  b.uz(r1, 1, z0);
  b.row_run(r1, 1, 2);
  b.uz(r1, 2, z1);
  b.uz(r1, 4, z1);
  b.row_run(r1, 4, 7);
  b.uz(r1, 7, z0);
  b.row_run(r1, 7, -2);
  b.uz(r1, -2, z0);
  b.row_run(r1, -2, -1);
  b.ub(r1, -1);

  b.uz(r2, 5, z1);
  b.row_run(r2, 5, 6);
  b.uz(r2, 6, z2);

  b.ua(r3, 1);
  b.uz(r3, 1, z2);
  b.row_run(r3, 1, 2);
  b.uz(r3, 2, z3);
  b.uz(r3, 5, z2);
  b.row_run(r3, 5, 8);
  b.uz(r3, 8, z3);
  b.row_run(r3, 8, -1);
  b.uz(r3, -1, z3);
  b.ub(r3, -1);

  return extract(w.graph, BrickWallId::B6, b.edges, {});
}

namespace {

/// Column pair for the connector of chunk `k` while it crosses region `rho`.
/// Within a region every crossing connector gets its own pair: first the
/// c-connectors of higher chunks, then the d-connectors of lower ones.
int connector_col(int base, int k, int rho, int chunks_total, bool c_side) {
  int slot = c_side ? (k - rho - 1) : (chunks_total - rho) + (k - 1);
  return base + 2 * slot;
}

/// Zig-zag path between bottlenecks z_from and z_to (indices), crossing one
/// layer per step at the column pair chosen by col_of(layer).
std::vector<VertexId> bottleneck_connector(
    const CondensedWall& w, int z_from, int z_to,
    const std::function<int(int)>& col_of) {
  std::vector<VertexId> verts{w.zvert(z_from)};
  if (z_from > z_to) {
    for (int t = z_from; t > z_to; --t) {  // layer t between z_{t-1}, z_t
      int q = col_of(t);
      verts.push_back(w.u(t, q + 1));
      verts.push_back(w.u(t, q));
      verts.push_back(w.zvert(t - 1));
    }
  } else {
    for (int t = z_from + 1; t <= z_to; ++t) {
      int q = col_of(t);
      verts.push_back(w.u(t, q));
      verts.push_back(w.u(t, q + 1));
      verts.push_back(w.zvert(t));
    }
  }
  return verts;
}

void append_path_edges(std::vector<Edge>& edges,
                       const std::vector<VertexId>& verts) {
  for (std::size_t i = 0; i + 1 < verts.size(); ++i)
    edges.emplace_back(verts[i], verts[i + 1]);
}

}  // namespace

PlacedTemplate place_b7_chunk(const CdPathHost& host, int chunk,
                              int chunks_total) {
  const CondensedWall& w = host.wall;
  if (w.size < 5 * chunks_total || chunk < 1 || chunk > chunks_total)
    throw InputError("B7 chunk placement out of range");
  if ((int)host.cd_paths.size() < chunks_total)
    throw InputError("host lacks enough exterior c-d paths");
  if (w.width() < 10) throw InputError("B7 template needs wall size >= 5");

  EdgeListBuilder b(w);
  int off = 5 * (chunk - 1);
  int r1 = off + 1, r2 = off + 2, r3 = off + 3, r4 = off + 4, r5 = off + 5;
  int z0 = off, z1 = off + 1, z2 = off + 2, z3 = off + 3, z4 = off + 4,
      z5 = off + 5;

  b.ua(r1, 1);
  b.row_run(r1, 1, 3);
  b.uz(r1, 3, z0);
  b.row_run(r1, 3, 6);
  b.uz(r1, 6, z1);
  b.uz(r1, -2, z0);
  b.row_run(r1, -2, -1);
  b.ub(r1, -1);
  b.uz(r1, -1, z1);

  b.uz(r2, -10, z1);
  b.row_run(r2, -10, -7);
  b.uz(r2, -7, z2);
  b.row_run(r2, -7, -1);
  b.ub(r2, -1);

  b.uz(r3, 5, z2);
  b.row_run(r3, 5, 6);
  b.uz(r3, 6, z3);

  b.ua(r4, 1);
  b.row_run(r4, 1, 4);
  b.uz(r4, 4, z4);
  b.row_run(r4, 4, 7);
  b.uz(r4, 7, z3);
  b.uz(r4, -2, z3);
  b.row_run(r4, -2, -1);
  b.uz(r4, -1, z4);
  b.ub(r4, -1);

  b.ua(r5, 1);
  b.row_run(r5, 1, 2);
  b.uz(r5, 2, z5);
  b.uz(r5, 5, z4);
  b.row_run(r5, 5, 6);
  b.uz(r5, 6, z5);

  // Missing brick edge: chunk top bottleneck down to c, the chunk's own
  // exterior c-d path, then d back up to the chunk's bottom bottleneck.
  auto col_c = [&](int t) {
    int rho = (t - 1) / 5 + 1;
    return connector_col(7, chunk, rho, chunks_total, true);
  };
  auto col_d = [&](int t) {
    int rho = (t - 1) / 5 + 1;
    return connector_col(7, chunk, rho, chunks_total, false);
  };
  std::vector<VertexId> missing = bottleneck_connector(w, z0, 0, col_c);
  const auto& ext = host.cd_paths[chunk - 1];
  missing.insert(missing.end(), ext.begin() + 1, ext.end());
  auto down = bottleneck_connector(w, w.size, z5, col_d);
  missing.insert(missing.end(), down.begin() + 1, down.end());
  append_path_edges(b.edges, missing);

  return extract(host.graph, BrickWallId::B7, b.edges, {w.c(), w.d()});
}

namespace {

/// In-wall part of the three-layer B8 placement. Narrow form (width 6) found
/// by exhaustive search; wide form follows the drawn embedding. Both leave
/// the same brick missing: it is supplied by the exterior hexagon attached
/// at d, b and c.
void b8_wall_edges(EdgeListBuilder& b, int off, int width) {
  int r1 = off + 1, r2 = off + 2, r3 = off + 3;
  int z0 = off, z1 = off + 1, z2 = off + 2, z3 = off + 3;
  if (width >= 10) {
    b.ua(r1, 1);
    b.row_run(r1, 1, 4);
    b.uz(r1, 4, z1);
    b.row_run(r1, 4, 7);
    b.uz(r1, 7, z0);
    b.uz(r1, -2, z0);
    b.row_run(r1, -2, -1);
    b.uz(r1, -1, z1);
    b.ub(r1, -1);

    b.uz(r2, 3, z1);
    b.row_run(r2, 3, 4);
    b.uz(r2, 4, z2);

    b.ua(r3, 1);
    b.uz(r3, 1, z2);
    b.row_run(r3, 1, 3);
    b.uz(r3, 3, z2);
    b.row_run(r3, 3, 6);
    b.uz(r3, 6, z3);
    b.uz(r3, -2, z2);
    b.row_run(r3, -2, -1);
    b.uz(r3, -1, z3);
    b.ub(r3, -1);
  } else {
    throw InputError("B8 template needs wall width >= 10");
  }
}

void b9_wall_edges(EdgeListBuilder& b, int off, int width) {
  int r1 = off + 1, r2 = off + 2, r3 = off + 3;
  int z0 = off, z1 = off + 1, z2 = off + 2, z3 = off + 3;
  if (width >= 12) {
    b.ua(r1, 1);
    b.uz(r1, 1, z0);
    b.row_run(r1, 1, 2);
    b.uz(r1, 2, z1);
    b.uz(r1, -2, z0);
    b.row_run(r1, -2, -1);
    b.ub(r1, -1);

    b.uz(r2, 7, z1);
    b.row_run(r2, 7, 8);
    b.uz(r2, 8, z2);
    b.row_run(r2, 8, -2);
    b.uz(r2, -2, z1);
    b.row_run(r2, -2, -1);
    b.ub(r2, -1);

    b.ua(r3, 1);
    b.uz(r3, 1, z2);
    b.row_run(r3, 1, 2);
    b.uz(r3, 2, z3);
    b.uz(r3, 5, z2);
    b.row_run(r3, 5, 6);
    b.uz(r3, 6, z3);
  } else {
    throw InputError("B9 template needs wall width >= 12");
  }
}

}  // namespace

PlacedTemplate place_b8_chunk(const ExteriorBrickHost& host, int chunk,
                              int chunks_total) {
  const CondensedWall& w = host.wall;
  if (w.size < 3 * chunks_total || chunk < 1 || chunk > chunks_total)
    throw InputError("B8 chunk placement out of range");
  if (host.fold < chunks_total)
    throw InputError("exterior brick fold too small for the chunk count");
  EdgeListBuilder b(w);
  int off = 3 * (chunk - 1);
  b8_wall_edges(b, off, w.width());

  int copy = chunk - 1;
  for (int i = 0; i < 6; ++i) {
    b.edges.emplace_back(host.hex[i], host.hex_mid(i, copy));
    b.edges.emplace_back(host.hex_mid(i, copy), host.hex[(i + 1) % 6]);
  }
  auto col_c = [&](int t) {
    int rho = (t - 1) / 3 + 1;
    return connector_col(9, chunk, rho, chunks_total, true);
  };
  auto col_d = [&](int t) {
    int rho = (t - 1) / 3 + 1;
    return connector_col(9, chunk, rho, chunks_total, false);
  };
  // hex corner 2 -> c -> chunk top bottleneck
  std::vector<VertexId> cpath{host.hex[2], host.attach_mid(2, copy), w.c()};
  auto rise = bottleneck_connector(w, 0, off, col_c);
  cpath.insert(cpath.end(), rise.begin() + 1, rise.end());
  append_path_edges(b.edges, cpath);
  // hex corner 1 -> b
  b.edges.emplace_back(host.hex[1], host.attach_mid(1, copy));
  b.edges.emplace_back(host.attach_mid(1, copy), w.b);
  // hex corner 0 -> d -> chunk bottom bottleneck
  std::vector<VertexId> dpath{host.hex[0], host.attach_mid(0, copy), w.d()};
  auto sink = bottleneck_connector(w, w.size, off + 3, col_d);
  dpath.insert(dpath.end(), sink.begin() + 1, sink.end());
  append_path_edges(b.edges, dpath);

  return extract(host.graph, BrickWallId::B8, b.edges, {w.d(), w.b, w.c()});
}

PlacedTemplate place_b9_chunk(const ExteriorB2Host& host, int chunk,
                              int chunks_total) {
  const CondensedWall& w = host.wall;
  if (w.size < 3 * chunks_total || chunk < 1 || chunk > chunks_total)
    throw InputError("B9 chunk placement out of range");
  if (host.fold < chunks_total)
    throw InputError("exterior fold too small for the chunk count");
  EdgeListBuilder b(w);
  int off = 3 * (chunk - 1);
  b9_wall_edges(b, off, w.width());

  int copy = chunk - 1;
  for (int i = 0; i < 6; ++i) {
    b.edges.emplace_back(host.ring[i], host.ring_mid(i, copy));
    b.edges.emplace_back(host.ring_mid(i, copy), host.ring[(i + 1) % 6]);
  }
  std::vector<VertexId> second{host.ring[5], host.tail[0], host.tail[1],
                               host.tail[2], host.tail[3], host.ring[0]};
  for (int i = 0; i + 1 < (int)second.size(); ++i) {
    b.edges.emplace_back(second[i], host.tail_mid(i, copy));
    b.edges.emplace_back(host.tail_mid(i, copy), second[i + 1]);
  }

  auto col_c = [&](int t) {
    int rho = (t - 1) / 3 + 1;
    return connector_col(9, chunk, rho, chunks_total, true);
  };
  auto col_d = [&](int t) {
    int rho = (t - 1) / 3 + 1;
    return connector_col(9, chunk, rho, chunks_total, false);
  };
  // c attachment: ring[1] - mid - c - connector to chunk top
  std::vector<VertexId> cpath{host.ring[1], host.attach_mid(TerminalName::C, copy),
                              w.c()};
  auto rise = bottleneck_connector(w, 0, off, col_c);
  cpath.insert(cpath.end(), rise.begin() + 1, rise.end());
  append_path_edges(b.edges, cpath);
  // b attachment
  b.edges.emplace_back(host.ring[2], host.attach_mid(TerminalName::B, copy));
  b.edges.emplace_back(host.attach_mid(TerminalName::B, copy), w.b);
  // a attachment
  b.edges.emplace_back(host.tail[3], host.attach_mid(TerminalName::A, copy));
  b.edges.emplace_back(host.attach_mid(TerminalName::A, copy), w.a);
  // d attachment: tail[2] - mid - d - connector to chunk bottom
  std::vector<VertexId> dpath{host.tail[2], host.attach_mid(TerminalName::D, copy),
                              w.d()};
  auto sink = bottleneck_connector(w, w.size, off + 3, col_d);
  dpath.insert(dpath.end(), sink.begin() + 1, sink.end());
  append_path_edges(b.edges, dpath);

  return extract(host.graph, BrickWallId::B9, b.edges,
                 {w.a, w.b, w.c(), w.d()});
}

}  // namespace wallcheck
