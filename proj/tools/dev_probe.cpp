// Scratch probe used while developing; not installed.
#include <chrono>
#include <iostream>

#include "wallcheck/embedding.hpp"
#include "wallcheck/figures.hpp"
#include "wallcheck/generators.hpp"
#include "wallcheck/util.hpp"

using namespace wallcheck;

static const char* outcome_name(SearchOutcome o) {
  switch (o) {
    case SearchOutcome::Found: return "found";
    case SearchOutcome::None: return "none";
    case SearchOutcome::BudgetExceeded: return "budget";
  }
  return "?";
}

// Pretty-print a host vertex of a condensed-wall-based host.
static std::string vname(const CondensedWall& w, const LabeledGraph& g, VertexId v) {
  Role r = g.role(v);
  switch (r.kind) {
    case RoleKind::Terminal: return std::string(1, terminal_letter(r.which));
    case RoleKind::Bottleneck: return "z" + std::to_string(r.index);
    case RoleKind::RowVertex:
      return "u(" + std::to_string(r.layer) + "," + std::to_string(r.position) + ")";
    case RoleKind::SubdivisionVertex:
      return "mid[" + vname(w, g, r.origin.u) + "-" + vname(w, g, r.origin.v) + "]#" +
             std::to_string(v);
    default: return "x" + std::to_string(v);
  }
}

static void show_witness(const CondensedWall& w, const LabeledGraph& host,
                         const Embedding& emb) {
  std::cout << "  witness paths:\n";
  for (const auto& [pe, path] : emb.path_map) {
    std::cout << "    " << pe.u << "-" << pe.v << ": ";
    for (VertexId v : path.verts) std::cout << vname(w, host, v) << " ";
    std::cout << "\n";
  }
}

int main(int argc, char** argv) {
  std::string what = argc > 1 ? argv[1] : "counts";
  auto t0 = std::chrono::steady_clock::now();
  auto elapsed = [&] {
    auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                  std::chrono::steady_clock::now() - t0)
                  .count();
    return std::to_string(ms) + "ms";
  };

  if (what == "counts") {
    for (int r = 1; r <= 8; ++r) {
      auto w = gen_condensed_wall({r, true});
      auto wm = gen_condensed_wall({r, false});
      std::cout << "W(" << r << "): " << w.graph.vertex_count() << "/"
                << w.graph.edge_count() << "  W-: " << wm.graph.vertex_count()
                << "/" << wm.graph.edge_count() << "\n";
    }
    auto wall = gen_elementary_wall(6, 4);
    int outer = 0;
    for (auto& b : wall.cert.bricks) outer += b.outer;
    std::cout << "wall(6,4): v=" << wall.graph.vertex_count()
              << " e=" << wall.graph.edge_count()
              << " bricks=" << wall.cert.bricks.size() << " outer=" << outer
              << "\n";
    auto w88 = gen_elementary_wall(8, 8);
    std::cout << "wall(8,8): v=" << w88.graph.vertex_count() << "\n";
    auto bw = gen_brick_wall(BrickWallId::B7);
    int bouter = 0;
    for (auto& b : bw.cert.bricks) bouter += b.outer;
    std::cout << "B7: v=" << bw.graph.vertex_count() << " e=" << bw.graph.edge_count()
              << " bricks=" << bw.cert.bricks.size() << " outer=" << bouter << "\n";
    for (auto id : {BrickWallId::B2, BrickWallId::B4, BrickWallId::B6,
                    BrickWallId::B8, BrickWallId::B9, BrickWallId::B10}) {
      auto g = gen_brick_wall(id);
      std::cout << brick_wall_name(id) << ": v=" << g.graph.vertex_count()
                << " e=" << g.graph.edge_count() << " 2conn="
                << is_biconnected(g.graph) << "\n";
    }
  } else if (what == "b1cycle") {
    auto b1 = gen_brick_wall(BrickWallId::B1);
    int count = 0;
    auto stats = enumerate_embeddings(b1.graph, b1.graph, {},
                                      [&](const Embedding&) {
                                        ++count;
                                        return true;
                                      });
    std::cout << "B1 in 6-cycle: " << count << " exhausted=" << stats.exhausted
              << "\n";
  } else if (what == "b3") {
    auto w = gen_condensed_wall({6, false});
    auto b3 = gen_brick_wall(BrickWallId::B3);
    SearchConstraints c;
    c.forbidden = {w.a, w.b};
    auto res = find_topological_minor(w.graph, b3.graph, c);
    std::cout << "B3 in W-(6)-{a,b}: " << outcome_name(res.outcome) << " nodes="
              << res.stats.nodes << " " << elapsed() << "\n";
    if (res.witness) show_witness(w, w.graph, *res.witness);
  } else if (what == "fig5") {
    auto w = gen_condensed_wall({6, false});
    auto t = place_b3_in_layer(w, 1);
    std::cout << "fig5 ok, " << elapsed() << "\n";
    show_witness(w, w.graph, t.embedding);
  } else if (what == "fig8") {
    auto w = gen_condensed_wall({6, false});
    auto t = place_b6_in_layers(w, 1);
    std::cout << "fig8 ok, " << elapsed() << "\n";
  } else if (what == "fig10") {
    auto host = gen_wall_with_cd_paths(5, 1, true);
    auto t = place_b7_chunk(host, 1, 1);
    std::cout << "fig10 ok, " << elapsed() << "\n";
  } else if (what == "linkage") {
    for (int r = 2; r <= 3; ++r) {
      auto w = gen_condensed_wall({r, true});
      auto lk = find_linkage(w.graph);
      std::cout << "W(" << r << ") linkage: " << outcome_name(lk.outcome)
                << " nodes=" << lk.stats.nodes << "\n";
      auto two = find_two_edge_disjoint_linkages(w.graph, 200'000'000);
      std::cout << "W(" << r << ") two-linkages: " << outcome_name(two.outcome)
                << " nodes=" << two.stats.nodes << " " << elapsed() << "\n";
    }
  } else if (what == "b6narrow") {
    auto w = gen_condensed_wall({3, false});
    auto b6 = gen_brick_wall(BrickWallId::B6);
    auto res = find_topological_minor(w.graph, b6.graph, {});
    std::cout << "B6 in W-(3): " << outcome_name(res.outcome)
              << " nodes=" << res.stats.nodes << " " << elapsed() << "\n";
    if (res.witness) show_witness(w, w.graph, *res.witness);
  } else if (what == "b8narrow") {
    auto host = gen_wall_with_exterior_brick(3, 1);
    auto b8 = gen_brick_wall(BrickWallId::B8);
    auto res = find_topological_minor(host.graph, b8.graph, {});
    std::cout << "B8 in W-(3)+brick: " << outcome_name(res.outcome)
              << " nodes=" << res.stats.nodes << " " << elapsed() << "\n";
    if (res.witness) show_witness(host.wall, host.graph, *res.witness);
  } else if (what == "b8pin") {
    auto host = gen_wall_with_exterior_brick(3, 1);
    auto b8 = gen_brick_wall(BrickWallId::B8);
    // the petal with three consecutive degree-3 corners goes to the
    // exterior hexagon
    VertexId p_a = b8.at.at({3, -3}), p_b = b8.at.at({3, -1}),
             p_c = b8.at.at({4, 0});
    SearchConstraints c;
    c.node_budget = 2'000'000'000;
    std::vector<VertexId> hx{host.hex[0], host.hex[1], host.hex[2]};
    c.domains[p_a] = hx;
    c.domains[p_b] = hx;
    c.domains[p_c] = hx;
    auto res = find_topological_minor(host.graph, b8.graph, c);
    std::cout << "B8 pinned in W-(3)+brick: " << outcome_name(res.outcome)
              << " nodes=" << res.stats.nodes << " " << elapsed() << "\n";
    if (res.witness) show_witness(host.wall, host.graph, *res.witness);
  } else if (what == "b9pin") {
    auto host = gen_wall_with_exterior_b2(3, 1);
    auto b9 = gen_brick_wall(BrickWallId::B9);
    // NE2 and SE2 petals carry four degree-3 corners matching the exterior
    // two-brick attachment; let the search place them on the ring/tail.
    SearchConstraints c;
    c.node_budget = 2'000'000'000;
    std::vector<VertexId> ringish{host.ring[0], host.ring[1], host.ring[2],
                                  host.ring[3], host.ring[4], host.ring[5],
                                  host.tail[0], host.tail[1], host.tail[2],
                                  host.tail[3]};
    for (auto pc : {std::pair{3, -3}, {3, -1}, {4, 0}, {3, 3}, {3, 5}, {4, 2}}) {
      auto it = b9.at.find({pc.first, pc.second});
      if (it != b9.at.end() && b9.graph.degree(it->second) == 3)
        c.domains[it->second] = ringish;
    }
    auto res = find_topological_minor(host.graph, b9.graph, c);
    std::cout << "B9 pinned in W-(3)+B2: " << outcome_name(res.outcome)
              << " nodes=" << res.stats.nodes << " " << elapsed() << "\n";
    if (res.witness) show_witness(host.wall, host.graph, *res.witness);
  } else if (what == "b9narrow") {
    auto host = gen_wall_with_exterior_b2(3, 1);
    auto b9 = gen_brick_wall(BrickWallId::B9);
    auto res = find_topological_minor(host.graph, b9.graph, {});
    std::cout << "B9 in W-(3)+B2: " << outcome_name(res.outcome)
              << " nodes=" << res.stats.nodes << " " << elapsed() << "\n";
    if (res.witness) show_witness(host.wall, host.graph, *res.witness);
  } else if (what == "nob4") {
    for (int r = 2; r <= 3; ++r) {
      auto w = gen_condensed_wall({r, true});
      auto b4 = gen_brick_wall(BrickWallId::B4);
      SearchConstraints c;
      c.forbidden = {w.a, w.b};
      c.node_budget = 1'000'000'000;
      auto res = find_topological_minor(w.graph, b4.graph, c);
      std::cout << "B4 in W(" << r << ")-{a,b}: " << outcome_name(res.outcome)
                << " nodes=" << res.stats.nodes << " " << elapsed() << "\n";
    }
  } else if (what == "nob7") {
    for (int r = 2; r <= 3; ++r) {
      auto w = gen_condensed_wall({r, true});
      auto b7 = gen_brick_wall(BrickWallId::B7);
      SearchConstraints c;
      c.node_budget = 1'000'000'000;
      auto res = find_topological_minor(w.graph, b7.graph, c);
      std::cout << "B7 in W(" << r << "): " << outcome_name(res.outcome)
                << " nodes=" << res.stats.nodes << " " << elapsed() << "\n";
    }
  } else if (what == "orient") {
    auto wall = gen_wall({6, 4, {}});
    auto te = pick_terminal_edges(wall);
    std::cout << "e1=" << te.e1.u << "-" << te.e1.v << " e2=" << te.e2.u << "-"
              << te.e2.v << " " << elapsed() << "\n";
    auto gs = build_gstar({{6, 4, {}}, 2, {}, 400'000'000});
    std::cout << "gstar built: v=" << gs.graph.vertex_count()
              << " e=" << gs.graph.edge_count() << " " << elapsed() << "\n";
  } else if (what == "b2b3") {
    auto b3 = gen_brick_wall(BrickWallId::B3);
    auto b2 = gen_brick_wall(BrickWallId::B2);
    std::set<std::set<VertexId>> images;
    enumerate_embeddings(b3.graph, b2.graph, {}, [&](const Embedding& e) {
      images.insert(e.image_vertices());
      return true;
    });
    std::cout << "distinct B2 images in B3: " << images.size() << "\n";
    auto b4 = gen_brick_wall(BrickWallId::B4);
    std::set<std::set<VertexId>> im2;
    enumerate_embeddings(b4.graph, b3.graph, {}, [&](const Embedding& e) {
      im2.insert(e.image_vertices());
      return true;
    });
    std::cout << "distinct B3 images in B4: " << im2.size() << "\n";
    auto b5 = gen_brick_wall(BrickWallId::B5);
    std::set<std::set<VertexId>> im3;
    enumerate_embeddings(b5.graph, b3.graph, {}, [&](const Embedding& e) {
      im3.insert(e.image_vertices());
      return true;
    });
    std::cout << "distinct B3 images in B5: " << im3.size() << " " << elapsed()
              << "\n";
  }
  return 0;
}
