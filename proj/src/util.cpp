#include "wallcheck/util.hpp"

#include <algorithm>
#include <bit>
#include <map>
#include <thread>

namespace wallcheck {

std::size_t Bitset::count() const {
  std::size_t c = 0;
  for (auto x : w_) c += std::popcount(x);
  return c;
}

std::vector<std::vector<VertexId>> connected_components(const LabeledGraph& g) {
  std::set<VertexId> todo;
  for (VertexId v : g.vertices()) todo.insert(v);
  std::vector<std::vector<VertexId>> comps;
  while (!todo.empty()) {
    VertexId s = *todo.begin();
    std::vector<VertexId> stack{s}, comp;
    todo.erase(s);
    while (!stack.empty()) {
      VertexId v = stack.back();
      stack.pop_back();
      comp.push_back(v);
      for (VertexId w : g.neighbors(v))
        if (todo.erase(w)) stack.push_back(w);
    }
    std::sort(comp.begin(), comp.end());
    comps.push_back(std::move(comp));
  }
  return comps;
}

bool is_connected(const LabeledGraph& g) {
  return g.vertex_count() <= 1 || connected_components(g).size() == 1;
}

bool connected_avoiding(const LabeledGraph& g, VertexId u, VertexId v,
                        const std::set<VertexId>& removed) {
  if (removed.count(u) || removed.count(v)) return false;
  if (u == v) return true;
  std::set<VertexId> seen{u};
  std::vector<VertexId> stack{u};
  while (!stack.empty()) {
    VertexId x = stack.back();
    stack.pop_back();
    for (VertexId w : g.neighbors(x)) {
      if (w == v) return true;
      if (removed.count(w) || !seen.insert(w).second) continue;
      stack.push_back(w);
    }
  }
  return false;
}

namespace {

struct BlockFinder {
  const LabeledGraph& g;
  std::map<VertexId, int> num, low;
  int counter = 0;
  std::vector<Edge> estack;
  std::vector<std::vector<VertexId>> out;

  explicit BlockFinder(const LabeledGraph& gr) : g(gr) {}

  void pop_block(Edge until) {
    std::set<VertexId> verts;
    while (true) {
      Edge e = estack.back();
      estack.pop_back();
      verts.insert(e.u);
      verts.insert(e.v);
      if (e == until) break;
    }
    out.emplace_back(verts.begin(), verts.end());
  }

  void dfs(VertexId v, VertexId parent, bool has_parent) {
    num[v] = low[v] = counter++;
    for (VertexId w : g.neighbors(v)) {
      if (!num.count(w)) {
        estack.push_back(Edge(v, w));
        dfs(w, v, true);
        low[v] = std::min(low[v], low[w]);
        if (low[w] >= num[v]) pop_block(Edge(v, w));
      } else if ((!has_parent || w != parent) && num[w] < num[v]) {
        estack.push_back(Edge(v, w));
        low[v] = std::min(low[v], num[w]);
      }
    }
  }
};

}  // namespace

std::vector<std::vector<VertexId>> blocks(const LabeledGraph& g) {
  BlockFinder bf(g);
  for (VertexId v : g.vertices())
    if (!bf.num.count(v)) bf.dfs(v, 0, false);
  std::sort(bf.out.begin(), bf.out.end());
  return bf.out;
}

bool is_biconnected(const LabeledGraph& g) {
  if (g.vertex_count() < 3) return false;
  auto bs = blocks(g);
  return bs.size() == 1 && bs[0].size() == g.vertex_count();
}

int max_vertex_disjoint_paths(const LabeledGraph& g,
                              const std::vector<VertexId>& sources,
                              const std::vector<VertexId>& sinks,
                              const std::function<int(VertexId)>& cap) {
  // Node splitting: v -> (v_in, v_out) with capacity cap(v); edges get
  // capacity 1 each way. Unit-capacity BFS augmentation.
  std::vector<VertexId> ids = g.vertices();
  std::map<VertexId, int> idx;
  for (std::size_t i = 0; i < ids.size(); ++i) idx[ids[i]] = (int)i;
  int n = (int)ids.size();
  int S = 2 * n, T = 2 * n + 1, N = 2 * n + 2;

  struct Arc {
    int to, cap;
    std::size_t rev;
  };
  std::vector<std::vector<Arc>> adj(N);
  auto arc = [&](int a, int b, int c) {
    adj[a].push_back({b, c, adj[b].size()});
    adj[b].push_back({a, 0, adj[a].size() - 1});
  };
  auto in = [&](int i) { return 2 * i; };
  auto out = [&](int i) { return 2 * i + 1; };

  for (int i = 0; i < n; ++i) arc(in(i), out(i), cap(ids[i]));
  for (Edge e : g.edges()) {
    arc(out(idx[e.u]), in(idx[e.v]), 1);
    arc(out(idx[e.v]), in(idx[e.u]), 1);
  }
  std::set<VertexId> sinkset(sinks.begin(), sinks.end());
  for (VertexId s : sources) arc(S, in(idx[s]), 1);
  for (VertexId t : sinks) arc(out(idx[t]), T, sources.size());

  int flow = 0;
  while (true) {
    std::vector<std::pair<int, std::size_t>> pre(N, {-1, 0});
    std::vector<int> q{S};
    pre[S] = {S, 0};
    for (std::size_t qi = 0; qi < q.size() && pre[T].first < 0; ++qi) {
      int v = q[qi];
      for (std::size_t ai = 0; ai < adj[v].size(); ++ai) {
        const Arc& a = adj[v][ai];
        if (a.cap > 0 && pre[a.to].first < 0) {
          pre[a.to] = {v, ai};
          q.push_back(a.to);
          if (a.to == T) break;
        }
      }
    }
    if (pre[T].first < 0) break;
    for (int v = T; v != S;) {
      auto [p, ai] = pre[v];
      adj[p][ai].cap -= 1;
      adj[v][adj[p][ai].rev].cap += 1;
      v = p;
    }
    ++flow;
  }
  return flow;
}

void parallel_for(std::size_t n, int workers,
                  const std::function<void(std::size_t)>& fn) {
  if (workers <= 1 || n <= 1) {
    for (std::size_t i = 0; i < n; ++i) fn(i);
    return;
  }
  std::size_t w = std::min<std::size_t>(workers, n);
  std::vector<std::thread> threads;
  threads.reserve(w);
  for (std::size_t t = 0; t < w; ++t) {
    threads.emplace_back([&, t] {
      for (std::size_t i = t; i < n; i += w) fn(i);
    });
  }
  for (auto& th : threads) th.join();
}

}  // namespace wallcheck
