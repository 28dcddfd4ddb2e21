#include "henon/minsets.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>

namespace henon {

namespace {

C2Point random_in_ball(CounterRng& rng, double radius) {
  for (;;) {
    const double a = rng.symmetric(), b = rng.symmetric(), c = rng.symmetric(), d = rng.symmetric();
    if (a * a + b * b + c * c + d * d <= 1.0) return {Complex(radius * a, radius * b), Complex(radius * c, radius * d)};
  }
}

// A point whose orbit under h alone reaches V_R+ cannot lie in a bounded
// set invariant under the semigroup.
bool escapes_under(const HenonMap& h, C2Point w, double R, int steps) {
  for (int k = 0; k < steps; ++k) {
    if (in_v_plus(w, R) || !is_finite(w)) return true;
    w = h.apply(w);
  }
  return in_v_plus(w, R) || !is_finite(w);
}

struct UnionFind {
  std::vector<int> parent;
  explicit UnionFind(std::size_t n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
  int find(int a) {
    while (parent[a] != a) a = parent[a] = parent[parent[a]];
    return a;
  }
  void unite(int a, int b) {
    a = find(a);
    b = find(b);
    if (a != b) parent[std::max(a, b)] = std::min(a, b);
  }
};

// Single-linkage components at radius eps; component ids ordered by smallest member.
std::vector<int> components(const CloudIndex& idx, double eps, int* count) {
  UnionFind uf(idx.size());
  for (std::size_t i = 0; i < idx.size(); ++i) {
    for (int j : idx.all_within(idx[i], eps)) uf.unite(static_cast<int>(i), j);
  }
  std::vector<int> comp(idx.size(), -1), root_id(idx.size(), -1);
  int n = 0;
  for (std::size_t i = 0; i < idx.size(); ++i) {
    const int r = uf.find(static_cast<int>(i));
    if (root_id[r] < 0) root_id[r] = n++;
    comp[i] = root_id[r];
  }
  *count = n;
  return comp;
}

// Iterative Tarjan; SCC ids come out in reverse topological order.
std::vector<int> strongly_connected(const std::vector<std::vector<int>>& adj, int* count) {
  const int n = static_cast<int>(adj.size());
  std::vector<int> index(n, -1), low(n, 0), scc(n, -1), stack;
  std::vector<char> on_stack(n, 0);
  std::vector<std::pair<int, std::size_t>> call;
  int next = 0, nscc = 0;
  for (int s = 0; s < n; ++s) {
    if (index[s] >= 0) continue;
    call.push_back({s, 0});
    index[s] = low[s] = next++;
    stack.push_back(s);
    on_stack[s] = 1;
    while (!call.empty()) {
      auto& [v, e] = call.back();
      if (e < adj[v].size()) {
        const int w = adj[v][e++];
        if (index[w] < 0) {
          index[w] = low[w] = next++;
          stack.push_back(w);
          on_stack[w] = 1;
          call.push_back({w, 0});
        } else if (on_stack[w]) {
          low[v] = std::min(low[v], index[w]);
        }
        continue;
      }
      if (low[v] == index[v]) {
        for (;;) {
          const int w = stack.back();
          stack.pop_back();
          on_stack[w] = 0;
          scc[w] = nscc;
          if (w == v) break;
        }
        ++nscc;
      }
      const int done = v;
      call.pop_back();
      if (!call.empty()) low[call.back().first] = std::min(low[call.back().first], low[done]);
    }
  }
  *count = nscc;
  return scc;
}

void dedupe(std::vector<int>& v) {
  std::sort(v.begin(), v.end());
  v.erase(std::unique(v.begin(), v.end()), v.end());
}

struct SubclusterGraph {
  std::vector<int> comp;  // cloud index -> component
  std::vector<std::vector<int>> adj;
  std::vector<char> leaks;  // component has an image in V_R+ or off the cloud
};

SubclusterGraph build_subcluster_graph(const std::vector<C2Point>& cloud, const std::vector<HenonMap>& support,
                                       double eps, double R) {
  CloudIndex idx(eps);
  for (const auto& p : cloud) idx.add(p);
  std::unique_ptr<CloudIndex> coarse;
  // Any point within eps/2 of an image shares its component; wider matches
  // fall back to the nearest point within 2 eps.
  auto match = [&](const C2Point& q) {
    const int j = idx.first_within(q, 0.5 * eps);
    if (j >= 0) return j;
    if (!coarse) {
      coarse = std::make_unique<CloudIndex>(2.0 * eps);
      for (const auto& p : cloud) coarse->add(p);
    }
    return coarse->nearest_within(q, 2.0 * eps);
  };
  SubclusterGraph g;
  int n = 0;
  g.comp = components(idx, eps, &n);
  g.adj.assign(static_cast<size_t>(n), {});
  g.leaks.assign(static_cast<size_t>(n), 0);
  for (std::size_t i = 0; i < cloud.size(); ++i) {
    const int c = g.comp[i];
    for (const auto& h : support) {
      const C2Point q = h.apply(cloud[i]);
      const int j = is_finite(q) && !in_v_plus(q, R) ? match(q) : -1;
      if (j < 0) {
        g.leaks[c] = 1;
        continue;
      }
      g.adj[c].push_back(g.comp[j]);
    }
  }
  for (auto& a : g.adj) dedupe(a);
  return g;
}

double cloud_gap(const std::vector<C2Point>& a, const CloudIndex& b, double cap) {
  double best = cap;
  for (const auto& p : a) {
    const int j = b.nearest_within(p, best);
    if (j >= 0) best = distance(p, b[j]);
  }
  return best;
}

// Probes started within r of the cloud must stay within 2r and end the dwell
// window back within r.
bool probes_stay(const std::shared_ptr<const MapDistribution>& shared, const MinimalSetDescriptor& L, double r,
                 SequenceSeed seed) {
  CloudIndex idx(2.0 * r);
  for (const auto& p : L.cloud) idx.add(p);
  constexpr int kProbes = 64;
  for (int k = 0; k < kProbes; ++k) {
    CounterRng rng(seed, static_cast<std::uint64_t>(k), RngDomain::probe);
    const auto& c = L.cloud[static_cast<size_t>(rng.next() % L.cloud.size())];
    C2Point w = c + random_in_ball(rng, r);
    if (!idx.any_within(w, r)) continue;
    const MapSequence seq = MapSequence::sampled(shared, derive_stream(seed, static_cast<std::uint64_t>(k)));
    for (int s = 0; s < kCaptureDwell; ++s) {
      w = seq.at(static_cast<std::uint64_t>(s)).apply(w);
      if (!is_finite(w) || !idx.any_within(w, 2.0 * r)) return false;
    }
    if (!idx.any_within(w, r)) return false;
  }
  return true;
}

}  // namespace

int digraph_period(const std::vector<std::vector<int>>& adj, std::vector<int>* level) {
  const int n = static_cast<int>(adj.size());
  if (n == 0) return 0;
  auto bfs = [n](const std::vector<std::vector<int>>& g, std::vector<int>& dist) {
    dist.assign(static_cast<size_t>(n), -1);
    std::vector<int> queue{0};
    dist[0] = 0;
    for (std::size_t h = 0; h < queue.size(); ++h) {
      const int v = queue[h];
      for (int w : g[v]) {
        if (dist[w] < 0) {
          dist[w] = dist[v] + 1;
          queue.push_back(w);
        }
      }
    }
    return std::all_of(dist.begin(), dist.end(), [](int d) { return d >= 0; });
  };
  std::vector<std::vector<int>> rev(static_cast<size_t>(n));
  for (int v = 0; v < n; ++v) {
    for (int w : adj[v]) rev[w].push_back(v);
  }
  std::vector<int> lvl, back;
  if (!bfs(adj, lvl) || !bfs(rev, back)) return 0;
  int g = 0;
  for (int v = 0; v < n; ++v) {
    for (int w : adj[v]) g = std::gcd(g, std::abs(lvl[v] + 1 - lvl[w]));
  }
  if (g == 0) g = 1;
  if (level) {
    level->resize(static_cast<size_t>(n));
    for (int v = 0; v < n; ++v) (*level)[v] = lvl[v] % g;
  }
  return g;
}

int detect_period(const MapDistribution& dist, MinimalSetDescriptor& L, double cluster_eps, int support_samples,
                  SequenceSeed seed) {
  if (L.is_infinity()) throw LabError(ErrorCode::invalid_argument, "detect_period needs a finite minimal set");
  if (L.cloud.empty()) throw LabError(ErrorCode::empty_set, "minimal set cloud is empty");
  const double R = dist.filtration().R;
  const auto support = support_sample(dist, static_cast<std::size_t>(support_samples), seed);
  const SubclusterGraph g = build_subcluster_graph(L.cloud, support, cluster_eps, R);
  if (std::any_of(g.leaks.begin(), g.leaks.end(), [](char c) { return c != 0; })) {
    throw LabError(ErrorCode::not_minimal, "cloud is not invariant under the support sample");
  }
  std::vector<int> level;
  const int period = digraph_period(g.adj, &level);
  if (period == 0) throw LabError(ErrorCode::not_minimal, "sub-cluster digraph is not strongly connected");
  L.period = period;
  L.parts.assign(static_cast<size_t>(period), {});
  for (std::size_t i = 0; i < L.cloud.size(); ++i) L.parts[level[g.comp[i]]].push_back(static_cast<int>(i));
  return period;
}

ContractionReport certify_attracting(const MapDistribution& dist, const MinimalSetDescriptor& L, int probes, int n,
                                     SequenceSeed seed) {
  if (L.is_infinity() || L.cloud.empty()) {
    throw LabError(ErrorCode::invalid_argument, "certify_attracting needs a finite minimal set");
  }
  if (probes < 1 || n < 1) throw LabError(ErrorCode::invalid_argument, "probes and n must be positive");
  const auto shared = std::make_shared<const MapDistribution>(dist);
  const double R = dist.filtration().R;
  const double rad = L.capture_radius > 0.0 ? 0.5 * L.capture_radius : 1e-3;
  std::vector<double> ratio(static_cast<size_t>(probes), -1.0);
#pragma omp parallel for schedule(dynamic, 1)
  for (int k = 0; k < probes; ++k) {
    const SequenceSeed s = derive_stream(seed, static_cast<std::uint64_t>(k));
    CounterRng rng(s, 0, RngDomain::probe);
    const auto& c = L.cloud[static_cast<size_t>(rng.next() % L.cloud.size())];
    C2Point a = c + random_in_ball(rng, rad);
    C2Point b = c + random_in_ball(rng, rad);
    const double d0 = distance(a, b);
    if (d0 < 1e-12) continue;
    const MapSequence seq = MapSequence::sampled(shared, s);
    double d = d0;
    int j = 0;
    while (j < n) {
      const HenonMap f = seq.at(static_cast<std::uint64_t>(j));
      a = f.apply(a);
      b = f.apply(b);
      ++j;
      if (!is_finite(a) || !is_finite(b)) {
        d = std::numeric_limits<double>::infinity();
        break;
      }
      d = distance(a, b);
      if (in_v_plus(a, R) || in_v_plus(b, R)) break;
      // Below this the separation is rounding noise.
      if (d < 1e-12 * (1.0 + norm(a))) break;
    }
    ratio[k] = std::pow(d / d0, 1.0 / j);
  }
  ContractionReport rep;
  for (double r : ratio) {
    if (r < 0.0) continue;
    rep.ratio = std::max(rep.ratio, r);
    ++rep.pairs_used;
  }
  rep.certified = rep.pairs_used > 0 && rep.ratio < 1.0 - 1e-3;
  return rep;
}

DiscoveryResult discover_minimal_sets(const MapDistribution& dist, const FiltrationParams& params,
                                      const std::vector<C2Point>& grid, const DiscoveryParams& dp, SequenceSeed seed) {
  if (grid.empty()) throw LabError(ErrorCode::invalid_argument, "discovery grid is empty");
  if (dp.burn_in < 1000) throw LabError(ErrorCode::invalid_argument, "burn_in must be >= 1000");
  if (dp.n_record < 1) throw LabError(ErrorCode::invalid_argument, "n_record must be >= 1");
  if (!(dp.cluster_eps > 0.0)) throw LabError(ErrorCode::invalid_argument, "cluster_eps must be positive");
  const double R = params.R;
  const double eps = dp.cluster_eps;
  const auto shared = std::make_shared<const MapDistribution>(dist);

  // Random orbits from the grid; survivors contribute their recorded tails.
  const int ng = static_cast<int>(grid.size());
  std::vector<std::vector<C2Point>> tails(static_cast<size_t>(ng));
#pragma omp parallel for schedule(dynamic, 1)
  for (int gi = 0; gi < ng; ++gi) {
    const MapSequence seq = MapSequence::sampled(shared, derive_stream(seed, static_cast<std::uint64_t>(gi)));
    C2Point w = grid[gi];
    std::vector<C2Point> rec;
    bool escaped = false;
    for (int k = 0; k < dp.burn_in + dp.n_record; ++k) {
      w = seq.at(static_cast<std::uint64_t>(k)).apply(w);
      if (!is_finite(w) || in_v_plus(w, R)) {
        escaped = true;
        break;
      }
      if (k >= dp.burn_in) {
        if (!in_box(w, R)) {
          escaped = true;
          break;
        }
        rec.push_back(w);
      }
    }
    if (!escaped) tails[gi] = std::move(rec);
  }

  DiscoveryResult out;
  CloudIndex net(eps);
  for (const auto& t : tails) {
    if (t.empty()) {
      ++out.grid_escaped;
      continue;
    }
    ++out.grid_bounded;
    for (const auto& p : t) {
      if (!net.any_within(p, 0.5 * eps)) net.add(p);
    }
  }

  MinimalSetDescriptor inf;
  inf.id = kInfinityId;
  inf.certified = true;
  if (net.size() == 0) {
    out.sets.push_back(inf);
    return out;
  }

  // Saturate the eps/2-net under the support sample by frontier expansion.
  const auto support = support_sample(dist, static_cast<std::size_t>(dp.support_samples), seed);
  std::vector<char> leaky(net.size(), 0);
  std::vector<int> frontier(net.size());
  std::iota(frontier.begin(), frontier.end(), 0);
  bool overflow = false;
  int round = 0;
  for (; round < dp.max_rounds && !frontier.empty() && !overflow; ++round) {
    std::vector<int> next;
    for (int p : frontier) {
      if (overflow) break;
      for (const auto& h : support) {
        const C2Point q = h.apply(net[static_cast<size_t>(p)]);
        if (!is_finite(q) || in_v_plus(q, R)) {
          leaky[p] = 1;
          continue;
        }
        if (net.any_within(q, 0.5 * eps)) continue;
        if (escapes_under(h, q, R, 64)) {
          leaky[p] = 1;
          continue;
        }
        if (net.size() >= dp.max_cloud) {
          overflow = true;
          break;
        }
        next.push_back(net.add(q));
        leaky.push_back(0);
      }
    }
    frontier = std::move(next);
  }
  const bool converged = frontier.empty() && !overflow;
  if (!converged) {
    out.issues.push_back({ErrorCode::nonconvergent_cluster,
                          overflow ? "saturation exceeded the cloud size limit"
                                   : "saturation did not close within " + std::to_string(dp.max_rounds) + " rounds"});
  }

  // Component digraph on the saturated net; node ncomp stands for infinity.
  int ncomp = 0;
  const std::vector<int> comp = components(net, eps, &ncomp);
  // Node ncomp + 1 collects images that land outside an unsaturated net.
  std::vector<std::vector<int>> adj(static_cast<size_t>(ncomp) + 2);
  for (std::size_t i = 0; i < net.size(); ++i) {
    const int c = comp[i];
    if (leaky[i]) adj[c].push_back(ncomp);
    for (const auto& h : support) {
      const C2Point q = h.apply(net[i]);
      if (!is_finite(q) || in_v_plus(q, R)) {
        adj[c].push_back(ncomp);
        continue;
      }
      int j = net.first_within(q, 0.5 * eps);
      if (j < 0) j = net.nearest_within(q, eps);
      adj[c].push_back(j >= 0 ? comp[j] : ncomp + 1);
    }
  }
  for (auto& a : adj) dedupe(a);

  int nscc = 0;
  const std::vector<int> scc = strongly_connected(adj, &nscc);
  std::vector<char> bottom(static_cast<size_t>(nscc), 1);
  for (int c = 0; c <= ncomp + 1; ++c) {
    for (int d : adj[c]) {
      if (scc[d] != scc[c]) bottom[scc[c]] = 0;
    }
  }
  bottom[scc[ncomp]] = 0;
  bottom[scc[ncomp + 1]] = 0;

  // Emit bottom SCCs ordered by their smallest net index.
  std::vector<int> first_member(static_cast<size_t>(nscc), -1);
  for (std::size_t i = 0; i < net.size(); ++i) {
    const int s = scc[comp[i]];
    if (first_member[s] < 0) first_member[s] = static_cast<int>(i);
  }
  std::vector<int> order;
  for (int s = 0; s < nscc; ++s) {
    if (bottom[s] && first_member[s] >= 0) order.push_back(s);
  }
  std::sort(order.begin(), order.end(), [&](int a, int b) { return first_member[a] < first_member[b]; });

  std::vector<MinimalSetDescriptor> finite;
  for (int s : order) {
    MinimalSetDescriptor L;
    L.id = static_cast<int>(finite.size());
    L.converged = converged;
    // Local component numbering inside the SCC for the period computation.
    std::vector<int> local(static_cast<size_t>(ncomp), -1);
    int nl = 0;
    for (int c = 0; c < ncomp; ++c) {
      if (scc[c] == s) local[c] = nl++;
    }
    std::vector<std::vector<int>> sub(static_cast<size_t>(nl));
    for (int c = 0; c < ncomp; ++c) {
      if (local[c] < 0) continue;
      for (int d : adj[c]) {
        if (d < ncomp && local[d] >= 0) sub[local[c]].push_back(local[d]);
      }
    }
    std::vector<int> level;
    L.period = std::max(1, digraph_period(sub, &level));
    if (level.empty()) level.assign(static_cast<size_t>(nl), 0);
    L.parts.assign(static_cast<size_t>(L.period), {});
    for (std::size_t i = 0; i < net.size(); ++i) {
      if (scc[comp[i]] != s) continue;
      L.parts[level[local[comp[i]]]].push_back(static_cast<int>(L.cloud.size()));
      L.cloud.push_back(net[i]);
    }
    finite.push_back(std::move(L));
  }

  // Capture radii: at most 0.25 and 0.45 of the gap to the nearest other set.
  std::vector<std::unique_ptr<CloudIndex>> idx;
  for (const auto& L : finite) {
    idx.push_back(std::make_unique<CloudIndex>(0.6));
    for (const auto& p : L.cloud) idx.back()->add(p);
  }
  for (std::size_t a = 0; a < finite.size(); ++a) {
    double gap = 0.25 / 0.45;
    for (std::size_t b = 0; b < finite.size(); ++b) {
      if (a != b) gap = std::min(gap, cloud_gap(finite[a].cloud, *idx[b], gap));
    }
    double r = std::min(0.25, 0.45 * gap);
    const SequenceSeed probe_seed = derive_stream(seed, 0xC0FFEEULL + a);
    while (r > 0.5 * eps && !probes_stay(shared, finite[a], r, probe_seed)) r *= 0.5;
    if (r <= 0.5 * eps) {
      out.issues.push_back({ErrorCode::nonconvergent_cluster,
                            "no trapping capture radius found for set " + std::to_string(a)});
    }
    finite[a].capture_radius = r;
    const ContractionReport c =
        certify_attracting(dist, finite[a], dp.certify_probes, dp.certify_steps, derive_stream(seed, 0xA77ULL + a));
    finite[a].contraction = c.ratio;
    finite[a].certified = c.certified;
  }

  out.sets = std::move(finite);
  out.sets.push_back(inf);
  return out;
}

DiscoveryResult discover_with_refinement(const MapDistribution& dist, const FiltrationParams& params,
                                         const std::vector<C2Point>& grid, const DiscoveryParams& dp,
                                         SequenceSeed seed, int max_halvings) {
  DiscoveryParams p = dp;
  DiscoveryResult coarse = discover_minimal_sets(dist, params, grid, p, seed);
  for (int h = 0; h < max_halvings; ++h) {
    p.cluster_eps *= 0.5;
    DiscoveryResult fine = discover_minimal_sets(dist, params, grid, p, seed);
    if (fine.finite_count() == coarse.finite_count()) return coarse;
    coarse = std::move(fine);
  }
  return coarse;
}

CaptureMap::CaptureMap(const std::vector<MinimalSetDescriptor>& sets, double R) : R_(R) {
  for (const auto& L : sets) {
    if (L.is_infinity()) continue;
    if (!(L.capture_radius > 0.0)) throw LabError(ErrorCode::invalid_argument, "capture radius must be positive");
    ids_.push_back(L.id);
    radii_.push_back(L.capture_radius);
    index_.push_back(std::make_unique<CloudIndex>(L.capture_radius));
    for (const auto& p : L.cloud) index_.back()->add(p);
  }
}

int CaptureMap::locate(const C2Point& w) const {
  if (!in_box(w, R_)) return -1;
  int found = -1;
  for (std::size_t k = 0; k < index_.size(); ++k) {
    if (!index_[k]->any_within(w, radii_[k])) continue;
    if (found >= 0) throw LabError(ErrorCode::ambiguous_capture, "point lies in two capture neighbourhoods");
    found = static_cast<int>(k);
  }
  return found;
}

double CaptureMap::distance_to(int k, const C2Point& w) const {
  const auto& idx = *index_[static_cast<size_t>(k)];
  const int j = idx.nearest_within(w, radii_[k]);
  return j < 0 ? radii_[k] : distance(w, idx[static_cast<size_t>(j)]);
}

int basin_outcome(const MapSequence& seq, const C2Point& z, const CaptureMap& cap, int max_iter) {
  C2Point w = z;
  int current = -1, dwell = 0;
  for (int k = 0;; ++k) {
    if (in_v_plus(w, cap.R())) return kOutcomeInfinity;
    const int loc = cap.locate(w);
    if (loc >= 0 && loc == current) {
      ++dwell;
    } else {
      current = loc;
      dwell = loc >= 0 ? 1 : 0;
    }
    if (dwell >= kCaptureDwell) return current;
    if (k >= max_iter) return kOutcomeUnresolved;
    w = seq.at(static_cast<std::uint64_t>(k)).apply(w);
    if (!is_finite(w)) return kOutcomeUnresolved;
  }
}

std::vector<int> basin_outcomes(const MapDistribution& dist, const CaptureMap& cap, const C2Point& z, int samples,
                                int max_iter, SequenceSeed seed) {
  if (samples < 1) throw LabError(ErrorCode::invalid_argument, "samples must be positive");
  if (max_iter < 1) throw LabError(ErrorCode::invalid_argument, "max_iter must be positive");
  const auto shared = std::make_shared<const MapDistribution>(dist);
  std::vector<int> out(static_cast<size_t>(samples));
#pragma omp parallel for schedule(dynamic, 16)
  for (int s = 0; s < samples; ++s) {
    out[s] = basin_outcome(MapSequence::sampled(shared, derive_stream(seed, static_cast<std::uint64_t>(s))), z, cap,
                           max_iter);
  }
  return out;
}

BasinEstimate tally_outcomes(const std::vector<MinimalSetDescriptor>& sets, const CaptureMap& cap,
                             const std::vector<int>& outcomes) {
  BasinEstimate est;
  for (const auto& L : sets) est.ids.push_back(L.id);
  est.counts.assign(est.ids.size(), 0);
  auto slot = [&](int id) {
    return static_cast<size_t>(std::find(est.ids.begin(), est.ids.end(), id) - est.ids.begin());
  };
  const std::size_t inf_slot = slot(kInfinityId);
  for (int o : outcomes) {
    if (o == kOutcomeUnresolved) {
      ++est.unresolved_count;
    } else if (o == kOutcomeInfinity) {
      if (inf_slot < est.ids.size()) ++est.counts[inf_slot];
    } else {
      ++est.counts[slot(cap.ids()[static_cast<size_t>(o)])];
    }
  }
  est.samples = static_cast<long>(outcomes.size());
  for (long c : est.counts) est.probabilities.push_back(static_cast<double>(c) / est.samples);
  est.unresolved = static_cast<double>(est.unresolved_count) / est.samples;
  return est;
}

double BasinEstimate::probability_of(int id) const {
  for (std::size_t k = 0; k < ids.size(); ++k) {
    if (ids[k] == id) return probabilities[k];
  }
  return 0.0;
}

BasinEstimate estimate_TL(const MapDistribution& dist, const std::vector<MinimalSetDescriptor>& minsets,
                          const C2Point& z, int samples, int max_iter, SequenceSeed seed) {
  if (samples < 100) throw LabError(ErrorCode::invalid_argument, "estimate_TL needs samples >= 100");
  const CaptureMap cap(minsets, dist.filtration().R);
  return tally_outcomes(minsets, cap, basin_outcomes(dist, cap, z, samples, max_iter, seed));
}

}  // namespace henon
