#include "layerbound/pathwidth.hpp"

#include <algorithm>
#include <chrono>
#include <unordered_set>

#include "layerbound/dynamic_bitset.hpp"

namespace layerbound {

VerifyDecompositionResult verify_decomposition(const Graph& g,
                                               const PathDecomposition& pd) {
    const int n = g.num_vertices();
    VerifyDecompositionResult res;
    auto fail = [&](DecompositionViolation v) {
        res.violation = std::move(v);
        return res;
    };

    std::vector<int> first_bag(n, -1), last_bag(n, -1);
    for (int i = 0; i < static_cast<int>(pd.bags.size()); ++i) {
        for (VertexId v : pd.bags[i]) {
            if (v < 0 || v >= n)
                return fail({DecompositionViolation::Kind::BadBag, v, {},
                             "bag contains out-of-range vertex"});
            if (first_bag[v] == -1) first_bag[v] = i;
            last_bag[v] = i;
        }
    }
    for (VertexId v = 0; v < n; ++v)
        if (first_bag[v] == -1)
            return fail({DecompositionViolation::Kind::UncoveredVertex, v, {},
                         "vertex " + std::to_string(v) + " is in no bag"});

    // Contiguity: v must appear in every bag between its first and last one.
    for (int i = 0; i < static_cast<int>(pd.bags.size()); ++i) {
        std::vector<char> present(n, 0);
        for (VertexId v : pd.bags[i]) present[v] = 1;
        for (VertexId v = 0; v < n; ++v)
            if (!present[v] && first_bag[v] < i && i < last_bag[v])
                return fail({DecompositionViolation::Kind::BrokenTrace, v, {},
                             "vertex " + std::to_string(v) +
                                 " missing from bag " + std::to_string(i) +
                                 " inside its interval"});
    }
    for (const Edge& e : g.edges()) {
        bool covered = false;
        for (const VertexSet& bag : pd.bags) {
            bool has_u = std::find(bag.begin(), bag.end(), e.u) != bag.end();
            bool has_v = std::find(bag.begin(), bag.end(), e.v) != bag.end();
            if (has_u && has_v) {
                covered = true;
                break;
            }
        }
        if (!covered)
            return fail({DecompositionViolation::Kind::UncoveredEdge, -1, e,
                         "edge {" + std::to_string(e.u) + "," + std::to_string(e.v) +
                             "} is in no bag"});
    }

    int width = -1;
    for (const VertexSet& bag : pd.bags)
        width = std::max(width, static_cast<int>(bag.size()) - 1);
    res.width = width;
    return res;
}

int separation(const Graph& g, const Layout& l) {
    const int n = g.num_vertices();
    std::vector<int> pos(n, 0);
    for (int i = 0; i < n; ++i) pos[l[i]] = i + 1;
    int best = 0;
    for (int i = 1; i <= n; ++i) {
        int sep = 0;
        for (int p = 1; p <= i; ++p) {
            VertexId v = l[p - 1];
            for (VertexId w : g.neighbors(v))
                if (pos[w] > i) {
                    ++sep;
                    break;
                }
        }
        best = std::max(best, sep);
    }
    return best;
}

PathDecomposition layout_to_decomposition(const Graph& g, const Layout& l) {
    const int n = g.num_vertices();
    std::vector<int> pos(n, 0);
    for (int i = 0; i < n; ++i) pos[l[i]] = i + 1;
    PathDecomposition pd;
    for (int i = 1; i <= n; ++i) {
        VertexSet bag;
        for (int p = 1; p < i; ++p) {
            VertexId v = l[p - 1];
            for (VertexId w : g.neighbors(v))
                if (pos[w] >= i) {
                    bag.push_back(v);
                    break;
                }
        }
        bag.push_back(l[i - 1]);
        std::sort(bag.begin(), bag.end());
        pd.bags.push_back(std::move(bag));
    }
    return pd;
}

namespace {

// Branch and bound over layout prefixes of one connected component, in local
// vertex indices. State is the set of placed vertices; refuted states are
// memoized (a state that cannot be completed within w never can).
class ComponentSolver {
public:
    ComponentSolver(std::vector<std::vector<int>> adj, int w, const Budget& budget,
                    long long nodes_used,
                    std::chrono::steady_clock::time_point start)
        : adj_(std::move(adj)),
          n_(static_cast<int>(adj_.size())),
          w_(w),
          budget_(budget),
          nodes_(nodes_used),
          start_(start),
          seen_(n_) {
        unseen_cnt_.resize(n_);
        for (int v = 0; v < n_; ++v) unseen_cnt_[v] = static_cast<int>(adj_[v].size());
    }

    Tri solve() {
        bool ok = dfs();
        if (exhausted_) return Tri::Unknown;
        return ok ? Tri::True : Tri::False;
    }

    const std::vector<int>& order() const { return order_; }
    long long nodes() const { return nodes_; }

private:
    bool over_budget() {
        if (nodes_ > budget_.max_nodes) return true;
        if ((nodes_ & 0x3ff) == 0) {
            auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                          std::chrono::steady_clock::now() - start_)
                          .count();
            if (ms > budget_.max_millis) return true;
        }
        return false;
    }

    // Boundary change if v were placed now.
    int boundary_delta(int v) const {
        int removed = 0;
        for (int u : adj_[v])
            if (seen_.test(u) && unseen_cnt_[u] == 1) ++removed;
        return (unseen_cnt_[v] > 0 ? 1 : 0) - removed;
    }

    void place(int v) {
        seen_.set(v);
        order_.push_back(v);
        for (int u : adj_[v]) --unseen_cnt_[u];
    }

    void unplace(int v) {
        for (int u : adj_[v]) ++unseen_cnt_[u];
        seen_.reset(v);
        order_.pop_back();
    }

    bool dfs() {
        if (static_cast<int>(order_.size()) == n_) return true;
        ++nodes_;
        if (over_budget()) {
            exhausted_ = true;
            return false;
        }
        if (failed_.count(seen_)) return false;

        // A vertex whose neighbors are all placed can always go next: it
        // never re-enters any future separator and can only shrink this one.
        for (int v = 0; v < n_; ++v) {
            if (seen_.test(v) || unseen_cnt_[v] != 0) continue;
            int delta = boundary_delta(v);
            place(v);
            boundary_ += delta;
            if (dfs()) return true;  // keep order_ intact as the witness
            boundary_ -= delta;
            unplace(v);
            if (!exhausted_ && failed_.size() < kMemoCap) failed_.insert(seen_);
            return false;
        }

        std::vector<std::pair<int, int>> candidates;  // (new boundary, vertex)
        for (int v = 0; v < n_; ++v) {
            if (seen_.test(v)) continue;
            int nb = boundary_ + boundary_delta(v);
            if (nb <= w_) candidates.emplace_back(nb, v);
        }
        std::sort(candidates.begin(), candidates.end());
        for (auto [nb, v] : candidates) {
            int delta = nb - boundary_;
            place(v);
            boundary_ += delta;
            if (dfs()) return true;  // keep order_ intact as the witness
            boundary_ -= delta;
            unplace(v);
            if (exhausted_) return false;
        }
        if (failed_.size() < kMemoCap) failed_.insert(seen_);
        return false;
    }

    static constexpr std::size_t kMemoCap = 1u << 22;

    std::vector<std::vector<int>> adj_;
    int n_;
    int w_;
    Budget budget_;
    long long nodes_;
    std::chrono::steady_clock::time_point start_;
    DynamicBitset seen_;
    std::vector<int> unseen_cnt_;
    int boundary_ = 0;
    std::vector<int> order_;
    std::unordered_set<DynamicBitset, DynamicBitsetHash> failed_;
    bool exhausted_ = false;
};

std::vector<std::vector<int>> local_adjacency(const Graph& g, const VertexSet& comp,
                                              std::vector<int>& global_of) {
    std::vector<int> local(g.num_vertices(), -1);
    global_of.assign(comp.size(), 0);
    for (int i = 0; i < static_cast<int>(comp.size()); ++i) {
        local[comp[i]] = i;
        global_of[i] = comp[i];
    }
    std::vector<std::vector<int>> adj(comp.size());
    for (int i = 0; i < static_cast<int>(comp.size()); ++i)
        for (VertexId w : g.neighbors(comp[i])) adj[i].push_back(local[w]);
    return adj;
}

}  // namespace

DecideResult decide_pathwidth_le(const Graph& g, int w, const Budget& budget) {
    if (w < 0) return {Tri::False, std::nullopt, 0};
    auto start = std::chrono::steady_clock::now();
    DecideResult res;
    Layout layout;
    for (const VertexSet& comp : connected_components(g)) {
        std::vector<int> global_of;
        auto adj = local_adjacency(g, comp, global_of);
        ComponentSolver solver(std::move(adj), w, budget, res.nodes_explored, start);
        Tri t = solver.solve();
        res.nodes_explored = solver.nodes();
        if (t != Tri::True) {
            res.value = t;
            return res;
        }
        for (int v : solver.order()) layout.push_back(global_of[v]);
    }
    res.value = Tri::True;
    res.layout = std::move(layout);
    return res;
}

Layout greedy_layout(const Graph& g) {
    const int n = g.num_vertices();
    std::vector<char> seen(n, 0);
    std::vector<int> unseen_cnt(n);
    for (int v = 0; v < n; ++v) unseen_cnt[v] = g.degree(v);
    Layout order;
    for (int step = 0; step < n; ++step) {
        int best = -1, best_delta = 0;
        for (int v = 0; v < n; ++v) {
            if (seen[v]) continue;
            int removed = 0;
            for (VertexId u : g.neighbors(v))
                if (seen[u] && unseen_cnt[u] == 1) ++removed;
            int delta = (unseen_cnt[v] > 0 ? 1 : 0) - removed;
            if (best == -1 || delta < best_delta) {
                best = v;
                best_delta = delta;
            }
        }
        seen[best] = 1;
        order.push_back(best);
        for (VertexId u : g.neighbors(best)) --unseen_cnt[u];
    }
    return order;
}

PathwidthResult exact_pathwidth(const Graph& g, const Budget& budget) {
    PathwidthResult res;
    if (g.num_vertices() == 0) {
        res.width = 0;
        res.layout = Layout{};
        return res;
    }
    Layout ub_layout = greedy_layout(g);
    int ub = separation(g, ub_layout);
    for (int w = 0; w < ub; ++w) {
        Budget remaining{budget.max_nodes - res.nodes_explored, budget.max_millis};
        DecideResult d = decide_pathwidth_le(g, w, remaining);
        res.nodes_explored += d.nodes_explored;
        if (d.value == Tri::Unknown) return res;
        if (d.value == Tri::True) {
            res.width = w;
            res.layout = std::move(d.layout);
            return res;
        }
    }
    res.width = ub;
    res.layout = std::move(ub_layout);
    return res;
}

}  // namespace layerbound
