#include "layercheck/scc.hpp"

#include <algorithm>

#include "layercheck/errors.hpp"

namespace layercheck {

namespace {

// Iterative Tarjan lowlink search; recursion would overflow on long chains.
struct TarjanState {
    const std::vector<std::vector<std::pair<NodeId, EdgeId>>>& adj;
    std::vector<int> index;
    std::vector<int> lowlink;
    std::vector<char> on_stack;
    std::vector<NodeId> stack;
    std::vector<std::vector<NodeId>> components;
    int next_index = 0;

    explicit TarjanState(const LayeredGraph& g)
        : adj(g.out_adjacency()),
          index(g.node_count(), -1),
          lowlink(g.node_count(), 0),
          on_stack(g.node_count(), 0) {}

    void run(NodeId root) {
        struct Frame {
            NodeId v;
            size_t next_child = 0;
        };
        std::vector<Frame> frames;
        frames.push_back({root});
        index[root] = lowlink[root] = next_index++;
        stack.push_back(root);
        on_stack[root] = 1;

        while (!frames.empty()) {
            Frame& f = frames.back();
            const auto& succ = adj[f.v];
            if (f.next_child < succ.size()) {
                const NodeId w = succ[f.next_child++].first;
                if (index[w] == -1) {
                    index[w] = lowlink[w] = next_index++;
                    stack.push_back(w);
                    on_stack[w] = 1;
                    frames.push_back({w});
                } else if (on_stack[w]) {
                    lowlink[f.v] = std::min(lowlink[f.v], index[w]);
                }
            } else {
                if (lowlink[f.v] == index[f.v]) {
                    std::vector<NodeId> comp;
                    NodeId w;
                    do {
                        w = stack.back();
                        stack.pop_back();
                        on_stack[w] = 0;
                        comp.push_back(w);
                    } while (w != f.v);
                    components.push_back(std::move(comp));
                }
                const NodeId v = f.v;
                frames.pop_back();
                if (!frames.empty())
                    lowlink[frames.back().v] = std::min(lowlink[frames.back().v], lowlink[v]);
            }
        }
    }
};

}  // namespace

SccDecomposition scc_decompose(const LayeredGraph& g) {
    TarjanState state(g);
    for (NodeId v = 0; v < g.node_count(); ++v)
        if (state.index[v] == -1)
            state.run(v);

    for (auto& comp : state.components)
        std::sort(comp.begin(), comp.end());
    std::sort(state.components.begin(), state.components.end(),
              [](const auto& a, const auto& b) { return a.front() < b.front(); });

    SccDecomposition out;
    out.components = std::move(state.components);
    out.component_of.assign(g.node_count(), -1);
    for (int c = 0; c < static_cast<int>(out.components.size()); ++c)
        for (NodeId v : out.components[c])
            out.component_of[v] = c;
    out.component_edges.assign(out.components.size(), {});
    for (const DependencyEdge& e : g.edges())
        if (out.component_of[e.src] == out.component_of[e.dst])
            out.component_edges[out.component_of[e.src]].push_back(e.id);
    return out;
}

namespace {

// Johnson-style circuit search rooted at the smallest node of each cycle.
// The subgraph for root s is restricted to nodes >= s, so every emitted
// cycle starts at its minimal node; ascending roots plus ascending
// neighbor order yield lexicographic output.
class CycleSearch {
public:
    CycleSearch(const LayeredGraph& g, int limit) : limit_(limit) {
        const int n = g.node_count();
        adj_.assign(n, {});
        for (const DependencyEdge& e : g.edges())
            adj_[e.src].push_back(e.dst);
        for (auto& nbrs : adj_) {
            std::sort(nbrs.begin(), nbrs.end());
            nbrs.erase(std::unique(nbrs.begin(), nbrs.end()), nbrs.end());
        }
        blocked_.assign(n, 0);
        block_list_.assign(n, {});
    }

    CycleEnumeration run() {
        const int n = static_cast<int>(adj_.size());
        for (root_ = 0; root_ < n && !result_.truncated; ++root_) {
            std::fill(blocked_.begin(), blocked_.end(), 0);
            for (auto& lst : block_list_)
                lst.clear();
            path_.clear();
            circuit(root_);
        }
        return std::move(result_);
    }

private:
    bool circuit(NodeId v) {
        bool found = false;
        path_.push_back(v);
        blocked_[v] = 1;
        for (NodeId w : adj_[v]) {
            if (w < root_)
                continue;
            if (result_.truncated)
                break;
            if (w == root_) {
                if (static_cast<int>(result_.cycles.size()) >= limit_) {
                    result_.truncated = true;
                    break;
                }
                result_.cycles.push_back(path_);
                found = true;
            } else if (!blocked_[w]) {
                if (circuit(w))
                    found = true;
            }
        }
        if (found) {
            unblock(v);
        } else {
            for (NodeId w : adj_[v]) {
                if (w < root_)
                    continue;
                auto& lst = block_list_[w];
                if (std::find(lst.begin(), lst.end(), v) == lst.end())
                    lst.push_back(v);
            }
        }
        path_.pop_back();
        return found;
    }

    void unblock(NodeId v) {
        blocked_[v] = 0;
        std::vector<NodeId> pending = std::move(block_list_[v]);
        block_list_[v].clear();
        for (NodeId w : pending)
            if (blocked_[w])
                unblock(w);
    }

    int limit_;
    NodeId root_ = 0;
    std::vector<std::vector<NodeId>> adj_;
    std::vector<char> blocked_;
    std::vector<std::vector<NodeId>> block_list_;
    std::vector<NodeId> path_;
    CycleEnumeration result_;
};

}  // namespace

CycleEnumeration enumerate_simple_cycles(const LayeredGraph& g, int limit) {
    if (limit < 1)
        throw GraphError("cycle enumeration limit must be at least 1");
    return CycleSearch(g, limit).run();
}

}  // namespace layercheck
