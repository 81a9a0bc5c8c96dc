#include "layercheck/recovery.hpp"

#include <algorithm>
#include <map>
#include <numeric>

#include "layercheck/errors.hpp"

namespace layercheck {

namespace {

std::vector<std::string> split_segments(const std::string& name) {
    std::vector<std::string> segments;
    std::string current;
    for (char c : name) {
        if (c == '.') {
            if (!current.empty())
                segments.push_back(std::move(current));
            current.clear();
        } else {
            current.push_back(c);
        }
    }
    if (!current.empty())
        segments.push_back(std::move(current));
    if (segments.empty())
        segments.push_back(name);  // degenerate names become a single segment
    return segments;
}

}  // namespace

ResponsibilityTree build_responsibility_tree(const LayeredGraph& g) {
    ResponsibilityTree tree;
    tree.nodes.push_back({});  // root

    for (const ProgramElement& el : g.elements()) {
        int current = 0;
        const std::vector<std::string> segments = split_segments(el.name);
        for (const std::string& segment : segments) {
            int child = -1;
            for (int c : tree.nodes[current].children) {
                if (tree.nodes[c].segment == segment) {
                    child = c;
                    break;
                }
            }
            if (child == -1) {
                child = static_cast<int>(tree.nodes.size());
                ResponsibilityTree::Node node;
                node.segment = segment;
                node.depth = tree.nodes[current].depth + 1;
                node.path = tree.nodes[current].path.empty()
                                ? segment
                                : tree.nodes[current].path + "." + segment;
                tree.nodes.push_back(std::move(node));
                tree.nodes[current].children.push_back(child);
            }
            current = child;
        }
        tree.nodes[current].element = el.id;
    }

    // deterministic child order and subtree member sets (children are stored
    // in a vector, so sort indices by segment, then accumulate bottom-up)
    for (auto& node : tree.nodes)
        std::sort(node.children.begin(), node.children.end(),
                  [&](int a, int b) { return tree.nodes[a].segment < tree.nodes[b].segment; });
    for (int i = static_cast<int>(tree.nodes.size()) - 1; i >= 0; --i) {
        ResponsibilityTree::Node& node = tree.nodes[i];
        if (node.element)
            node.members.push_back(*node.element);
        for (int c : node.children)
            node.members.insert(node.members.end(), tree.nodes[c].members.begin(),
                                tree.nodes[c].members.end());
        std::sort(node.members.begin(), node.members.end());
    }
    return tree;
}

int tree_depth(const ResponsibilityTree& tree) {
    int depth = 0;
    for (const auto& node : tree.nodes)
        depth = std::max(depth, node.depth);
    return depth;
}

namespace {

void collect_clusters(const ResponsibilityTree& tree, int node_index, int granularity,
                      std::vector<ClusterSet::Cluster>& out) {
    const ResponsibilityTree::Node& node = tree.nodes[node_index];
    if (node.depth == granularity || (node.depth > 0 && node.children.empty())) {
        if (!node.members.empty())
            out.push_back({node.path, node.members});
        return;
    }
    // a concrete package that is also an interior namespace clusters alone
    if (node.element)
        out.push_back({node.path, {*node.element}});
    for (int c : node.children)
        collect_clusters(tree, c, granularity, out);
}

}  // namespace

ClusterSet cluster_at_granularity(const ResponsibilityTree& tree, int granularity) {
    if (granularity < 1)
        throw GraphError("granularity must be at least 1");
    ClusterSet set;
    set.granularity = granularity;
    if (tree.nodes[0].children.empty())
        return set;
    collect_clusters(tree, 0, granularity, set.clusters);
    std::sort(set.clusters.begin(), set.clusters.end(),
              [](const auto& a, const auto& b) { return a.label < b.label; });
    return set;
}

namespace {

// Clusters small enough for the exact subset sweep; the greedy handles the
// rest.
constexpr int kExactOrderingLimit = 15;

// Exact minimum-back-weight ordering, O(2^k * k^2). State: the set of
// clusters already placed at the bottom; adding x above set S fixes the back
// weight of every arc from S into x. Ties resolve to the first (subset, x)
// found, so the result is deterministic.
std::vector<int> exact_order_top_first(const std::vector<std::vector<int>>& weight) {
    const int k = static_cast<int>(weight.size());
    const unsigned full = (1u << k) - 1;
    constexpr long long kUnset = -1;
    std::vector<long long> cost(full + 1, kUnset);
    std::vector<int> added(full + 1, -1);
    cost[0] = 0;
    for (unsigned s = 0; s < full; ++s) {
        if (cost[s] == kUnset)
            continue;
        for (int x = 0; x < k; ++x) {
            if (s & (1u << x))
                continue;
            long long add = 0;
            for (int p = 0; p < k; ++p)
                if (s & (1u << p))
                    add += weight[p][x];
            const unsigned ns = s | (1u << x);
            if (cost[ns] == kUnset || cost[s] + add < cost[ns]) {
                cost[ns] = cost[s] + add;
                added[ns] = x;
            }
        }
    }
    std::vector<int> top_first;
    top_first.reserve(k);
    for (unsigned s = full; s != 0;) {
        const int x = added[s];
        top_first.push_back(x);  // the last addition sits highest
        s &= ~(1u << x);
    }
    return top_first;
}

std::vector<int> greedy_bottom_up(const std::vector<std::vector<int>>& weight,
                                  const std::vector<std::string>& labels) {
    const int k = static_cast<int>(weight.size());
    std::vector<long long> in_weight(k, 0);
    for (int i = 0; i < k; ++i)
        for (int j = 0; j < k; ++j)
            if (i != j)
                in_weight[j] += weight[i][j];

    std::vector<char> placed(k, 0);
    std::vector<int> bottom_up;
    bottom_up.reserve(k);
    for (int step = 0; step < k; ++step) {
        int best = -1;
        long long best_back = 0, best_down = 0;
        for (int x = 0; x < k; ++x) {
            if (placed[x])
                continue;
            long long back = 0;   // arcs the placement would turn into back-calls
            long long down = 0;   // arcs from x into the stack built so far
            for (int p : bottom_up) {
                back += weight[p][x];
                down += weight[x][p];
            }
            const bool better =
                best == -1 || back < best_back ||
                (back == best_back &&
                 (down > best_down ||
                  (down == best_down && (in_weight[x] > in_weight[best] ||
                                         (in_weight[x] == in_weight[best] &&
                                          labels[x] < labels[best])))));
            if (better) {
                best = x;
                best_back = back;
                best_down = down;
            }
        }
        placed[best] = 1;
        bottom_up.push_back(best);
    }
    std::reverse(bottom_up.begin(), bottom_up.end());
    return bottom_up;
}

// First-improvement insertion moves until a fixed point.
void improve_by_insertion(const std::vector<std::vector<int>>& weight, std::vector<int>& order) {
    const int k = static_cast<int>(order.size());
    bool improved = true;
    int guard = 0;
    while (improved && guard++ < 64) {
        improved = false;
        const int current = back_arc_weight(weight, order);
        for (int from = 0; from < k && !improved; ++from) {
            for (int to = 0; to < k && !improved; ++to) {
                if (to == from)
                    continue;
                std::vector<int> candidate = order;
                const int moved = candidate[from];
                candidate.erase(candidate.begin() + from);
                candidate.insert(candidate.begin() + to, moved);
                if (back_arc_weight(weight, candidate) < current) {
                    order = std::move(candidate);
                    improved = true;
                }
            }
        }
    }
}

}  // namespace

std::vector<int> order_clusters(const std::vector<std::vector<int>>& weight,
                                const std::vector<std::string>& labels) {
    const int k = static_cast<int>(weight.size());
    if (k == 0)
        return {};
    if (k <= kExactOrderingLimit)
        return exact_order_top_first(weight);
    std::vector<int> order = greedy_bottom_up(weight, labels);
    improve_by_insertion(weight, order);
    return order;
}

int back_arc_weight(const std::vector<std::vector<int>>& weight, const std::vector<int>& order) {
    int total = 0;
    for (size_t lower = 0; lower < order.size(); ++lower)
        for (size_t higher = 0; higher < lower; ++higher)
            total += weight[order[lower]][order[higher]];
    return total;
}

LayerAssignment order_clusters_into_layers(const LayeredGraph& g, const ClusterSet& clusters,
                                           int layer_count) {
    const int k = static_cast<int>(clusters.clusters.size());
    if (layer_count < 1)
        throw GraphError("layer count must be at least 1");
    if (k == 0)
        throw GraphError("cluster set is empty");
    if (layer_count > k)
        throw GraphError("layer count " + std::to_string(layer_count) + " exceeds the " +
                         std::to_string(k) + " available clusters; choose a layer count of at most " +
                         std::to_string(k));

    std::vector<int> cluster_of(g.node_count(), -1);
    std::vector<std::string> labels;
    for (int c = 0; c < k; ++c) {
        labels.push_back(clusters.clusters[c].label);
        for (NodeId m : clusters.clusters[c].members)
            cluster_of[m] = c;
    }
    for (NodeId m = 0; m < g.node_count(); ++m)
        if (cluster_of[m] == -1)
            throw GraphError("element \"" + g.element(m).name + "\" belongs to no cluster");

    std::vector<std::vector<int>> weight(k, std::vector<int>(k, 0));
    for (const DependencyEdge& e : g.edges()) {
        const int a = cluster_of[e.src];
        const int b = cluster_of[e.dst];
        if (a != b)
            ++weight[a][b];
    }

    const std::vector<int> order = order_clusters(weight, labels);

    // one rank per cluster, then merge the lightest adjacent pair until the
    // requested layer count is reached
    std::vector<std::vector<int>> ranks;
    for (int c : order)
        ranks.push_back({c});
    auto rank_size = [&](const std::vector<int>& rank) {
        int size = 0;
        for (int c : rank)
            size += static_cast<int>(clusters.clusters[c].members.size());
        return size;
    };
    while (static_cast<int>(ranks.size()) > layer_count) {
        size_t best = 0;
        int best_size = rank_size(ranks[0]) + rank_size(ranks[1]);
        for (size_t i = 1; i + 1 < ranks.size(); ++i) {
            const int size = rank_size(ranks[i]) + rank_size(ranks[i + 1]);
            if (size < best_size) {
                best = i;
                best_size = size;
            }
        }
        ranks[best].insert(ranks[best].end(), ranks[best + 1].begin(), ranks[best + 1].end());
        ranks.erase(ranks.begin() + best + 1);
    }

    LayerAssignment assignment;
    assignment.layer_count = layer_count;
    assignment.layer_of.assign(g.node_count(), 0);
    for (int l = 0; l < layer_count; ++l) {
        std::string name;
        for (int c : ranks[l]) {
            if (!name.empty())
                name += "+";
            name += clusters.clusters[c].label;
            for (NodeId m : clusters.clusters[c].members)
                assignment.layer_of[m] = l + 1;
        }
        assignment.layer_names[l + 1] = name;
    }
    return assignment;
}

}  // namespace layercheck
