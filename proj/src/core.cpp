#include "simpset/core.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <set>

namespace simpset {

namespace {

// Adjacency of the directed edge graph; self loops are left out.
struct EdgeGraph {
    std::vector<std::vector<std::pair<GenId, GenId>>> out;  // (target, edge)
    std::vector<GenId> self_loops;
};

EdgeGraph edge_graph(const FiniteSimplicialSet& x)
{
    EdgeGraph g;
    g.out.resize(x.size());
    for (GenId e : x.generators_of_dim(1)) {
        auto [s, t] = edge_ends(x, e);
        if (s == t)
            g.self_loops.push_back(e);
        else
            g.out[s].push_back({t, e});
    }
    return g;
}

// Tarjan's algorithm over the vertices; returns the component id per vertex.
std::vector<int> tarjan(const FiniteSimplicialSet& x, const EdgeGraph& g, int& count)
{
    const auto verts = x.generators_of_dim(0);
    std::vector<int> index(x.size(), -1), low(x.size(), 0), comp(x.size(), -1);
    std::vector<bool> on_stack(x.size(), false);
    std::vector<GenId> stack;
    int next = 0;
    count = 0;
    // iterative to survive long paths
    struct Frame {
        GenId v;
        std::size_t i;
    };
    for (GenId root : verts) {
        if (index[root] >= 0)
            continue;
        std::vector<Frame> call{{root, 0}};
        index[root] = low[root] = next++;
        stack.push_back(root);
        on_stack[root] = true;
        while (!call.empty()) {
            auto& fr = call.back();
            if (fr.i < g.out[fr.v].size()) {
                const GenId w = g.out[fr.v][fr.i++].first;
                if (index[w] < 0) {
                    index[w] = low[w] = next++;
                    stack.push_back(w);
                    on_stack[w] = true;
                    call.push_back({w, 0});
                } else if (on_stack[w]) {
                    low[fr.v] = std::min(low[fr.v], index[w]);
                }
                continue;
            }
            const GenId v = fr.v;
            if (low[v] == index[v]) {
                for (;;) {
                    const GenId w = stack.back();
                    stack.pop_back();
                    on_stack[w] = false;
                    comp[w] = count;
                    if (w == v)
                        break;
                }
                ++count;
            }
            call.pop_back();
            if (!call.empty())
                low[call.back().v] = std::min(low[call.back().v], low[v]);
        }
    }
    return comp;
}

VertexPartition partition_from_labels(const FiniteSimplicialSet& x, const std::vector<int>& label)
{
    std::vector<std::vector<GenId>> blocks;
    std::map<int, std::size_t> where;
    for (GenId v : x.generators_of_dim(0)) {
        auto [it, fresh] = where.emplace(label[v], blocks.size());
        if (fresh)
            blocks.emplace_back();
        blocks[it->second].push_back(v);
    }
    return VertexPartition::from_blocks(x, std::move(blocks));
}

}  // namespace

bool property_B(const FiniteSimplicialSet& x)
{
    for (const auto& t : vertex_table(x)) {
        std::vector<GenId> s = t;
        std::sort(s.begin(), s.end());
        if (std::adjacent_find(s.begin(), s.end()) != s.end())
            return false;
    }
    return true;
}

bool property_C(const FiniteSimplicialSet& x)
{
    if (!property_B(x))
        throw NotNonsingular("Property C is only checked on inputs with Property B");
    std::set<std::vector<GenId>> sets;
    for (auto t : vertex_table(x)) {
        std::sort(t.begin(), t.end());
        if (!sets.insert(std::move(t)).second)
            return false;
    }
    return true;
}

std::pair<GenId, GenId> edge_ends(const FiniteSimplicialSet& x, GenId edge)
{
    if (x.dim(edge) != 1)
        throw InvalidArgument("edge_ends: '" + x.name(edge) + "' is not an edge");
    return {x.face(edge, 1).generator, x.face(edge, 0).generator};
}

std::vector<Loop> n_loop_detect(const FiniteSimplicialSet& x)
{
    const auto g = edge_graph(x);
    std::vector<Loop> loops;
    for (GenId e : g.self_loops)
        loops.push_back({{e}});
    int count = 0;
    const auto comp = tarjan(x, g, count);
    std::vector<int> size(static_cast<std::size_t>(count), 0);
    for (GenId v : x.generators_of_dim(0))
        ++size[static_cast<std::size_t>(comp[v])];
    std::vector<bool> done(static_cast<std::size_t>(count), false);
    for (GenId u : x.generators_of_dim(0)) {
        const int c = comp[u];
        if (size[static_cast<std::size_t>(c)] < 2 || done[static_cast<std::size_t>(c)])
            continue;
        done[static_cast<std::size_t>(c)] = true;
        // shortest path back to u inside the component, starting along any arc
        std::vector<GenId> via(x.size(), ~GenId{0});
        std::vector<GenId> prev(x.size(), ~GenId{0});
        std::vector<bool> reached(x.size(), false);
        std::deque<GenId> queue;
        for (auto [w, e] : g.out[u]) {
            if (comp[w] != c || reached[w])
                continue;
            reached[w] = true;
            via[w] = e;
            prev[w] = u;
            queue.push_back(w);
        }
        GenId closing = ~GenId{0};
        GenId last = ~GenId{0};
        while (!queue.empty() && closing == ~GenId{0}) {
            const GenId v = queue.front();
            queue.pop_front();
            for (auto [w, e] : g.out[v]) {
                if (w == u) {
                    closing = e;
                    last = v;
                    break;
                }
                if (comp[w] != c || reached[w])
                    continue;
                reached[w] = true;
                via[w] = e;
                prev[w] = v;
                queue.push_back(w);
            }
        }
        if (closing == ~GenId{0})
            throw InternalError("n_loop_detect: component without a cycle");
        Loop loop;
        loop.edges.push_back(closing);
        for (GenId v = last; v != u; v = prev[v])
            loop.edges.push_back(via[v]);
        std::reverse(loop.edges.begin(), loop.edges.end());
        loops.push_back(std::move(loop));
    }
    return loops;
}

bool VertexPartition::is_discrete() const
{
    return std::all_of(blocks.begin(), blocks.end(), [](const auto& b) { return b.size() == 1; });
}

VertexPartition VertexPartition::from_blocks(const FiniteSimplicialSet& x, std::vector<std::vector<GenId>> blocks)
{
    VertexPartition p;
    p.block_of.assign(x.size(), -1);
    for (auto& b : blocks)
        std::sort(b.begin(), b.end());
    std::sort(blocks.begin(), blocks.end());
    for (std::size_t k = 0; k < blocks.size(); ++k) {
        if (blocks[k].empty())
            throw InvalidArgument("vertex partition: empty block");
        for (GenId v : blocks[k]) {
            if (v >= x.size() || x.dim(v) != 0)
                throw InvalidArgument("vertex partition: block member is not a vertex");
            if (p.block_of[v] >= 0)
                throw InvalidArgument("vertex partition: blocks overlap at '" + x.name(v) + "'");
            p.block_of[v] = static_cast<int>(k);
        }
    }
    for (GenId v : x.generators_of_dim(0))
        if (p.block_of[v] < 0)
            throw InvalidArgument("vertex partition: '" + x.name(v) + "' is not covered");
    p.blocks = std::move(blocks);
    return p;
}

VertexPartition scc_classes(const FiniteSimplicialSet& x)
{
    int count = 0;
    return partition_from_labels(x, tarjan(x, edge_graph(x), count));
}

VertexPartition path_components(const FiniteSimplicialSet& x)
{
    std::vector<int> label(x.size(), -1);
    std::vector<std::vector<GenId>> adj(x.size());
    for (GenId e : x.generators_of_dim(1)) {
        auto [s, t] = edge_ends(x, e);
        adj[s].push_back(t);
        adj[t].push_back(s);
    }
    int next = 0;
    for (GenId v : x.generators_of_dim(0)) {
        if (label[v] >= 0)
            continue;
        std::vector<GenId> stack{v};
        label[v] = next;
        while (!stack.empty()) {
            const GenId u = stack.back();
            stack.pop_back();
            for (GenId w : adj[u])
                if (label[w] < 0) {
                    label[w] = next;
                    stack.push_back(w);
                }
        }
        ++next;
    }
    return partition_from_labels(x, label);
}

Projection quotient_vertices(const SsetPtr& x, const VertexPartition& p)
{
    std::vector<TermPair> rel;
    for (const auto& b : p.blocks)
        for (std::size_t k = 1; k < b.size(); ++k)
            rel.emplace_back(x->term(b[0]), x->term(b[k]));
    return quotient(x, rel);
}

FundamentalCategory fundamental_category(const FiniteSimplicialSet& x)
{
    FundamentalCategory fc;
    fc.objects = x.generators_of_dim(0);
    for (GenId e : x.generators_of_dim(1)) {
        auto [s, t] = edge_ends(x, e);
        fc.arrows.push_back({e, s, t});
    }
    auto arrow = [&](const DegenerateTerm& t) -> std::optional<GenId> {
        if (!t.is_nondegenerate())
            return std::nullopt;
        return t.generator;
    };
    for (GenId s : x.generators_of_dim(2))
        fc.relations.push_back({s, arrow(x.face(s, 2)), arrow(x.face(s, 0)), arrow(x.face(s, 1))});
    return fc;
}

}  // namespace simpset
