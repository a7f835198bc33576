#include "simpset/hom.hpp"

#include <algorithm>
#include <cstdlib>
#include <deque>
#include <map>
#include <random>

#include "simpset/core.hpp"

namespace simpset {

std::uint64_t default_budget()
{
    if (const char* env = std::getenv("SIMPSET_BUDGET")) {
        char* end = nullptr;
        const unsigned long long v = std::strtoull(env, &end, 10);
        if (end != env && *end == '\0' && v > 0)
            return v;
    }
    return 1'000'000;
}

namespace {

constexpr GenId kNone = ~GenId{0};

struct Step {
    enum Kind { free_vertex, via_edge, generator } kind;
    GenId target;          // vertex or generator of the source
    GenId edge = kNone;    // via_edge: the edge reaching target
    GenId anchor = kNone;  // via_edge: the already placed end of edge
    bool anchor_is_source = false;
};

class Search {
public:
    Search(const SsetPtr& a, const SsetPtr& b, const HomOptions& opts,
           const std::function<bool(const SimplicialMap&)>& visit)
        : a_(a), b_(b), opts_(opts), visit_(visit), rng_(opts.seed)
    {
        ta_ = vertex_table(*a_);
        tb_ = vertex_table(*b_);
        for (GenId h = 0; h < b_->size(); ++h)
            by_tuple_[tb_[h]].push_back(h);
        out_edges_.resize(b_->size());
        in_edges_.resize(b_->size());
        for (GenId h : b_->generators_of_dim(1)) {
            out_edges_[tb_[h][0]].push_back(h);
            in_edges_[tb_[h][1]].push_back(h);
        }
        vertex_route_ = opts.route == HomOptions::Route::vertex;
        if (opts.route == HomOptions::Route::automatic)
            vertex_route_ = in_sset_un(*a_) && in_sset_un(*b_);
        if (vertex_route_ && !in_sset_un(*b_))
            throw PreconditionViolated("vertex-map enumeration needs a target with Properties B and C");
        schedule();
        assign_.assign(a_->size(), DegenerateTerm::nondegenerate(0, 0));
        used_.assign(b_->size(), false);
    }

    std::uint64_t run()
    {
        descend(0);
        return visited_;
    }

private:
    void schedule()
    {
        const auto& a = *a_;
        std::vector<std::vector<std::pair<GenId, GenId>>> adj(a.size());  // (neighbour, edge)
        for (GenId e : a.generators_of_dim(1)) {
            const GenId s = ta_[e][0], t = ta_[e][1];
            if (s == t)
                continue;
            adj[s].push_back({t, e});
            adj[t].push_back({s, e});
        }
        std::vector<int> pos(a.size(), -1);
        std::vector<bool> placed_edge(a.size(), false);
        int next = 0;
        for (GenId root : a.generators_of_dim(0)) {
            if (pos[root] >= 0)
                continue;
            std::deque<GenId> queue{root};
            pos[root] = next++;
            steps_.push_back({Step::free_vertex, root});
            while (!queue.empty()) {
                const GenId u = queue.front();
                queue.pop_front();
                for (auto [w, e] : adj[u]) {
                    if (pos[w] >= 0)
                        continue;
                    pos[w] = next++;
                    placed_edge[e] = true;
                    steps_.push_back({Step::via_edge, w, e, u, ta_[e][0] == u});
                    queue.push_back(w);
                }
            }
        }
        // every other generator goes right after its last vertex, lower
        // dimensions first so that faces are always placed already
        std::vector<std::vector<GenId>> bucket(static_cast<std::size_t>(next));
        for (GenId g = 0; g < a.size(); ++g) {
            if (a.dim(g) == 0 || placed_edge[g])
                continue;
            int last = 0;
            for (GenId v : ta_[g])
                last = std::max(last, pos[v]);
            bucket[static_cast<std::size_t>(last)].push_back(g);
        }
        std::vector<Step> vertex_steps;
        vertex_steps.swap(steps_);
        for (std::size_t k = 0; k < vertex_steps.size(); ++k) {
            steps_.push_back(vertex_steps[k]);
            auto& gs = bucket[k];
            std::stable_sort(gs.begin(), gs.end(), [&](GenId x, GenId y) { return a.dim(x) < a.dim(y); });
            for (GenId g : gs)
                steps_.push_back({Step::generator, g});
        }
    }

    void tick()
    {
        if (++tried_ > opts_.budget)
            throw BudgetExceeded("hom enumeration exceeded the budget of " + std::to_string(opts_.budget) +
                                 " partial assignments");
    }

    template <class T>
    void maybe_shuffle(std::vector<T>& v)
    {
        if (opts_.shuffle)
            std::shuffle(v.begin(), v.end(), rng_);
    }

    DegenerateTerm image(const DegenerateTerm& t) const
    {
        return apply_operator(*b_, assign_[t.generator], t.surjection);
    }

    bool faces_agree(GenId g, const DegenerateTerm& cand) const
    {
        const int n = a_->dim(g);
        for (int i = 0; i <= n; ++i)
            if (!(apply_face(*b_, cand, i) == image(a_->face(g, i))))
                return false;
        return true;
    }

    // Terms of b whose vertex tuple is the given one.
    std::vector<DegenerateTerm> terms_over(const std::vector<GenId>& tuple) const
    {
        std::vector<int> merge_at;
        for (std::size_t p = 0; p + 1 < tuple.size(); ++p)
            if (tuple[p] == tuple[p + 1])
                merge_at.push_back(static_cast<int>(p));
        std::vector<DegenerateTerm> out;
        const std::uint32_t first = vertex_route_ ? (1u << merge_at.size()) - 1 : 0;
        for (std::uint32_t mask = first; mask < (1u << merge_at.size()); ++mask) {
            if (opts_.injective && mask != 0)
                break;
            std::vector<GenId> compressed{tuple[0]};
            std::vector<int> surj{0};
            std::size_t k = 0;
            for (std::size_t p = 1; p < tuple.size(); ++p) {
                const bool merge =
                    k < merge_at.size() && merge_at[k] == static_cast<int>(p - 1) ? (mask >> k++ & 1u) : false;
                if (!merge)
                    compressed.push_back(tuple[p]);
                surj.push_back(static_cast<int>(compressed.size()) - 1);
            }
            auto it = by_tuple_.find(compressed);
            if (it == by_tuple_.end())
                continue;
            const MonotoneMap s(static_cast<int>(compressed.size()) - 1, std::move(surj));
            for (GenId h : it->second)
                out.push_back({s, h});
        }
        return out;
    }

    void place(GenId g, const DegenerateTerm& t, bool mark)
    {
        assign_[g] = t;
        if (mark)
            used_[t.generator] = true;
    }

    void descend(std::size_t k)
    {
        if (stop_)
            return;
        if (k == steps_.size()) {
            ++visited_;
            if (!visit_(SimplicialMap(a_, b_, assign_)))
                stop_ = true;
            return;
        }
        const Step& st = steps_[k];
        const bool inj = opts_.injective;
        switch (st.kind) {
        case Step::free_vertex: {
            auto cands = b_->generators_of_dim(0);
            maybe_shuffle(cands);
            for (GenId w : cands) {
                tick();
                if (inj && used_[w])
                    continue;
                place(st.target, b_->term(w), inj);
                descend(k + 1);
                if (inj)
                    used_[w] = false;
                if (stop_)
                    return;
            }
            return;
        }
        case Step::via_edge: {
            const GenId w = assign_[st.anchor].generator;
            // (edge term, image of target)
            std::vector<std::pair<DegenerateTerm, GenId>> cands;
            if (!inj)
                cands.push_back({{MonotoneMap(0, {0, 0}), w}, w});
            for (GenId h : st.anchor_is_source ? out_edges_[w] : in_edges_[w])
                cands.push_back({b_->term(h), tb_[h][st.anchor_is_source ? 1 : 0]});
            maybe_shuffle(cands);
            for (const auto& [term, img] : cands) {
                tick();
                if (inj && (used_[term.generator] || used_[img]))
                    continue;
                place(st.edge, term, inj);
                place(st.target, b_->term(img), inj);
                descend(k + 1);
                if (inj) {
                    used_[term.generator] = false;
                    used_[img] = false;
                }
                if (stop_)
                    return;
            }
            return;
        }
        case Step::generator: {
            std::vector<GenId> tuple;
            for (GenId v : ta_[st.target])
                tuple.push_back(assign_[v].generator);
            auto cands = terms_over(tuple);
            maybe_shuffle(cands);
            for (const auto& t : cands) {
                tick();
                if (inj && used_[t.generator])
                    continue;
                if (!vertex_route_ && !faces_agree(st.target, t))
                    continue;
                place(st.target, t, inj);
                descend(k + 1);
                if (inj)
                    used_[t.generator] = false;
                if (stop_)
                    return;
            }
            return;
        }
        }
    }

    SsetPtr a_, b_;
    HomOptions opts_;
    const std::function<bool(const SimplicialMap&)>& visit_;
    std::mt19937_64 rng_;
    std::vector<std::vector<GenId>> ta_, tb_;
    std::map<std::vector<GenId>, std::vector<GenId>> by_tuple_;
    std::vector<std::vector<GenId>> out_edges_, in_edges_;
    std::vector<Step> steps_;
    std::vector<DegenerateTerm> assign_;
    std::vector<bool> used_;
    bool vertex_route_ = false;
    bool stop_ = false;
    std::uint64_t tried_ = 0;
    std::uint64_t visited_ = 0;
};

}  // namespace

std::uint64_t for_each_hom(const SsetPtr& a, const SsetPtr& b, const HomOptions& opts,
                           const std::function<bool(const SimplicialMap&)>& visit)
{
    return Search(a, b, opts, visit).run();
}

std::vector<SimplicialMap> hom_enumerate(const SsetPtr& a, const SsetPtr& b, const HomOptions& opts)
{
    std::vector<SimplicialMap> out;
    for_each_hom(a, b, opts, [&](const SimplicialMap& f) {
        out.push_back(f);
        return true;
    });
    return out;
}

std::uint64_t hom_count(const SsetPtr& a, const SsetPtr& b, const HomOptions& opts)
{
    return for_each_hom(a, b, opts, [](const SimplicialMap&) { return true; });
}

std::optional<SimplicialMap> find_hom(const SsetPtr& a, const SsetPtr& b, const HomOptions& opts)
{
    std::optional<SimplicialMap> out;
    for_each_hom(a, b, opts, [&](const SimplicialMap& f) {
        out = f;
        return false;
    });
    return out;
}

std::optional<SimplicialMap> find_isomorphism(const SsetPtr& a, const SsetPtr& b, const HomOptions& opts)
{
    if (a->profile() != b->profile())
        return std::nullopt;
    HomOptions o = opts;
    o.injective = true;
    return find_hom(a, b, o);
}

bool is_isomorphism(const SimplicialMap& f)
{
    return f.source()->size() == f.target()->size() && f.is_injective();
}

}  // namespace simpset
