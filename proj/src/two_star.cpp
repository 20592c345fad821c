#include "t1p/two_star.hpp"

#include <algorithm>
#include <set>

namespace t1p {

namespace {

int extra_edges(TwoStarVariant v) {
    switch (v) {
        case TwoStarVariant::base: return 0;
        case TwoStarVariant::handle:
        case TwoStarVariant::circle: return 1;
        case TwoStarVariant::x:
        case TwoStarVariant::semi: return 2;
        case TwoStarVariant::full: return 3;
    }
    return 0;
}

bool has_handle(TwoStarVariant v) { return v == TwoStarVariant::handle || v == TwoStarVariant::x; }

class Matcher {
public:
    Matcher(const Graph& g, TwoStarVariant v, int k) : g_(g), v_(v), k_(k), target_(gen_two_star(v, k)) {}

    std::vector<TwoStarMatch> run() {
        VertexSet all = g_.vertices();
        const int want_deg = has_handle(v_) ? k_ + 1 : k_;
        for (std::size_t i = 0; i < all.size(); ++i)
            for (std::size_t j = i + 1; j < all.size(); ++j) {
                Vertex p = all[i], q = all[j];
                if (g_.degree(p) != want_deg || g_.degree(q) != want_deg) continue;
                if (g_.has_edge(p, q) != has_handle(v_)) continue;
                p_ = p;
                q_ = q;
                rest_.clear();
                for (Vertex x : all)
                    if (x != p && x != q) rest_.push_back(x);
                bool ok = true;
                for (Vertex x : rest_)
                    if (!g_.has_edge(p, x) || !g_.has_edge(q, x)) ok = false;
                if (!ok) continue;
                order_.clear();
                used_.clear();
                for (Vertex x : rest_) {
                    place(x);
                    extend();
                    unplace(x);
                }
            }
        return std::move(out_);
    }

private:
    void place(Vertex x) {
        order_.push_back(x);
        used_.insert(x);
    }
    void unplace(Vertex x) {
        order_.pop_back();
        used_.erase(x);
    }

    // Edges among placed path vertices must agree with the target once both ends
    // are placed; checking the newest vertex against the earlier ones suffices.
    bool consistent() const {
        const int i = static_cast<int>(order_.size());  // newest is v_i
        for (int j = 1; j < i; ++j) {
            bool want = target_.has_edge(i + 1, j + 1);
            if (g_.has_edge(order_[i - 1], order_[j - 1]) != want) return false;
        }
        return true;
    }

    void extend() {
        if (!consistent()) return;
        if (static_cast<int>(order_.size()) == k_) {
            out_.push_back({v_, k_, p_, q_, order_});
            return;
        }
        const Vertex last = order_.back();
        for (Vertex x : g_.neighbors(last)) {
            if (x == p_ || x == q_ || used_.count(x)) continue;
            place(x);
            extend();
            unplace(x);
        }
    }

    const Graph& g_;
    TwoStarVariant v_;
    int k_;
    Graph target_;
    Vertex p_ = -1, q_ = -1;
    VertexSet rest_;
    std::vector<Vertex> order_;
    std::set<Vertex> used_;
    std::vector<TwoStarMatch> out_;
};

// Candidate crossing sets for one match, before filtering.
std::vector<CrossingSet> candidates(const Graph& g, const TwoStarMatch& m) {
    const int k = m.k;
    auto v = [&](int i) { return m.order[((i - 1) % k + k) % k]; };
    auto pole = [&](int i, int s) { return make_edge((i + s) % 2 == 0 ? m.p : m.q, v(i)); };
    auto other = [&](int i, int s) { return make_edge((i + s) % 2 == 0 ? m.q : m.p, v(i)); };
    auto arch = [&](int i) { return make_edge(v(i - 1), v(i + 1)); };
    std::vector<CrossingSet> out;

    if (m.variant == TwoStarVariant::full) {
        if (k % 2 != 0) return out;
        for (int s = 0; s < 2; ++s) {
            CrossingSet cs;
            for (int i = 1; i <= k; ++i) cs.push_back(make_pair_of(arch(i), pole(i, s)));
            out.push_back(cs);
        }
        return out;
    }

    // Pairs from the K4s on the end vertices, used for the extra crossings.
    VertexSet ends{m.p, m.q, v(1), v(2), v(k - 1), v(k)};
    std::sort(ends.begin(), ends.end());
    EdgeSet end_edges;
    for (std::size_t a = 0; a < ends.size(); ++a)
        for (std::size_t b = a + 1; b < ends.size(); ++b)
            if (g.has_edge(ends[a], ends[b])) end_edges.push_back({ends[a], ends[b]});
    CrossingSet end_pairs;
    for (std::size_t a = 0; a < end_edges.size(); ++a)
        for (std::size_t b = a + 1; b < end_edges.size(); ++b) {
            Edge x = end_edges[a], y = end_edges[b];
            if (!independent(x, y)) continue;
            if (is_clique(g, [&] {
                    VertexSet s{x.u, x.v, y.u, y.v};
                    std::sort(s.begin(), s.end());
                    return s;
                }()))
                end_pairs.push_back(make_pair_of(x, y));
        }

    const int c = g.edge_count() - (3 * (k + 2) - 6);
    for (int s = 0; s < 2; ++s)
        for (int left = 0; left < 2; ++left)
            for (int right = 0; right < 2; ++right) {
                CrossingSet base;
                for (int i = 3; i <= k - 2; ++i) base.push_back(make_pair_of(arch(i), pole(i, s)));
                base.push_back(left == 0 ? make_pair_of(arch(2), pole(2, s))
                                         : make_pair_of(pole(2, s), other(1, s + 1)));
                base.push_back(right == 0 ? make_pair_of(arch(k - 1), pole(k - 1, s))
                                          : make_pair_of(pole(k - 1, s), other(k, s + 1)));
                const int r = c - static_cast<int>(base.size());
                if (r == 0) {
                    out.push_back(base);
                } else if (r == 1) {
                    for (const auto& pr : end_pairs) {
                        CrossingSet cs = base;
                        cs.push_back(pr);
                        out.push_back(cs);
                    }
                } else if (r == 2) {
                    for (std::size_t a = 0; a < end_pairs.size(); ++a)
                        for (std::size_t b = a + 1; b < end_pairs.size(); ++b) {
                            CrossingSet cs = base;
                            cs.push_back(end_pairs[a]);
                            cs.push_back(end_pairs[b]);
                            out.push_back(cs);
                        }
                }
            }
    return out;
}

}  // namespace

std::vector<TwoStarMatch> match_two_star(const Graph& g, TwoStarVariant variant) {
    const int n = g.vertex_count();
    const int k = n - 2;
    if (k < 5) return {};
    if (variant == TwoStarVariant::semi && k % 2 != 0) return {};
    if (g.edge_count() != 4 * k - 3 + extra_edges(variant)) return {};
    return Matcher(g, variant, k).run();
}

std::optional<FamilyResult> recognize_two_star_family(const Graph& g, const std::vector<Cycle>& required_faces,
                                                      std::optional<TwoStarVariant> only) {
    for (auto variant : {TwoStarVariant::handle, TwoStarVariant::circle, TwoStarVariant::x,
                         TwoStarVariant::semi, TwoStarVariant::full}) {
        if (only && *only != variant) continue;
        auto matches = match_two_star(g, variant);
        if (matches.empty()) continue;
        std::set<CrossingSet> seen;
        FamilyResult res;
        res.variant = variant;
        res.k = g.vertex_count() - 2;
        for (const auto& m : matches)
            for (CrossingSet cs : candidates(g, m)) {
                std::sort(cs.begin(), cs.end());
                if (!seen.insert(cs).second) continue;
                if (triangulated_embedding(g, cs, required_faces)) res.embeddings.push_back(cs);
            }
        std::sort(res.embeddings.begin(), res.embeddings.end());
        res.matches = std::move(matches);
        return res;
    }
    return std::nullopt;
}

}  // namespace t1p
