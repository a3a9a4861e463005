#include "bimo/engine.hpp"

#include <algorithm>
#include <map>

namespace bimo {

namespace {

class Searcher {
public:
    Searcher(const Graph& g, const Graph& h, MapMode mode, bool first_only)
        : g_(g), h_(h), mode_(mode), first_only_(first_only) {
        n_ = g_.vertex_count();
        map_.assign(n_, -1);
        used_.assign(h_.vertex_count(), 0);
        mapped_neighbor_count_.assign(n_, 0);
    }

    std::vector<VertexImages> run() {
        if (mode_ != MapMode::Monomorphism && n_ != h_.vertex_count()) return {};
        if (mode_ == MapMode::Monomorphism && n_ > h_.vertex_count()) return {};
        if (mode_ == MapMode::Isomorphism && g_.edge_count() != h_.edge_count()) return {};
        if (n_ == 0) return {VertexImages{}};
        recurse(0);
        return std::move(results_);
    }

private:
    int select() const {
        int best = -1;
        for (int v = 0; v < n_; ++v) {
            if (map_[v] >= 0) continue;
            if (best < 0 || mapped_neighbor_count_[v] > mapped_neighbor_count_[best] ||
                (mapped_neighbor_count_[v] == mapped_neighbor_count_[best] &&
                 g_.degree(v) > g_.degree(best)))
                best = v;
        }
        return best;
    }

    bool candidate_ok(int v, int w) const {
        if (used_[w]) return false;
        if (mode_ == MapMode::Isomorphism) {
            if (h_.degree(w) != g_.degree(v)) return false;
            for (int u : assigned_)
                if (g_.has_edge(u, v) != h_.has_edge(map_[u], w)) return false;
        } else {
            if (h_.degree(w) < g_.degree(v)) return false;
            for (int u : g_.neighbors(v))
                if (map_[u] >= 0 && !h_.has_edge(map_[u], w)) return false;
        }
        return true;
    }

    void recurse(int depth) {
        if (depth == n_) {
            results_.push_back(map_);
            if (first_only_) done_ = true;
            return;
        }
        int v = select();

        // Candidates come from the adjacency of a mapped neighbor's image when
        // one exists; edges must map to edges, so this loses nothing.
        int anchor = -1;
        for (int u : g_.neighbors(v))
            if (map_[u] >= 0 &&
                (anchor < 0 || h_.degree(map_[u]) < h_.degree(map_[anchor])))
                anchor = u;

        auto try_candidate = [&](int w) {
            if (!candidate_ok(v, w)) return;
            map_[v] = w;
            used_[w] = 1;
            assigned_.push_back(v);
            for (int u : g_.neighbors(v)) ++mapped_neighbor_count_[u];
            recurse(depth + 1);
            for (int u : g_.neighbors(v)) --mapped_neighbor_count_[u];
            assigned_.pop_back();
            used_[w] = 0;
            map_[v] = -1;
        };

        if (anchor >= 0) {
            for (int w : h_.neighbors(map_[anchor])) {
                try_candidate(w);
                if (done_) return;
            }
        } else {
            for (int w = 0; w < h_.vertex_count(); ++w) {
                try_candidate(w);
                if (done_) return;
            }
        }
    }

    const Graph& g_;
    const Graph& h_;
    MapMode mode_;
    bool first_only_;
    int n_ = 0;
    std::vector<int> map_;
    std::vector<char> used_;
    std::vector<int> mapped_neighbor_count_;
    std::vector<int> assigned_;
    std::vector<VertexImages> results_;
    bool done_ = false;
};

void check_budget(const Graph& g, const Graph& h, const SearchBudget& budget) {
    int n = std::max(g.vertex_count(), h.vertex_count());
    if (n > budget.vertices)
        throw Error(ErrorCode::BudgetExceeded,
                    std::to_string(n) + " vertices exceeds budget " +
                        std::to_string(budget.vertices));
}

} // namespace

std::vector<VertexImages> enumerate_maps(const Graph& g, const Graph& h, MapMode mode,
                                         const SearchBudget& budget) {
    check_budget(g, h, budget);
    auto results = Searcher(g, h, mode, false).run();
    std::sort(results.begin(), results.end());
    return results;
}

std::vector<VertexImages> enumerate_bimorphisms(const Graph& g, const SearchBudget& budget) {
    return enumerate_maps(g, g, MapMode::BijectiveHom, budget);
}

std::vector<VertexImages> enumerate_automorphisms(const Graph& g, const SearchBudget& budget) {
    return enumerate_maps(g, g, MapMode::Isomorphism, budget);
}

std::vector<VertexImages> enumerate_monomorphisms(const Graph& g, const Graph& h,
                                                  const SearchBudget& budget) {
    return enumerate_maps(g, h, MapMode::Monomorphism, budget);
}

std::optional<VertexImages> find_bijective_homomorphism(const Graph& g, const Graph& h,
                                                        const SearchBudget& budget) {
    check_budget(g, h, budget);
    auto results = Searcher(g, h, MapMode::BijectiveHom, true).run();
    if (results.empty()) return std::nullopt;
    return results.front();
}

std::optional<VertexImages> find_monomorphism(const Graph& g, const Graph& h,
                                              const SearchBudget& budget) {
    check_budget(g, h, budget);
    auto results = Searcher(g, h, MapMode::Monomorphism, true).run();
    if (results.empty()) return std::nullopt;
    return results.front();
}

std::vector<VertexImages> brute_force_maps(const Graph& g, const Graph& h, MapMode mode) {
    const int n = g.vertex_count();
    const int m = h.vertex_count();
    std::vector<VertexImages> out;
    if (mode != MapMode::Monomorphism && n != m) return out;
    if (n == 0) return {VertexImages{}};

    auto accept = [&](const VertexImages& images) {
        for (const auto& [u, v] : g.edges())
            if (!h.has_edge(images[u], images[v])) return false;
        if (mode == MapMode::Isomorphism) {
            for (int u = 0; u < n; ++u)
                for (int v = u + 1; v < n; ++v)
                    if (!g.has_edge(u, v) && h.has_edge(images[u], images[v])) return false;
        }
        return true;
    };

    if (mode == MapMode::Monomorphism) {
        // every injection, in lexicographic order
        VertexImages images(n, -1);
        std::vector<char> used(m, 0);
        auto rec = [&](auto&& self, int v) -> void {
            if (v == n) {
                if (accept(images)) out.push_back(images);
                return;
            }
            for (int w = 0; w < m; ++w) {
                if (used[w]) continue;
                images[v] = w;
                used[w] = 1;
                self(self, v + 1);
                used[w] = 0;
            }
        };
        rec(rec, 0);
        return out;
    }

    VertexImages perm(n);
    for (int i = 0; i < n; ++i) perm[i] = i;
    do {
        if (accept(perm)) out.push_back(perm);
    } while (std::next_permutation(perm.begin(), perm.end()));
    return out;
}

// ---------------------------------------------------------------------------
// Map monoids

VertexImages compose_maps(const VertexImages& first, const VertexImages& then) {
    if (first.size() != then.size())
        throw Error(ErrorCode::InvalidArgument, "composing maps of different sizes");
    VertexImages out(first.size());
    for (std::size_t v = 0; v < first.size(); ++v) out[v] = then[first[v]];
    return out;
}

FiniteMonoid MapMonoid::to_finite_monoid() const {
    FiniteMonoid m;
    m.order = static_cast<int>(elements.size());
    m.table = table;
    m.identity = identity;
    return m;
}

MapMonoid monoid_closure(const std::vector<VertexImages>& maps, const SearchBudget& budget) {
    std::size_t n = maps.empty() ? 0 : maps[0].size();
    for (const auto& f : maps)
        if (f.size() != n)
            throw Error(ErrorCode::InvalidArgument, "maps must share one vertex set");

    VertexImages id(n);
    for (std::size_t i = 0; i < n; ++i) id[i] = static_cast<int>(i);

    std::map<VertexImages, int> index;
    std::vector<VertexImages> elems;
    auto add = [&](VertexImages f) {
        if (index.emplace(f, static_cast<int>(elems.size())).second) {
            elems.push_back(std::move(f));
            if (static_cast<long long>(elems.size()) > budget.closure)
                throw Error(ErrorCode::ClosureBudgetExceeded,
                            "closure exceeds " + std::to_string(budget.closure));
        }
    };
    add(id);
    for (const auto& f : maps) add(f);
    for (std::size_t i = 0; i < elems.size(); ++i)
        for (std::size_t j = 0; j < elems.size(); ++j)
            add(compose_maps(elems[i], elems[j]));

    // canonical element order
    std::sort(elems.begin(), elems.end());
    index.clear();
    for (std::size_t i = 0; i < elems.size(); ++i) index[elems[i]] = static_cast<int>(i);

    MapMonoid m;
    m.elements = elems;
    m.identity = index.at(id);
    const int k = static_cast<int>(elems.size());
    m.table.assign(k, std::vector<int>(k));
    for (int i = 0; i < k; ++i)
        for (int j = 0; j < k; ++j)
            m.table[i][j] = index.at(compose_maps(elems[i], elems[j]));
    return m;
}

namespace {

// (tail, cycle) of the power sequence x, x^2, ... ; equal under isomorphism.
std::pair<int, int> power_signature(const FiniteMonoid& m, int x) {
    std::vector<int> seen_at(m.order, -1);
    int cur = x, step = 0;
    while (seen_at[cur] < 0) {
        seen_at[cur] = step++;
        cur = m.table[cur][x];
    }
    return {seen_at[cur], step - seen_at[cur]};
}

} // namespace

std::optional<std::vector<int>> is_isomorphic_monoid(const FiniteMonoid& m1,
                                                     const FiniteMonoid& m2, int budget) {
    if (m1.order != m2.order) return std::nullopt;
    const int n = m1.order;
    if (n > budget)
        throw Error(ErrorCode::BudgetExceeded,
                    "monoid order " + std::to_string(n) + " exceeds budget " +
                        std::to_string(budget));

    std::vector<std::pair<int, int>> sig1(n), sig2(n);
    for (int x = 0; x < n; ++x) {
        sig1[x] = power_signature(m1, x);
        sig2[x] = power_signature(m2, x);
    }
    {
        auto s1 = sig1, s2 = sig2;
        std::sort(s1.begin(), s1.end());
        std::sort(s2.begin(), s2.end());
        if (s1 != s2) return std::nullopt;
    }

    std::vector<int> f(n, -1);
    std::vector<char> used(n, 0);
    f[m1.identity] = m2.identity;
    used[m2.identity] = 1;
    std::vector<int> order;
    for (int x = 0; x < n; ++x)
        if (x != m1.identity) order.push_back(x);

    auto consistent = [&]() {
        for (int a = 0; a < n; ++a) {
            if (f[a] < 0) continue;
            for (int b = 0; b < n; ++b) {
                if (f[b] < 0) continue;
                int ab = m1.table[a][b];
                if (f[ab] >= 0 && f[ab] != m2.table[f[a]][f[b]]) return false;
            }
        }
        return true;
    };

    auto backtrack = [&](auto&& self, std::size_t k) -> bool {
        if (k == order.size()) return true;
        int x = order[k];
        for (int y = 0; y < n; ++y) {
            if (used[y] || sig2[y] != sig1[x]) continue;
            f[x] = y;
            used[y] = 1;
            if (consistent() && self(self, k + 1)) return true;
            f[x] = -1;
            used[y] = 0;
        }
        return false;
    };
    if (backtrack(backtrack, 0)) return f;
    return std::nullopt;
}

// ---------------------------------------------------------------------------
// Regular left action

nlohmann::ordered_json LeftActionReport::to_json() const {
    nlohmann::ordered_json j;
    j["fixes_group_class"] = fixes_group_class;
    j["is_left_multiplication"] = is_left_multiplication;
    j["bijection_onto_target"] = bijection_onto_target;
    j["no_forbidden_transport"] = no_forbidden_transport;
    j["acting_elements"] = acting_elements;
    j["failures"] = failures;
    j["passed"] = passed();
    return j;
}

LeftActionReport check_regular_left_action(const std::vector<VertexImages>& bimorphisms,
                                           const Graph& graph, const FiniteGroup& group,
                                           const std::vector<int>& target_elements) {
    LeftActionReport report;
    std::vector<int> vertex_of(group.order, -1);
    for (int v = 0; v < graph.vertex_count(); ++v) {
        const auto& r = graph.role(v);
        if (r.kind == VertexRole::Kind::GroupElem) {
            if (r.g < 0 || r.g >= group.order) {
                report.failures.push_back("group vertex with label outside group");
                return report;
            }
            vertex_of[r.g] = v;
        }
    }
    for (int g = 0; g < group.order; ++g)
        if (vertex_of[g] < 0) {
            report.failures.push_back("missing group vertex for element " +
                                      std::to_string(g));
            return report;
        }

    // (i) group vertices stay group vertices
    report.fixes_group_class = true;
    for (const auto& beta : bimorphisms)
        for (int g = 0; g < group.order && report.fixes_group_class; ++g)
            if (graph.role(beta[vertex_of[g]]).kind != VertexRole::Kind::GroupElem) {
                report.fixes_group_class = false;
                report.failures.push_back("bimorphism moves group vertex g=" +
                                          std::to_string(g) + " out of the class");
            }

    // (ii) restriction is left multiplication by some element of target
    std::vector<int> acting;
    report.is_left_multiplication = report.fixes_group_class;
    std::vector<char> in_target(group.order, 0);
    for (int t : target_elements) in_target[t] = 1;
    if (report.fixes_group_class) {
        for (const auto& beta : bimorphisms) {
            int x = graph.role(beta[vertex_of[group.identity]]).g;
            bool ok = in_target[x];
            for (int g = 0; g < group.order && ok; ++g)
                if (graph.role(beta[vertex_of[g]]).g != group.product(x, g)) ok = false;
            if (!ok) {
                report.is_left_multiplication = false;
                report.failures.push_back(
                    "bimorphism does not act as left multiplication by a target element (e -> " +
                    std::to_string(x) + ")");
                break;
            }
            acting.push_back(x);
        }
    }

    // (iii) bimorphism -> x is a bijection onto target
    if (report.is_left_multiplication) {
        std::vector<int> sorted = acting;
        std::sort(sorted.begin(), sorted.end());
        std::vector<int> target_sorted = target_elements;
        std::sort(target_sorted.begin(), target_sorted.end());
        report.bijection_onto_target = sorted == target_sorted;
        if (!report.bijection_onto_target)
            report.failures.push_back("acting elements do not biject onto the target");
        report.acting_elements = std::move(sorted);
    }

    // (iv) no transport g -> h when h g^-1 is outside the target
    report.no_forbidden_transport = true;
    for (int g = 0; g < group.order; ++g)
        for (int h = 0; h < group.order; ++h) {
            if (in_target[group.product(h, group.inv(g))]) continue;
            for (const auto& beta : bimorphisms)
                if (beta[vertex_of[g]] == vertex_of[h]) {
                    report.no_forbidden_transport = false;
                    report.failures.push_back("bimorphism sends g=" + std::to_string(g) +
                                              " to h=" + std::to_string(h) +
                                              " although h g^-1 is outside the target");
                }
        }
    return report;
}

} // namespace bimo
