#include "bimo/algebra.hpp"

#include <algorithm>
#include <map>
#include <sstream>

namespace bimo {

nlohmann::ordered_json FiniteMonoid::to_json() const {
    nlohmann::ordered_json j;
    j["order"] = order;
    j["identity"] = identity;
    j["table"] = table;
    return j;
}

bool Submonoid::contains(int x) const {
    return std::binary_search(elements.begin(), elements.end(), x);
}

namespace {

void validate_table_shape(const std::vector<std::vector<int>>& table) {
    const int n = static_cast<int>(table.size());
    if (n == 0) throw Error(ErrorCode::InvalidArgument, "empty table");
    for (const auto& row : table) {
        if (static_cast<int>(row.size()) != n)
            throw Error(ErrorCode::InvalidArgument, "table is not square");
        for (int v : row)
            if (v < 0 || v >= n)
                throw Error(ErrorCode::InvalidArgument,
                            "table entry " + std::to_string(v) + " out of range");
    }
}

int locate_identity(const std::vector<std::vector<int>>& table) {
    const int n = static_cast<int>(table.size());
    for (int e = 0; e < n; ++e) {
        bool ok = true;
        for (int x = 0; x < n && ok; ++x)
            if (table[e][x] != x || table[x][e] != x) ok = false;
        if (ok) return e;
    }
    throw Error(ErrorCode::NoIdentity, "no two-sided identity");
}

FiniteGroup group_from_validated_monoid(FiniteMonoid m) {
    const int n = m.order;
    FiniteGroup g;
    static_cast<FiniteMonoid&>(g) = std::move(m);
    g.inverse.assign(n, -1);
    for (int x = 0; x < n; ++x) {
        std::vector<char> row(n, 0), col(n, 0);
        for (int y = 0; y < n; ++y) {
            row[g.table[x][y]] = 1;
            col[g.table[y][x]] = 1;
            if (g.table[x][y] == g.identity) g.inverse[x] = y;
        }
        for (int y = 0; y < n; ++y)
            if (!row[y] || !col[y])
                throw Error(ErrorCode::NotAGroup,
                            "row/column of element " + std::to_string(x) +
                                " is not a permutation");
        if (g.inverse[x] < 0 || g.table[g.inverse[x]][x] != g.identity)
            throw Error(ErrorCode::NotAGroup,
                        "element " + std::to_string(x) + " has no inverse");
    }
    return g;
}

} // namespace

FiniteMonoid monoid_from_table(const std::vector<std::vector<int>>& table) {
    validate_table_shape(table);
    const int n = static_cast<int>(table.size());
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
            for (int c = 0; c < n; ++c)
                if (table[table[a][b]][c] != table[a][table[b][c]])
                    throw Error(ErrorCode::NotAssociative,
                                "witness (" + std::to_string(a) + "," + std::to_string(b) +
                                    "," + std::to_string(c) + ")");
    FiniteMonoid m;
    m.order = n;
    m.table = table;
    m.identity = locate_identity(table);
    return m;
}

FiniteGroup group_from_table(const std::vector<std::vector<int>>& table) {
    return group_from_validated_monoid(monoid_from_table(table));
}

FiniteGroup group_from_permutation_generators(const std::vector<std::vector<int>>& generators,
                                              int max_order) {
    int points = generators.empty() ? 1 : static_cast<int>(generators[0].size());
    std::vector<int> id(points);
    for (int i = 0; i < points; ++i) id[i] = i;
    for (const auto& gen : generators) {
        if (static_cast<int>(gen.size()) != points)
            throw Error(ErrorCode::InvalidArgument, "generators act on different point counts");
        std::vector<char> hit(points, 0);
        for (int v : gen) {
            if (v < 0 || v >= points || hit[v])
                throw Error(ErrorCode::InvalidArgument, "generator is not a permutation");
            hit[v] = 1;
        }
    }

    std::map<std::vector<int>, int> index;
    std::vector<std::vector<int>> elems;
    index[id] = 0;
    elems.push_back(id);
    // left-to-right composition: (x)(pq) = ((x)p)q
    auto compose = [points](const std::vector<int>& p, const std::vector<int>& q) {
        std::vector<int> r(points);
        for (int i = 0; i < points; ++i) r[i] = q[p[i]];
        return r;
    };
    for (std::size_t i = 0; i < elems.size(); ++i) {
        for (const auto& gen : generators) {
            auto next = compose(elems[i], gen);
            if (index.emplace(next, static_cast<int>(elems.size())).second) {
                elems.push_back(std::move(next));
                if (static_cast<int>(elems.size()) > max_order)
                    throw Error(ErrorCode::OrderBudgetExceeded,
                                "closure exceeds " + std::to_string(max_order) + " elements");
            }
        }
    }

    const int n = static_cast<int>(elems.size());
    std::vector<std::vector<int>> table(n, std::vector<int>(n));
    for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y)
            table[x][y] = index.at(compose(elems[x], elems[y]));

    // Permutation composition is associative; skip the cubic check.
    FiniteMonoid m;
    m.order = n;
    m.table = std::move(table);
    m.identity = 0;
    return group_from_validated_monoid(std::move(m));
}

Submonoid submonoid_closure(const FiniteGroup& group, const std::vector<int>& seed) {
    for (int x : seed)
        if (x < 0 || x >= group.order)
            throw Error(ErrorCode::SubmonoidNotInGroup,
                        "element " + std::to_string(x) + " not in group of order " +
                            std::to_string(group.order));
    std::vector<char> in(group.order, 0);
    std::vector<int> work;
    auto add = [&](int x) {
        if (!in[x]) {
            in[x] = 1;
            work.push_back(x);
        }
    };
    add(group.identity);
    for (int x : seed) add(x);
    for (std::size_t i = 0; i < work.size(); ++i)
        for (std::size_t j = 0; j < work.size(); ++j) {
            add(group.product(work[i], work[j]));
            if (work.size() > static_cast<std::size_t>(group.order)) break;
        }
    Submonoid sub;
    sub.parent = group;
    for (int x = 0; x < group.order; ++x)
        if (in[x]) sub.elements.push_back(x);
    return sub;
}

bool is_cancellative(const FiniteMonoid& m) {
    const int n = m.order;
    for (int x = 0; x < n; ++x) {
        std::vector<char> row(n, 0), col(n, 0);
        for (int y = 0; y < n; ++y) {
            if (row[m.table[x][y]]++) return false;
            if (col[m.table[y][x]]++) return false;
        }
    }
    return true;
}

bool check_ore_condition(const FiniteMonoid& m) {
    const int n = m.order;
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b) {
            std::vector<char> in_aM(n, 0);
            for (int u = 0; u < n; ++u) in_aM[m.table[a][u]] = 1;
            bool meet = false;
            for (int v = 0; v < n && !meet; ++v)
                if (in_aM[m.table[b][v]]) meet = true;
            if (!meet) return false;
        }
    return true;
}

std::vector<int> left_mult_permutation(const FiniteGroup& group, int x) {
    if (x < 0 || x >= group.order)
        throw Error(ErrorCode::InvalidArgument, "element out of range");
    std::vector<int> perm(group.order);
    for (int g = 0; g < group.order; ++g) perm[g] = group.product(x, g);
    return perm;
}

std::vector<std::vector<int>> table_from_json(const nlohmann::json& j) {
    const nlohmann::json* t = &j;
    if (j.is_object() && j.contains("table")) t = &j["table"];
    if (!t->is_array())
        throw Error(ErrorCode::ParseError, "expected a 2-D array table");
    try {
        return t->get<std::vector<std::vector<int>>>();
    } catch (const nlohmann::json::exception& e) {
        throw Error(ErrorCode::ParseError, e.what());
    }
}

std::vector<int> parse_permutation(const std::string& text, int points) {
    std::vector<int> perm(points);
    for (int i = 0; i < points; ++i) perm[i] = i;
    auto first = text.find_first_not_of(" \t");
    if (first == std::string::npos)
        throw Error(ErrorCode::ParseError, "empty permutation");
    if (text[first] == '(') {
        std::vector<int> cycle;
        bool in_cycle = false;
        std::string num;
        auto flush = [&]() {
            if (!num.empty()) {
                int v = std::stoi(num);
                if (v < 0 || v >= points)
                    throw Error(ErrorCode::ParseError, "point " + num + " out of range");
                cycle.push_back(v);
                num.clear();
            }
        };
        for (char c : text) {
            if (c == '(') {
                in_cycle = true;
                cycle.clear();
            } else if (c == ')') {
                flush();
                for (std::size_t i = 0; i < cycle.size(); ++i)
                    perm[cycle[i]] = cycle[(i + 1) % cycle.size()];
                in_cycle = false;
            } else if (c == ' ' || c == ',') {
                flush();
            } else if (isdigit(static_cast<unsigned char>(c)) && in_cycle) {
                num.push_back(c);
            } else if (!isspace(static_cast<unsigned char>(c))) {
                throw Error(ErrorCode::ParseError, std::string("bad character '") + c + "'");
            }
        }
        return perm;
    }
    // one-line image notation
    std::istringstream is(text);
    std::vector<int> images;
    int v;
    while (is >> v) images.push_back(v);
    if (static_cast<int>(images.size()) != points)
        throw Error(ErrorCode::ParseError, "expected " + std::to_string(points) + " images");
    std::vector<char> hit(points, 0);
    for (int w : images) {
        if (w < 0 || w >= points || hit[w])
            throw Error(ErrorCode::ParseError, "not a permutation");
        hit[w] = 1;
    }
    return images;
}

FiniteGroup cyclic_group(int n) {
    if (n < 1) throw Error(ErrorCode::InvalidArgument, "order must be positive");
    std::vector<std::vector<int>> table(n, std::vector<int>(n));
    for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y) table[x][y] = (x + y) % n;
    return group_from_table(table);
}

FiniteGroup symmetric_group_s3() {
    return group_from_permutation_generators({{1, 0, 2}, {1, 2, 0}});
}

} // namespace bimo
