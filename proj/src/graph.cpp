#include "bimo/graph.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <sstream>

namespace bimo {

const char* error_code_name(ErrorCode code) {
    switch (code) {
        case ErrorCode::LoopEdge: return "LoopEdge";
        case ErrorCode::DuplicateEdge: return "DuplicateEdge";
        case ErrorCode::DanglingEndpoint: return "DanglingEndpoint";
        case ErrorCode::UnknownVertex: return "UnknownVertex";
        case ErrorCode::ParseError: return "ParseError";
        case ErrorCode::InvalidSpec: return "InvalidSpec";
        case ErrorCode::GenerationFailed: return "GenerationFailed";
        case ErrorCode::NotAssociative: return "NotAssociative";
        case ErrorCode::NoIdentity: return "NoIdentity";
        case ErrorCode::NotAGroup: return "NotAGroup";
        case ErrorCode::OrderBudgetExceeded: return "OrderBudgetExceeded";
        case ErrorCode::GroupTooSmall: return "GroupTooSmall";
        case ErrorCode::GadgetCountMismatch: return "GadgetCountMismatch";
        case ErrorCode::GadgetNotRigid: return "GadgetNotRigid";
        case ErrorCode::GadgetSizeTooSmall: return "GadgetSizeTooSmall";
        case ErrorCode::SubmonoidTooSmall: return "SubmonoidTooSmall";
        case ErrorCode::SubmonoidNotInGroup: return "SubmonoidNotInGroup";
        case ErrorCode::BudgetExceeded: return "BudgetExceeded";
        case ErrorCode::ClosureBudgetExceeded: return "ClosureBudgetExceeded";
        case ErrorCode::InvalidRadius: return "InvalidRadius";
        case ErrorCode::TargetTooSmall: return "TargetTooSmall";
        case ErrorCode::Mismatch: return "Mismatch";
        case ErrorCode::InvalidArgument: return "InvalidArgument";
    }
    return "UnknownError";
}

// ---------------------------------------------------------------------------
// VertexRole

VertexRole VertexRole::group_elem(int g) {
    VertexRole r;
    r.kind = Kind::GroupElem;
    r.g = g;
    return r;
}

VertexRole VertexRole::connector(int g, int a) {
    VertexRole r;
    r.kind = Kind::Connector;
    r.g = g;
    r.a = a;
    return r;
}

VertexRole VertexRole::gadget_vertex(int g, int a, std::vector<int> path) {
    VertexRole r;
    r.kind = Kind::GadgetVertex;
    r.g = g;
    r.a = a;
    r.path = std::move(path);
    return r;
}

VertexRole VertexRole::bullet(int g) {
    VertexRole r;
    r.kind = Kind::Bullet;
    r.g = g;
    return r;
}

std::string VertexRole::label() const {
    std::ostringstream os;
    switch (kind) {
        case Kind::Plain:
            os << "v";
            break;
        case Kind::GroupElem:
            os << "g" << g;
            break;
        case Kind::Connector:
            os << "(" << g << "," << a << ")";
            break;
        case Kind::GadgetVertex:
            os << "(" << g << ",";
            if (path.size() == 1 && path[0] == -1) {
                os << "p" << a;
            } else {
                os << "q" << a;
                for (std::size_t i = 0; i < path.size(); ++i)
                    os << (i == 0 ? "_" : ".") << path[i];
            }
            os << ")";
            break;
        case Kind::Bullet:
            os << "(" << g << ",*)";
            break;
    }
    return os.str();
}

std::string VertexRole::color() const {
    switch (kind) {
        case Kind::Plain: return "black";
        case Kind::GroupElem: return "red";
        case Kind::Connector: return "gray";
        case Kind::GadgetVertex: return "green";
        case Kind::Bullet: return "blue";
    }
    return "black";
}

std::string VertexRole::encode() const {
    std::ostringstream os;
    switch (kind) {
        case Kind::Plain:
            os << "plain";
            break;
        case Kind::GroupElem:
            os << "group:" << g;
            break;
        case Kind::Connector:
            os << "conn:" << g << ":" << a;
            break;
        case Kind::GadgetVertex: {
            os << "gadget:" << g << ":" << a << ":";
            for (std::size_t i = 0; i < path.size(); ++i) {
                if (i) os << ".";
                os << path[i];
            }
            break;
        }
        case Kind::Bullet:
            os << "bullet:" << g;
            break;
    }
    return os.str();
}

namespace {

std::vector<std::string> split(const std::string& s, char sep) {
    std::vector<std::string> out;
    std::string cur;
    for (char c : s) {
        if (c == sep) {
            out.push_back(cur);
            cur.clear();
        } else {
            cur.push_back(c);
        }
    }
    out.push_back(cur);
    return out;
}

int parse_int(const std::string& s) {
    try {
        std::size_t pos = 0;
        int v = std::stoi(s, &pos);
        if (pos != s.size()) throw std::invalid_argument(s);
        return v;
    } catch (const std::exception&) {
        throw Error(ErrorCode::ParseError, "bad integer '" + s + "'");
    }
}

} // namespace

VertexRole VertexRole::decode(const std::string& text) {
    auto parts = split(text, ':');
    const std::string& tag = parts[0];
    if (tag == "plain" && parts.size() == 1) return plain();
    if (tag == "group" && parts.size() == 2) return group_elem(parse_int(parts[1]));
    if (tag == "conn" && parts.size() == 3)
        return connector(parse_int(parts[1]), parse_int(parts[2]));
    if (tag == "bullet" && parts.size() == 2) return bullet(parse_int(parts[1]));
    if (tag == "gadget" && parts.size() == 4) {
        std::vector<int> path;
        if (!parts[3].empty())
            for (const auto& piece : split(parts[3], '.')) path.push_back(parse_int(piece));
        return gadget_vertex(parse_int(parts[1]), parse_int(parts[2]), std::move(path));
    }
    throw Error(ErrorCode::ParseError, "bad role '" + text + "'");
}

nlohmann::ordered_json VertexRole::to_json() const {
    nlohmann::ordered_json j;
    switch (kind) {
        case Kind::Plain:
            j["kind"] = "plain";
            break;
        case Kind::GroupElem:
            j["kind"] = "group";
            j["g"] = g;
            break;
        case Kind::Connector:
            j["kind"] = "connector";
            j["g"] = g;
            j["a"] = a;
            break;
        case Kind::GadgetVertex:
            j["kind"] = "gadget";
            j["g"] = g;
            j["a"] = a;
            j["path"] = path;
            break;
        case Kind::Bullet:
            j["kind"] = "bullet";
            j["g"] = g;
            break;
    }
    return j;
}

VertexRole VertexRole::from_json(const nlohmann::json& j) {
    if (!j.is_object() || !j.contains("kind") || !j["kind"].is_string())
        throw Error(ErrorCode::ParseError, "role must be an object with a 'kind'");
    const std::string kind = j["kind"].get<std::string>();
    try {
        if (kind == "plain") return plain();
        if (kind == "group") return group_elem(j.at("g").get<int>());
        if (kind == "connector") return connector(j.at("g").get<int>(), j.at("a").get<int>());
        if (kind == "bullet") return bullet(j.at("g").get<int>());
        if (kind == "gadget")
            return gadget_vertex(j.at("g").get<int>(), j.at("a").get<int>(),
                                 j.at("path").get<std::vector<int>>());
    } catch (const nlohmann::json::exception& e) {
        throw Error(ErrorCode::ParseError, std::string("bad role fields: ") + e.what());
    }
    throw Error(ErrorCode::ParseError, "unknown role kind '" + kind + "'");
}

// ---------------------------------------------------------------------------
// Graph

Graph Graph::build(std::vector<VertexRole> roles,
                   std::vector<std::pair<VertexId, VertexId>> edges) {
    const int n = static_cast<int>(roles.size());
    for (auto& [u, v] : edges) {
        if (u == v)
            throw Error(ErrorCode::LoopEdge, "loop at vertex " + std::to_string(u));
        if (u < 0 || u >= n || v < 0 || v >= n)
            throw Error(ErrorCode::DanglingEndpoint,
                        "edge {" + std::to_string(u) + "," + std::to_string(v) +
                            "} out of range for " + std::to_string(n) + " vertices");
        if (u > v) std::swap(u, v);
    }
    std::sort(edges.begin(), edges.end());
    for (std::size_t i = 1; i < edges.size(); ++i)
        if (edges[i] == edges[i - 1])
            throw Error(ErrorCode::DuplicateEdge,
                        "edge {" + std::to_string(edges[i].first) + "," +
                            std::to_string(edges[i].second) + "} repeated");

    Graph g;
    g.roles_ = std::move(roles);
    g.edges_ = std::move(edges);
    g.adjacency_.assign(n, {});
    for (const auto& [u, v] : g.edges_) {
        g.adjacency_[u].push_back(v);
        g.adjacency_[v].push_back(u);
    }
    for (auto& nbrs : g.adjacency_) std::sort(nbrs.begin(), nbrs.end());
    return g;
}

void Graph::check_vertex(VertexId v) const {
    if (v < 0 || v >= vertex_count())
        throw Error(ErrorCode::UnknownVertex, "vertex " + std::to_string(v));
}

const VertexRole& Graph::role(VertexId v) const {
    check_vertex(v);
    return roles_[v];
}

int Graph::degree(VertexId v) const {
    check_vertex(v);
    return static_cast<int>(adjacency_[v].size());
}

const std::vector<VertexId>& Graph::neighbors(VertexId v) const {
    check_vertex(v);
    return adjacency_[v];
}

bool Graph::has_edge(VertexId u, VertexId v) const {
    if (u < 0 || u >= vertex_count() || v < 0 || v >= vertex_count()) return false;
    const auto& nbrs = adjacency_[u];
    return std::binary_search(nbrs.begin(), nbrs.end(), v);
}

bool Graph::is_connected() const {
    const int n = vertex_count();
    if (n == 0) return false;
    std::vector<char> seen(n, 0);
    std::vector<VertexId> stack{0};
    seen[0] = 1;
    int count = 0;
    while (!stack.empty()) {
        VertexId v = stack.back();
        stack.pop_back();
        ++count;
        for (VertexId w : adjacency_[v])
            if (!seen[w]) {
                seen[w] = 1;
                stack.push_back(w);
            }
    }
    return count == n;
}

bool Graph::is_tree() const {
    return is_connected() && edge_count() == vertex_count() - 1;
}

Graph Graph::induced_subgraph(const std::vector<VertexId>& vs) const {
    std::vector<VertexId> sorted = vs;
    std::sort(sorted.begin(), sorted.end());
    sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
    std::vector<int> index(vertex_count(), -1);
    std::vector<VertexRole> roles;
    roles.reserve(sorted.size());
    for (VertexId v : sorted) {
        check_vertex(v);
        index[v] = static_cast<int>(roles.size());
        roles.push_back(roles_[v]);
    }
    std::vector<std::pair<VertexId, VertexId>> edges;
    for (const auto& [u, v] : edges_)
        if (index[u] >= 0 && index[v] >= 0) edges.emplace_back(index[u], index[v]);
    return build(std::move(roles), std::move(edges));
}

nlohmann::ordered_json Graph::to_json() const {
    nlohmann::ordered_json j;
    j["vertices"] = nlohmann::ordered_json::array();
    for (int v = 0; v < vertex_count(); ++v) {
        nlohmann::ordered_json entry;
        entry["id"] = v;
        entry["role"] = roles_[v].to_json();
        j["vertices"].push_back(std::move(entry));
    }
    j["edges"] = nlohmann::ordered_json::array();
    for (const auto& [u, v] : edges_) j["edges"].push_back({u, v});
    return j;
}

Graph Graph::from_json(const nlohmann::json& j) {
    if (!j.is_object() || !j.contains("vertices") || !j.contains("edges"))
        throw Error(ErrorCode::ParseError, "graph json needs 'vertices' and 'edges'");
    std::vector<VertexRole> roles;
    try {
        const auto& verts = j["vertices"];
        roles.resize(verts.size());
        std::vector<char> seen(verts.size(), 0);
        for (const auto& entry : verts) {
            int id = entry.at("id").get<int>();
            if (id < 0 || id >= static_cast<int>(roles.size()) || seen[id])
                throw Error(ErrorCode::ParseError,
                            "vertex ids must be dense and unique, got " + std::to_string(id));
            seen[id] = 1;
            if (entry.contains("role")) roles[id] = VertexRole::from_json(entry["role"]);
        }
        std::vector<std::pair<VertexId, VertexId>> edges;
        for (const auto& e : j["edges"]) {
            if (!e.is_array() || e.size() != 2)
                throw Error(ErrorCode::ParseError, "edge must be a pair");
            edges.emplace_back(e[0].get<int>(), e[1].get<int>());
        }
        return build(std::move(roles), std::move(edges));
    } catch (const nlohmann::json::exception& e) {
        throw Error(ErrorCode::ParseError, e.what());
    }
}

std::string Graph::to_dot() const {
    std::ostringstream os;
    os << "graph bimo {\n";
    for (int v = 0; v < vertex_count(); ++v)
        os << "  v" << v << " [label=\"" << roles_[v].label() << "\", color=\""
           << roles_[v].color() << "\", role=\"" << roles_[v].encode() << "\"];\n";
    for (const auto& [u, v] : edges_) os << "  v" << u << " -- v" << v << ";\n";
    os << "}\n";
    return os.str();
}

namespace {

// Accepts only the subset of DOT this library emits.
std::string extract_attr(const std::string& line, const std::string& key, int lineno) {
    auto pos = line.find(key + "=\"");
    if (pos == std::string::npos)
        throw Error(ErrorCode::ParseError,
                    "line " + std::to_string(lineno) + ": missing " + key + " attribute");
    pos += key.size() + 2;
    auto end = line.find('"', pos);
    if (end == std::string::npos)
        throw Error(ErrorCode::ParseError,
                    "line " + std::to_string(lineno) + ": unterminated attribute");
    return line.substr(pos, end - pos);
}

int parse_dot_vertex(const std::string& token, int lineno) {
    auto trimmed = token;
    trimmed.erase(0, trimmed.find_first_not_of(" \t"));
    trimmed.erase(trimmed.find_last_not_of(" \t;") + 1);
    if (trimmed.size() < 2 || trimmed[0] != 'v')
        throw Error(ErrorCode::ParseError,
                    "line " + std::to_string(lineno) + ": bad vertex token '" + token + "'");
    return parse_int(trimmed.substr(1));
}

} // namespace

Graph Graph::from_dot(const std::string& text) {
    std::istringstream is(text);
    std::string line;
    std::map<int, VertexRole> roles;
    std::vector<std::pair<VertexId, VertexId>> edges;
    int lineno = 0;
    while (std::getline(is, line)) {
        ++lineno;
        auto first = line.find_first_not_of(" \t");
        if (first == std::string::npos) continue;
        std::string body = line.substr(first);
        auto last = body.find_last_not_of(" \t\r");
        if (last != std::string::npos) body.erase(last + 1);
        if (body.empty() || body == "}") continue;
        if (body.rfind("graph", 0) == 0 && body.back() == '{') continue;
        auto dash = body.find("--");
        if (dash != std::string::npos) {
            edges.emplace_back(parse_dot_vertex(body.substr(0, dash), lineno),
                               parse_dot_vertex(body.substr(dash + 2), lineno));
        } else {
            auto bracket = body.find('[');
            if (bracket == std::string::npos)
                throw Error(ErrorCode::ParseError,
                            "line " + std::to_string(lineno) + ": unrecognized statement");
            int id = parse_dot_vertex(body.substr(0, bracket), lineno);
            roles[id] = VertexRole::decode(extract_attr(body, "role", lineno));
        }
    }
    std::vector<VertexRole> role_vec(roles.size());
    for (const auto& [id, role] : roles) {
        if (id < 0 || id >= static_cast<int>(role_vec.size()))
            throw Error(ErrorCode::ParseError, "vertex ids must be dense");
        role_vec[id] = role;
    }
    return build(std::move(role_vec), std::move(edges));
}

std::string Graph::serialize(const std::string& format) const {
    if (format == "json") return to_json().dump(2) + "\n";
    if (format == "dot") return to_dot();
    throw Error(ErrorCode::InvalidArgument, "unknown format '" + format + "'");
}

Graph Graph::deserialize(const std::string& text) {
    auto first = text.find_first_not_of(" \t\r\n");
    if (first == std::string::npos)
        throw Error(ErrorCode::ParseError, "empty input");
    if (text[first] == '{') {
        nlohmann::json j;
        try {
            j = nlohmann::json::parse(text);
        } catch (const nlohmann::json::parse_error& e) {
            throw Error(ErrorCode::ParseError, e.what());
        }
        // Wrapper documents (cayley/toplayer output) carry the graph inside.
        if (j.contains("graph")) return from_json(j["graph"]);
        return from_json(j);
    }
    return from_dot(text);
}

// ---------------------------------------------------------------------------
// Isomorphism

std::optional<std::vector<VertexId>> find_isomorphism(const Graph& g, const Graph& h) {
    const int n = g.vertex_count();
    if (n != h.vertex_count() || g.edge_count() != h.edge_count()) return std::nullopt;
    std::vector<int> dg(n), dh(n);
    for (int v = 0; v < n; ++v) {
        dg[v] = g.degree(v);
        dh[v] = h.degree(v);
    }
    {
        auto sg = dg, sh = dh;
        std::sort(sg.begin(), sg.end());
        std::sort(sh.begin(), sh.end());
        if (sg != sh) return std::nullopt;
    }

    std::vector<int> map(n, -1);
    std::vector<char> used(n, 0);
    // Lexicographic order over source vertices; first complete map wins.
    auto backtrack = [&](auto&& self, int v) -> bool {
        if (v == n) return true;
        for (int w = 0; w < n; ++w) {
            if (used[w] || dh[w] != dg[v]) continue;
            bool ok = true;
            for (int u = 0; u < v && ok; ++u)
                if (g.has_edge(u, v) != h.has_edge(map[u], w)) ok = false;
            if (!ok) continue;
            map[v] = w;
            used[w] = 1;
            if (self(self, v + 1)) return true;
            map[v] = -1;
            used[w] = 0;
        }
        return false;
    };
    if (backtrack(backtrack, 0)) return map;
    return std::nullopt;
}

} // namespace bimo
