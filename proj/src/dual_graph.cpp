#include "curvette/dual_graph.hpp"

#include <algorithm>
#include <sstream>

namespace curvette {

size_t SignedDualGraph::degree(int v) const {
    size_t d = 0;
    for (const auto& [a, b] : edges_)
        if (a == v || b == v) ++d;
    return d;
}

int SignedDualGraph::sign_of(int v) const {
    auto it = sign_.find(v);
    if (it == sign_.end())
        throw math_error(errc::invalid_event, "no vertex " + std::to_string(v));
    return it->second;
}

std::vector<int> SignedDualGraph::neighbours(int v) const {
    std::vector<int> out;
    for (const auto& [a, b] : edges_) {
        if (a == v) out.push_back(b);
        if (b == v) out.push_back(a);
    }
    std::sort(out.begin(), out.end());
    return out;
}

int SignedDualGraph::add_vertex(int sign) {
    int id = next_id_++;
    sign_[id] = sign;
    return id;
}

void SignedDualGraph::add_edge(int a, int b) {
    if (a == b) throw math_error(errc::invalid_event, "loop edge");
    if (!has_vertex(a) || !has_vertex(b))
        throw math_error(errc::invalid_event, "edge endpoint missing");
    edges_.insert({std::min(a, b), std::max(a, b)});
}

void SignedDualGraph::remove_vertex(int v) {
    sign_.erase(v);
    for (auto it = edges_.begin(); it != edges_.end();) {
        if (it->first == v || it->second == v) it = edges_.erase(it);
        else ++it;
    }
}

void SignedDualGraph::remove_edge(int a, int b) {
    edges_.erase({std::min(a, b), std::max(a, b)});
}

std::string SignedDualGraph::to_string() const {
    std::ostringstream os;
    os << "generation " << generation_ << ": " << sign_.size() << " vertices, "
       << edges_.size() << " edges\n";
    for (const auto& [id, s] : sign_) {
        os << "  v" << id << " (" << (s > 0 ? "+" : "-") << ")";
        auto nb = neighbours(id);
        if (!nb.empty()) {
            os << " --";
            for (int n : nb) os << " v" << n;
        }
        os << "\n";
    }
    return os.str();
}

std::string SignedDualGraph::to_dot() const {
    std::ostringstream os;
    os << "graph dual {\n";
    for (const auto& [id, s] : sign_)
        os << "  v" << id << " [label=\"" << (s > 0 ? "+" : "-") << "\"];\n";
    for (const auto& [a, b] : edges_) os << "  v" << a << " -- v" << b << ";\n";
    os << "}\n";
    return os.str();
}

SignedDualGraph init_graph(char w) {
    if (w != 'U' && w != 'V')
        throw math_error(errc::invalid_event, "initial region must be U or V");
    SignedDualGraph g;
    g.add_vertex(+1);
    g.generation_ = 1;
    return g;
}

SignedDualGraph apply_event(const SignedDualGraph& gin, const BlowupEvent& e) {
    SignedDualGraph g = gin;
    switch (e.kind) {
        case BlowupEvent::Kind::Case1: {
            if (!g.has_vertex(e.a) || !g.has_vertex(e.b))
                throw math_error(errc::invalid_event, "edge endpoints missing");
            if (!g.edges_.count({std::min(e.a, e.b), std::max(e.a, e.b)}))
                throw math_error(errc::invalid_event, "no such edge");
            int sa = g.sign_of(e.a), sb = g.sign_of(e.b);
            int sigma = sa * sb;
            g.remove_edge(e.a, e.b);
            int c = g.add_vertex(sb); // the middle vertex carries b's sign
            g.sign_[e.a] = sigma;
            g.sign_[e.b] = sigma;
            g.add_edge(e.a, c);
            g.add_edge(e.b, c);
            break;
        }
        case BlowupEvent::Kind::Case21: {
            if (!g.has_vertex(e.a))
                throw math_error(errc::invalid_event, "no such vertex");
            if (e.omega < 1)
                throw math_error(errc::invalid_event, "omega must be >= 1");
            auto nb = g.neighbours(e.a);
            if (nb.size() > 2)
                throw math_error(errc::invalid_event, "vertex degree exceeds 2");
            int s = g.sign_of(e.a);
            g.remove_vertex(e.a);
            // Chain of 2*omega+1 vertices: interval vertices alternate
            // s, -s, s, ...; the unbounded-interval vertices all carry s.
            std::vector<int> chain;
            for (int j = 0; j <= 2 * e.omega; ++j) {
                int sign = (j % 2 == 0) ? ((j / 2) % 2 == 0 ? s : -s) : s;
                chain.push_back(g.add_vertex(sign));
            }
            for (size_t j = 0; j + 1 < chain.size(); ++j)
                g.add_edge(chain[j], chain[j + 1]);
            if (nb.size() >= 1) g.add_edge(nb[0], chain.front());
            if (nb.size() == 2) g.add_edge(nb[1], chain.back());
            break;
        }
        case BlowupEvent::Kind::Case22FirstU: {
            if (g.sign_.size() != 1 || !g.edges_.empty())
                throw math_error(errc::invalid_event,
                                 "first-step rewrite needs the one-vertex graph");
            int v = g.sign_.begin()->first;
            g.remove_vertex(v);
            int a = g.add_vertex(+1);
            int b = g.add_vertex(+1);
            int c = g.add_vertex(-1);
            g.add_edge(a, b);
            g.add_edge(b, c);
            break;
        }
        case BlowupEvent::Kind::Case22Extend: {
            if (!g.has_vertex(e.a))
                throw math_error(errc::invalid_event, "no such vertex");
            if (g.degree(e.a) > 1)
                throw math_error(errc::invalid_event, "vertex is not an endpoint");
            int b = g.add_vertex(g.sign_of(e.a));
            g.add_edge(e.a, b);
            break;
        }
    }
    ++g.generation_;
    return g;
}

bool is_bamboo(const SignedDualGraph& g) {
    const auto& vs = g.vertices();
    if (vs.empty()) return false;
    for (const auto& [id, s] : vs)
        if (g.degree(id) > 2) return false;
    // Connectivity; with |E| = |V| - 1 this also forces acyclicity.
    if (g.edges().size() != vs.size() - 1) return false;
    std::set<int> seen;
    std::vector<int> stack{vs.begin()->first};
    while (!stack.empty()) {
        int v = stack.back();
        stack.pop_back();
        if (!seen.insert(v).second) continue;
        for (int n : g.neighbours(v)) stack.push_back(n);
    }
    return seen.size() == vs.size();
}

} // namespace curvette
