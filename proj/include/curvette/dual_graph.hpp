/*
 * dual_graph.hpp
 * The signed dual graph of a blowup sequence as a pure combinatorial
 * rewriting system. Events name the case of the rewrite; geometric
 * admissibility is the caller's business. Conventions fixed here:
 *   - case 2.1 with two edges: the smaller-id pre-existing neighbour attaches
 *     to the first end of the new bamboo (the end carrying the old sign);
 *   - case 2.2(b): the appended vertex carries the sign of the endpoint it
 *     attaches to.
 */
#pragma once

#include <map>
#include <set>
#include <string>
#include <vector>

#include "curvette/errors.hpp"

namespace curvette {

class SignedDualGraph {
public:
    struct Vertex {
        int id;
        int sign; // +1 or -1
    };

    const std::map<int, int>& vertices() const { return sign_; } // id -> sign
    const std::set<std::pair<int, int>>& edges() const { return edges_; } // a < b
    int generation() const { return generation_; }

    size_t degree(int v) const;
    bool has_vertex(int v) const { return sign_.count(v) > 0; }
    int sign_of(int v) const;
    std::vector<int> neighbours(int v) const;

    std::string to_string() const;
    std::string to_dot() const;

private:
    friend SignedDualGraph init_graph(char);
    friend SignedDualGraph apply_event(const SignedDualGraph&, const struct BlowupEvent&);

    int add_vertex(int sign);
    void add_edge(int a, int b);
    void remove_vertex(int v);
    void remove_edge(int a, int b);

    std::map<int, int> sign_;
    std::set<std::pair<int, int>> edges_;
    int next_id_ = 0;
    int generation_ = 0;
};

struct BlowupEvent {
    enum class Kind { Case1, Case21, Case22FirstU, Case22Extend } kind;
    int a = -1, b = -1; // case 1: the edge; case 2.1 / 2.2(b): the vertex a
    int omega = 1;      // case 2.1: number of centers in the affected interval

    static BlowupEvent split_edge(int a, int b) { return {Kind::Case1, a, b, 0}; }
    static BlowupEvent bamboo(int a, int omega) { return {Kind::Case21, a, -1, omega}; }
    static BlowupEvent first_step_u() { return {Kind::Case22FirstU, -1, -1, 0}; }
    static BlowupEvent extend(int a) { return {Kind::Case22Extend, a, -1, 0}; }
};

// One vertex of sign +, no edges (the first blowup's graph for either W).
SignedDualGraph init_graph(char w /* 'U' or 'V' */);

// Pure rewrite; errors invalid-event when the event does not match the graph.
SignedDualGraph apply_event(const SignedDualGraph& g, const BlowupEvent& e);

// Connected, acyclic, maximum degree 2.
bool is_bamboo(const SignedDualGraph& g);

} // namespace curvette
