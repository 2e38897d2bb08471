#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "curvette/dual_graph.hpp"

using namespace curvette;

namespace {

std::vector<int> sign_chain(const SignedDualGraph& g) {
    // walk the bamboo from one endpoint and list signs along the way
    int start = -1;
    for (const auto& [id, s] : g.vertices())
        if (g.degree(id) <= 1) {
            start = id;
            break;
        }
    std::vector<int> out;
    int prev = -1, cur = start;
    while (cur != -1) {
        out.push_back(g.sign_of(cur));
        int next = -1;
        for (int n : g.neighbours(cur))
            if (n != prev) next = n;
        prev = cur;
        cur = next;
    }
    return out;
}

} // namespace

TEST_CASE("the initial graph is one positive vertex") {
    for (char w : {'U', 'V'}) {
        SignedDualGraph g = init_graph(w);
        CHECK(g.vertices().size() == 1);
        CHECK(g.edges().empty());
        CHECK(g.generation() == 1);
        CHECK(g.vertices().begin()->second == 1);
        CHECK(is_bamboo(g));
    }
}

TEST_CASE("the first-step rewrite yields the three-vertex chain") {
    SignedDualGraph g = apply_event(init_graph('U'), BlowupEvent::first_step_u());
    CHECK(g.vertices().size() == 3);
    CHECK(g.edges().size() == 2);
    CHECK(is_bamboo(g));
    auto signs = sign_chain(g);
    bool fwd = signs == std::vector<int>{1, 1, -1};
    bool bwd = signs == std::vector<int>{-1, 1, 1};
    CHECK((fwd || bwd));
    CHECK_THROWS_AS(static_cast<void>(apply_event(g, BlowupEvent::first_step_u())),
                    math_error);
}

TEST_CASE("splitting an edge subdivides a chain") {
    SignedDualGraph g = apply_event(init_graph('U'), BlowupEvent::first_step_u());
    auto e = *g.edges().begin();
    SignedDualGraph g2 = apply_event(g, BlowupEvent::split_edge(e.first, e.second));
    CHECK(g2.vertices().size() == 4);
    CHECK(g2.edges().size() == 3);
    CHECK(is_bamboo(g2));
    // the middle vertex carries the second endpoint's previous sign, and the
    // endpoints now carry the product of their previous signs
    int sa = g.sign_of(e.first), sb = g.sign_of(e.second);
    CHECK(g2.sign_of(e.first) == sa * sb);
    CHECK(g2.sign_of(e.second) == sa * sb);
    int middle = -1;
    for (const auto& [id, s] : g2.vertices())
        if (!g.has_vertex(id)) middle = id;
    REQUIRE(middle >= 0);
    CHECK(g2.sign_of(middle) == sb);
    CHECK_THROWS_AS(static_cast<void>(apply_event(g2, BlowupEvent::split_edge(middle, middle))),
                    math_error);
}

TEST_CASE("an isolated vertex becomes an alternating bamboo") {
    SignedDualGraph g = init_graph('V');
    SignedDualGraph g2 = apply_event(g, BlowupEvent::bamboo(g.vertices().begin()->first, 3));
    CHECK(g2.vertices().size() == 7);
    CHECK(g2.edges().size() == 6);
    CHECK(is_bamboo(g2));
    auto signs = sign_chain(g2);
    std::vector<int> expect{1, 1, -1, 1, 1, 1, -1};
    std::vector<int> rev(expect.rbegin(), expect.rend());
    CHECK((signs == expect || signs == rev));
}

TEST_CASE("interior bamboo replacement splices into both edges") {
    SignedDualGraph g = apply_event(init_graph('U'), BlowupEvent::first_step_u());
    // find the middle vertex
    int mid = -1;
    for (const auto& [id, s] : g.vertices())
        if (g.degree(id) == 2) mid = id;
    REQUIRE(mid >= 0);
    SignedDualGraph g2 = apply_event(g, BlowupEvent::bamboo(mid, 2));
    CHECK(g2.vertices().size() == 2 + 5);
    CHECK(g2.edges().size() == g.edges().size() + 4);
    CHECK(is_bamboo(g2));
    CHECK(!g2.has_vertex(mid));
}

TEST_CASE("extending an endpoint keeps ids stable") {
    SignedDualGraph g = apply_event(init_graph('V'), BlowupEvent::extend(0));
    CHECK(g.vertices().size() == 2);
    CHECK(is_bamboo(g));
    SignedDualGraph g2 = apply_event(g, BlowupEvent::extend(1));
    CHECK(g2.vertices().size() == 3);
    for (const auto& [id, s] : g.vertices()) CHECK(g2.has_vertex(id));
    // a middle vertex is not an endpoint
    CHECK_THROWS_WITH_AS(static_cast<void>(apply_event(g2, BlowupEvent::extend(1))),
                         doctest::Contains("invalid-event"), math_error);
}

TEST_CASE("random valid event sequences preserve the bamboo shape") {
    std::mt19937 rng(73);
    std::uniform_int_distribution<int> kind(0, 2), om(1, 3);
    for (int trial = 0; trial < 60; ++trial) {
        SignedDualGraph g = init_graph(trial % 2 == 0 ? 'U' : 'V');
        int events = 1 + static_cast<int>(rng() % 30);
        for (int e = 0; e < events; ++e) {
            size_t nv = g.vertices().size(), ne = g.edges().size();
            int k = kind(rng);
            if (k == 0 && !g.edges().empty()) {
                auto it = g.edges().begin();
                std::advance(it, static_cast<long>(rng() % g.edges().size()));
                g = apply_event(g, BlowupEvent::split_edge(it->first, it->second));
                CHECK(g.vertices().size() == nv + 1);
                CHECK(g.edges().size() == ne + 1);
            } else if (k == 1) {
                auto it = g.vertices().begin();
                std::advance(it, static_cast<long>(rng() % g.vertices().size()));
                int omega = om(rng);
                g = apply_event(g, BlowupEvent::bamboo(it->first, omega));
                CHECK(g.vertices().size() == nv + 2 * static_cast<size_t>(omega));
                CHECK(g.edges().size() == ne + 2 * static_cast<size_t>(omega));
            } else {
                // pick an endpoint
                int endpoint = -1;
                for (const auto& [id, s] : g.vertices())
                    if (g.degree(id) <= 1) endpoint = id;
                g = apply_event(g, BlowupEvent::extend(endpoint));
                CHECK(g.vertices().size() == nv + 1);
                CHECK(g.edges().size() == ne + 1);
            }
            REQUIRE(is_bamboo(g));
        }
    }
}
