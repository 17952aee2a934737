#include <doctest.h>

#include "circletk/completion.hpp"
#include "circletk/families.hpp"

using namespace circletk;

TEST_CASE("interval and proper interval recognition") {
    CHECK_FALSE(is_interval(cycle_graph(4)).interval);
    CHECK(is_interval(path_graph(5)).interval);
    auto netcheck = is_interval(net());
    CHECK_FALSE(netcheck.interval);
    CHECK(netcheck.at.has_value());

    CHECK_FALSE(is_proper_interval(claw()).proper_interval);
    CHECK(is_proper_interval(path_graph(5)).proper_interval);
    CHECK_FALSE(is_proper_interval(tent()).proper_interval);
}

TEST_CASE("minimal separators") {
    auto p3 = minimal_separators(path_graph(3));
    REQUIRE(p3.size() == 1);
    CHECK(p3[0].separator == std::vector<int>{1});

    auto cl = minimal_separators(claw());
    REQUIRE(cl.size() == 1);
    CHECK(cl[0].separator == std::vector<int>{0});
    CHECK(cl[0].components.size() == 3);

    // chordal graphs have clique separators
    for (auto g : {tent(), net(), path_graph(6)}) {
        for (auto& ms : minimal_separators(g))
            for (size_t a = 0; a < ms.separator.size(); a++)
                for (size_t b = a + 1; b < ms.separator.size(); b++)
                    CHECK(g.has_edge(ms.separator[a], ms.separator[b]));
    }
}

TEST_CASE("nuclei and orderings") {
    Graph p4 = path_graph(4);
    auto side1 = nucleus(p4, {1}, {0});
    CHECK(side1 == std::vector<int>{0});
    auto side2 = nucleus(p4, {1}, {2, 3});
    CHECK(side2 == std::vector<int>{2});

    // incomparable S-neighborhoods have no nuclear ordering
    Graph g(4);
    g.add_edge(0, 2); // nucleus x=0 ~ s1=2
    g.add_edge(1, 3); // nucleus y=1 ~ s2=3
    g.add_edge(0, 1);
    CHECK_FALSE(nuclear_ordering(g, {0, 1}, {2, 3}).has_value());
    CHECK(nuclear_ordering(g, {0}, {2, 3}).has_value());
}

TEST_CASE("fill edge classification on the claw") {
    Graph g = claw();
    Graph h = claw();
    h.add_edge(1, 2);
    auto inst = make_completion(g, h);
    REQUIRE(inst.fill.size() == 1);
    auto t = classify_fill_edge(inst, {1, 2});
    CHECK(t.type == 1);
    CHECK(check_necessary_condition(inst).pass);
    auto min = is_minimal_completion(inst, 20);
    CHECK(min.minimal);
}

TEST_CASE("type IV edges fail the necessary condition") {
    // K4 minus an edge completed to K4: the fill edge joins two simplicial
    // vertices that no minimal separator splits
    Graph g(4);
    g.add_edge(0, 1);
    g.add_edge(0, 2);
    g.add_edge(0, 3);
    g.add_edge(1, 2);
    g.add_edge(1, 3);
    Graph h = complete_graph(4);
    auto inst = make_completion(g, h);
    REQUIRE(inst.fill.size() == 1);
    auto t = classify_fill_edge(inst, inst.fill[0]);
    CHECK(t.type == 4);
    CHECK_FALSE(check_necessary_condition(inst).pass);
}

TEST_CASE("non-minimal completions are detected") {
    Graph g = claw();
    Graph h = claw();
    h.add_edge(1, 2);
    h.add_edge(1, 3);
    auto inst = make_completion(g, h);
    auto min = is_minimal_completion(inst, 20);
    CHECK_FALSE(min.minimal);
    CHECK(min.removable.size() == 1);
}

TEST_CASE("empty fill is trivially minimal") {
    Graph g = path_graph(4);
    auto inst = make_completion(g, g);
    CHECK(inst.fill.empty());
    CHECK(check_necessary_condition(inst).pass);
    CHECK(is_minimal_completion(inst, 20).minimal);
}
