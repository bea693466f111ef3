#include "doctest.h"
#include "dsrg/families.hpp"
#include "dsrg/search.hpp"

using namespace dsrg;

TEST_CASE("Petersen search equals brute force and contains the 5-cycle split") {
    Digraph p = make_graph({"petersen", {}});
    JoinSolution s = resolve_shape(p, 2, 5);

    SearchResult found = find_good_partitions(p, s);
    CHECK(found.exhausted);
    CHECK_FALSE(found.partitions.empty());

    std::vector<Partition> brute = brute_force_partitions(p, s);
    CHECK(found.partitions == brute);

    auto doc = known_partitions({"petersen", {}}, s);
    REQUIRE(doc.size() == 1);
    bool contains = false;
    for (const Partition& q : found.partitions) contains = contains || q == doc[0];
    CHECK(contains);
}

TEST_CASE("no good partition for the complement of T(6)") {
    Digraph g = make_graph({"tri_complement", {6}});
    CHECK(classify(g).params == ParameterSet{15, 6, 6, 1, 3});
    JoinSolution s = resolve_shape(g, 3, 5);
    SearchResult r = find_good_partitions(g, s);
    CHECK(r.exhausted);
    CHECK(r.partitions.empty());
    CHECK(brute_force_partitions(g, s).empty());
}

TEST_CASE("all three pairings of K4 are good") {
    Digraph k4 = make_graph({"complete", {4}});
    JoinSolution s = complete_join_solution(4, 2);
    std::vector<Partition> brute = brute_force_partitions(k4, s);
    CHECK(brute.size() == 3);
    SearchResult r = find_good_partitions(k4, s);
    CHECK(r.partitions == brute);
}

TEST_CASE("only the non-adjacent pairing of the 4-cycle survives") {
    Digraph c4 = make_graph({"lattice", {2}});
    JoinSolution s = resolve_shape(c4, 2, 2);
    std::vector<Partition> brute = brute_force_partitions(c4, s);
    REQUIRE(brute.size() == 1);
    CHECK(brute[0] == Partition::from_cells(4, {{0, 3}, {1, 2}}));
    SearchResult r = find_good_partitions(c4, s);
    CHECK(r.partitions == brute);
}

TEST_CASE("search output is deterministic across job counts") {
    Digraph g = make_graph({"a_15_5", {}});
    JoinSolution s = resolve_shape(g, 3, 5);
    SearchOptions seq, par;
    par.jobs = 4;
    SearchResult r1 = find_good_partitions(g, s, seq);
    SearchResult r2 = find_good_partitions(g, s, par);
    CHECK(r1.exhausted);
    CHECK(r2.exhausted);
    CHECK(r1.partitions == r2.partitions);
    CHECK_FALSE(r1.partitions.empty());
}

TEST_CASE("limit stops the search early and is reported") {
    Digraph k6 = make_graph({"complete", {6}});
    JoinSolution s = complete_join_solution(6, 3);
    SearchOptions opts;
    opts.limit = 2;
    SearchResult r = find_good_partitions(k6, s, opts);
    CHECK(r.partitions.size() == 2);
    CHECK_FALSE(r.exhausted);

    std::vector<Partition> all = brute_force_partitions(k6, s);
    CHECK(all.size() > 2);
    CHECK(std::vector<Partition>(all.begin(), all.begin() + 2) == r.partitions);
}

TEST_CASE("an expired deadline stops the search and is reported") {
    Digraph p = make_graph({"petersen", {}});
    JoinSolution s = resolve_shape(p, 2, 5);
    SearchOptions opts;
    opts.deadline = std::chrono::steady_clock::now() - std::chrono::seconds(1);
    SearchResult r = find_good_partitions(p, s, opts);
    CHECK_FALSE(r.exhausted);
}

TEST_CASE("search rejects shapes that are not admissible") {
    Digraph p = make_graph({"petersen", {}});
    CHECK_THROWS_AS(resolve_shape(p, 5, 2), Error);  // removed by eq2
    JoinSolution bogus{5, 2, 2, 1};
    CHECK_THROWS_AS(find_good_partitions(p, bogus), Error);
}

TEST_CASE("brute force guard") {
    CHECK(homogeneous_partition_count(2, 5) == 126);
    CHECK(homogeneous_partition_count(4, 4) == 2627625);
    Digraph g = make_graph({"a_16", {}});
    JoinSolution s = resolve_shape(g, 4, 4);
    CHECK_THROWS_AS(brute_force_partitions(g, s), Error);  // default guard 10^6
}

TEST_CASE("oracle equivalence across shipped graphs with n <= 16") {
    // raised guard: the (4,4) shapes on 16 vertices enumerate 2,627,625
    // candidates, above the default 10^6 guard
    for (const FamilySpec& spec : shipped_specs()) {
        Digraph g = make_graph(spec);
        if (g.order() > 16) continue;
        ClassifyResult c = classify(g);
        std::vector<JoinSolution> sols;
        if (c.kind == ClassifyKind::CompleteGraph) {
            for (std::int64_t a = 2; a < g.order(); ++a)
                if (g.order() % a == 0)
                    sols.push_back(complete_join_solution(g.order(), a));
        } else {
            sols = solve_eq1(c.params);
        }
        for (const JoinSolution& s : sols) {
            CAPTURE(spec.str());
            CAPTURE(s.a);
            std::vector<Partition> brute = brute_force_partitions(g, s, 4'000'000);
            SearchResult r = find_good_partitions(g, s);
            REQUIRE(r.exhausted);
            CHECK(r.partitions == brute);
        }
    }
}
