#include "doctest.h"
#include "dsrg/catalog.hpp"
#include "dsrg/families.hpp"
#include "dsrg/search.hpp"

using namespace dsrg;

TEST_CASE("every shipped family classifies to its documented parameters") {
    for (const FamilySpec& spec : shipped_specs()) {
        CAPTURE(spec.str());
        Digraph g = make_graph(spec);
        ClassifyResult c = classify(g);
        if (spec.id == "complete") {
            CHECK(c.kind == ClassifyKind::CompleteGraph);
            CHECK(c.params.n == documented_params(spec).n);
        } else {
            REQUIRE(c.strongly_regular());
            CHECK(c.params == documented_params(spec));
        }
    }
}

TEST_CASE("family worked examples") {
    CHECK(classify(make_graph({"jorgensen", {3, 1}})).params ==
          ParameterSet{8, 3, 2, 1, 1});
    CHECK(classify(make_graph({"petersen", {}})).params == ParameterSet{10, 3, 3, 0, 1});
    CHECK(classify(make_graph({"duval", {2}})).params == ParameterSet{6, 2, 1, 0, 1});
    CHECK(classify(make_graph({"lattice", {3}})).params == ParameterSet{9, 4, 4, 1, 2});
    CHECK(classify(make_graph({"hoffman_singleton", {}})).params ==
          ParameterSet{50, 7, 7, 0, 1});
}

TEST_CASE("family parameter validation") {
    CHECK_THROWS_AS(make_graph({"jorgensen", {4, 2}}), Error);  // 2 does not divide k-1=3
    CHECK_THROWS_AS(make_graph({"triangular", {3}}), Error);
    CHECK_THROWS_AS(make_graph({"duval", {0}}), Error);
}

TEST_CASE("every documented partition is good and joins per the formula") {
    for (const FamilySpec& spec : shipped_specs()) {
        Digraph g = make_graph(spec);
        ClassifyResult c = classify(g);
        std::vector<JoinSolution> sols;
        if (c.kind == ClassifyKind::CompleteGraph) {
            for (std::int64_t a = 2; a <= g.order(); ++a)
                if (g.order() % a == 0)
                    sols.push_back(complete_join_solution(g.order(), a));
        } else {
            sols = solve_eq1(c.params);
        }
        for (const JoinSolution& s : sols) {
            for (const Partition& pi : known_partitions(spec, s)) {
                CAPTURE(spec.str());
                CAPTURE(s.a);
                CHECK(pi.cell_count() == s.a);
                CHECK(pi.cell_size() == s.b);
                CHECK(is_good_partition(g, pi));
            }
        }
    }
}

TEST_CASE("Jorgensen lemma partitions for every mu | k-1, k <= 9") {
    for (std::int64_t k = 3; k <= 9; ++k)
        for (std::int64_t mu = 1; mu < k - 1; ++mu) {
            if ((k - 1) % mu != 0) continue;
            FamilySpec spec{"jorgensen", {k, mu}};
            Digraph g = make_graph(spec);
            ClassifyResult c = classify(g);
            REQUIRE_MESSAGE(c.strongly_regular(), spec.str());

            std::int64_t a1 = (k - 1) / mu;
            if (a1 >= 2) {
                JoinSolution s = resolve_shape(g, a1, k + 1);
                auto parts = known_partitions(spec, s);
                REQUIRE_MESSAGE(parts.size() == 1, spec.str());
                CHECK(is_good_partition(g, parts[0]));
            }
            if ((mu == 1 || mu == 2) && (k + 1) % mu == 0 && k - 1 >= 2) {
                JoinSolution s = resolve_shape(g, (k + 1) / mu, k - 1);
                auto parts = known_partitions(spec, s);
                REQUIRE_MESSAGE(parts.size() == 1, spec.str());
                CHECK(is_good_partition(g, parts[0]));
            }
        }
}

TEST_CASE("Hoffman-Singleton cells induce Petersen graphs") {
    FamilySpec spec{"hoffman_singleton", {}};
    Digraph g = make_graph(spec);
    JoinSolution s = resolve_shape(g, 5, 10);
    auto parts = known_partitions(spec, s);
    REQUIRE(parts.size() == 1);
    CHECK(is_good_partition(g, parts[0]));

    for (const auto& cell : parts[0].cells()) {
        DenseBinaryMatrix sub(10, 10);
        for (int i = 0; i < 10; ++i)
            for (int j = 0; j < 10; ++j)
                if (g.arc(cell[i], cell[j])) sub.set(i, j, true);
        ClassifyResult c = classify(Digraph(std::move(sub)));
        CHECK(c.params == ParameterSet{10, 3, 3, 0, 1});
    }
}

TEST_CASE("group tables satisfy the axioms") {
    cyclic_group(1).validate();
    cyclic_group(7).validate();
    dihedral_group(5).validate();
    symmetric_group_4().validate();
    metacyclic_group_21().validate();
    elementary_abelian_2(3).validate();
    direct_product(cyclic_group(4), cyclic_group(4)).validate();
}

TEST_CASE("metacyclic group obeys x y^2 = y x") {
    GroupTable g = metacyclic_group_21();
    int x = g.element("x"), y = g.element("y"), y2 = g.element("y^2");
    CHECK(g.op(x, y2) == g.op(y, x));
}

TEST_CASE("cayley digraph examples") {
    // Z5 with X = {1} is the directed 5-cycle
    GroupTable z5 = cyclic_group(5);
    Digraph c5 = cayley_digraph(z5, {1});
    for (int v = 0; v < 5; ++v) {
        CHECK(c5.out_degree(v) == 1);
        CHECK(c5.arc(v, (v + 1) % 5));
    }

    CHECK(classify(make_graph({"dihedral", {5}})).params == ParameterSet{10, 4, 2, 1, 2});
    CHECK(classify(make_graph({"s4", {2}})).params == ParameterSet{24, 9, 7, 2, 4});

    CHECK_THROWS_AS(cayley_digraph(z5, {0}), Error);  // identity in the set
}

TEST_CASE("family ids are validated") {
    CHECK_THROWS_AS(make_graph({"nonesuch", {}}), Error);
    CHECK_THROWS_AS(parse_family("s4", {7}), Error);
    CHECK_THROWS_AS(parse_family("dihedral", {6}), Error);  // even n
}
