#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <lenrep/algebra.hpp>

#include "test_helpers.hpp"

using namespace lenrep;

TEST_CASE("Z_3, no relations, level 4: dim 12, one path of each length from each vertex") {
    auto a = fixtures::zn(3, 4, 5);
    CHECK(a->dim() == 12);
    CHECK(a->dim() == fixtures::count_paths_below(a->quiver(), 4));
    // dim A_l = n*l for the relation-free cycle
    for (unsigned l = 1; l <= 6; ++l) CHECK(fixtures::zn(3, l, 5)->dim() == 3 * l);
}

TEST_CASE("loop with x^2 = 0 has dim 2 at any level >= 2") {
    for (unsigned l : {2u, 3u, 5u}) {
        auto a = fixtures::loop_square_zero(l, 3);
        CHECK(a->dim() == 2);
    }
}

TEST_CASE("alpha beta = 0 example at level 3: brute-force path quotient oracle") {
    auto a = fixtures::alpha_beta_zero(3, 5);
    // oracle: all paths of length < 3 minus the rank of the relation span.
    // paths: e1, e2, alpha, beta, alpha^2, beta-then-alpha; the last is killed.
    std::size_t total = fixtures::count_paths_below(a->quiver(), 3);
    CHECK(total == 6);
    CHECK(a->dim() == 5);
    // the killed path rewrites to zero
    Path dead = Path::from_names(a->quiver(), {"beta", "alpha"});
    CHECK(a->is_zero_elem(a->reduce_path(dead)));
    CHECK_FALSE(a->basis_position(dead).has_value());
}

TEST_CASE("commutative square: the two length-2 paths are identified") {
    auto a = fixtures::commutative_square(3, 3);
    CHECK(a->dim() == 9);  // 4 + 4 + 1
    Path ca = Path::from_names(a->quiver(), {"a", "c"});
    Path db = Path::from_names(a->quiver(), {"b", "d"});
    CHECK(a->reduce_path(ca) == a->reduce_path(db));
    CHECK_FALSE(a->is_zero_elem(a->reduce_path(ca)));
}

TEST_CASE("relations validate") {
    Quiver q({"1", "2"}, {{"a", "1", "2"}, {"b", "2", "1"}, {"c", "1", "1"}});
    // non-parallel terms rejected
    CHECK_THROWS(Relation::make({{1, Path::from_names(q, {"a", "b"})},
                                 {1, Path::from_names(q, {"b", "a"})}},
                                5));
    // length-1 terms rejected
    CHECK_THROWS(Relation::make({{1, Path::from_names(q, {"c"})}}, 5));
    // non-composing arrow sequences rejected
    CHECK_THROWS(Path::from_names(q, {"a", "a"}));
    // non-prime characteristic rejected
    CHECK_THROWS(make_algebra(q, {}, 2, 4));
    CHECK_THROWS(make_algebra(q, {}, 0, 5));
}

TEST_CASE("every relation evaluates to zero in the quotient") {
    auto algs = {fixtures::alpha_beta_zero(4, 3), fixtures::commutative_square(4, 5),
                 fixtures::loop_square_zero(6, 2)};
    for (const auto& a : algs)
        for (const auto& r : a->relations()) CHECK(a->is_zero_elem(a->reduce_relation(r)));
}

TEST_CASE("associativity holds exhaustively on the corpus") {
    CHECK(fixtures::zn(3, 4, 5)->verify_associativity());
    CHECK(fixtures::alpha_beta_zero(3, 2)->verify_associativity());
    CHECK(fixtures::commutative_square(3, 3)->verify_associativity());
    CHECK(fixtures::two_loop(3, 2)->verify_associativity());
    // a non-homogeneous relation set: x^3 = y^2 on a two-loop vertex
    Quiver q({"1"}, {{"x", "1", "1"}, {"y", "1", "1"}});
    Relation r = Relation::make({{1, Path::from_names(q, {"x", "x", "x"})},
                                 {-1, Path::from_names(q, {"y", "y"})}},
                                5);
    auto a = make_algebra(q, {r}, 5, 5);
    CHECK(a->verify_associativity());
    CHECK(a->is_zero_elem(a->reduce_relation(r)));
}

TEST_CASE("dim A_l is non-decreasing in the level") {
    auto make = [](unsigned l) { return fixtures::alpha_beta_zero(l, 3)->dim(); };
    std::size_t prev = 0;
    for (unsigned l = 1; l <= 6; ++l) {
        std::size_t d = make(l);
        CHECK(d >= prev);
        prev = d;
    }
}

TEST_CASE("unit acts as identity") {
    auto a = fixtures::commutative_square(3, 5);
    AlgElem one = a->unit();
    for (std::size_t k = 0; k < a->dim(); ++k) {
        AlgElem b = a->zero_elem();
        b[k] = 1;
        CHECK(a->multiply(one, b) == b);
        CHECK(a->multiply(b, one) == b);
    }
}

TEST_CASE("corner dimensions on the cycle") {
    auto a = fixtures::zn(3, 4, 5);
    int v1 = a->quiver().vertex_index("1");
    int v2 = a->quiver().vertex_index("2");
    // paths 1 -> 1 of length < 4: lengths 0 and 3
    CHECK(corner(*a, v1, v1).basis_positions.size() == 2);
    // paths 1 -> 2: the single arrow
    CHECK(corner(*a, v1, v2).basis_positions.size() == 1);
    // at level 1 each diagonal corner is the idempotent alone
    auto b = fixtures::zn(3, 1, 5);
    CHECK(corner(*b, 0, 0).basis_positions.size() == 1);
    CHECK_THROWS(corner(*a, 0, 17));
}

TEST_CASE("corner action matrices compose with the algebra product") {
    auto a = fixtures::zn(3, 6, 3);
    auto c = corner(*a, 0, 0);  // e_1 A e_1, paths of lengths 0 and 3
    REQUIRE(c.basis_positions.size() == 2);
    // right action of the length-3 returning path sends eps -> that path, path -> 0
    const auto& act = c.right_action[1];
    CHECK(act(1, 0) == 1);
    CHECK(act(0, 0) == 0);
    CHECK(act(0, 1) == 0);
    CHECK(act(1, 1) == 0);
}

TEST_CASE("radical power windows") {
    auto a = fixtures::zn(3, 4, 5);
    CHECK(a->radical_power_positions(0).size() == 12);
    CHECK(a->radical_power_positions(3).size() == 3);
    CHECK(a->radical_power_positions(4).empty());
}

TEST_CASE("R^a * R^b lands in R^{a+b} on basis elements") {
    for (const auto& a : {fixtures::zn(3, 5, 3), fixtures::alpha_beta_zero(4, 3)}) {
        for (unsigned s = 0; s <= a->level(); ++s)
            for (unsigned t = 0; s + t <= a->level(); ++t) {
                auto ra = a->radical_power_positions(s);
                auto rb = a->radical_power_positions(t);
                auto rc = a->radical_power_positions(s + t);
                for (auto i : ra)
                    for (auto j : rb) {
                        AlgElem prod = a->product(i, j);
                        for (std::size_t k = 0; k < a->dim(); ++k) {
                            if (prod[k] == 0) continue;
                            bool in_window = std::find(rc.begin(), rc.end(), k) != rc.end();
                            CHECK(in_window);
                        }
                    }
            }
    }
}

TEST_CASE("radical power span agrees with the window for homogeneous relations") {
    auto a = fixtures::alpha_beta_zero(4, 3);
    for (unsigned m = 0; m <= 4; ++m) {
        auto span = radical_power_span(*a, m);
        CHECK(span.cols() == a->radical_power_positions(m).size());
    }
}

TEST_CASE("opposite algebra mirrors dimensions and corners") {
    auto a = fixtures::alpha_beta_zero(3, 5);
    auto op = opposite(*a);
    CHECK(op->dim() == a->dim());
    // corners transpose: e_j A e_i = e_i A^op e_j
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j)
            CHECK(a->corner_positions(i, j).size() == op->corner_positions(j, i).size());
    // the anti-isomorphism reverses products
    for (std::size_t i = 0; i < a->dim(); ++i)
        for (std::size_t j = 0; j < a->dim(); ++j) {
            AlgElem u = a->zero_elem(), v = a->zero_elem();
            u[i] = 1;
            v[j] = 1;
            AlgElem lhs = to_opposite(*a, *op, a->multiply(u, v));
            AlgElem rhs = op->multiply(to_opposite(*a, *op, v), to_opposite(*a, *op, u));
            CHECK(lhs == rhs);
        }
}
