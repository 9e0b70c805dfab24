#include <catch2/catch_amalgamated.hpp>

#include "gpid/walg_io.hpp"
#include "gpid/walgebra.hpp"

using namespace gpid;

TEST_CASE("upper triangular 2x2 structure constants") {
    WAction act = builtin_ut2_self();
    CHECK(act.A.dim() == 3);
    CHECK(act.W.dim() == 3);
    // e11 e12 = e12, e12 e22 = e12, e12 e11 = 0.
    CHECK(act.A.multiply(act.A.basis_vec(0), act.A.basis_vec(1)) == act.A.basis_vec(1));
    CHECK(act.A.multiply(act.A.basis_vec(1), act.A.basis_vec(2)) == act.A.basis_vec(1));
    CHECK(act.A.multiply(act.A.basis_vec(1), act.A.basis_vec(0)) == act.A.zero());
    CHECK(act.A.multiply(act.A.basis_vec(1), act.A.basis_vec(1)) == act.A.zero());
    auto unity = act.A.find_unity();
    REQUIRE(unity.has_value());
    RatVec expected = act.A.zero();
    expected[0] = 1;
    expected[2] = 1;
    CHECK(*unity == expected);
}

TEST_CASE("built-in actions validate") {
    CHECK_NOTHROW(builtin_ut2_self());
    CHECK_NOTHROW(builtin_ut2_D());
    CHECK_NOTHROW(builtin_ut2_F());
    CHECK_NOTHROW(builtin_matrix(2));
    CHECK_NOTHROW(grassmann_truncated(3));
    CHECK(builtin_ut2_D().W.dim() == 2);
    CHECK(builtin_ut2_F().W.dim() == 1);
    CHECK(builtin_matrix(2).A.dim() == 4);
}

TEST_CASE("associativity validation catches errors") {
    FiniteAlgebra bad;
    bad.basis = {"a", "b"};
    bad.mult.assign(2, std::vector<RatVec>(2, RatVec(2, 0)));
    bad.mult[0][0][1] = 1; // a*a = b
    bad.mult[1][0][0] = 1; // b*a = a, then (aa)a = a but a(aa) = ab = 0
    CHECK_THROWS(bad.validate_associativity());
}

TEST_CASE("grassmann truncation anticommutes") {
    WAction e = grassmann_truncated(3);
    CHECK(e.A.dim() == 8);
    // e1 * e2 = -e2 * e1, e1 * e1 = 0.
    RatVec e1 = e.A.basis_vec(1), e2 = e.A.basis_vec(2);
    RatVec ab = e.A.multiply(e1, e2), ba = e.A.multiply(e2, e1);
    for (int t = 0; t < 8; ++t) CHECK(ab[t] == -ba[t]);
    CHECK(e.A.multiply(e1, e1) == e.A.zero());
    CHECK(e.parity[0] == 0);
    CHECK(e.parity[1] == 1);
    CHECK(e.parity[3] == 0); // e1e2
    CHECK_NOTHROW(e.validate_grading());
}

TEST_CASE("ordinary action wraps any algebra with scalar W") {
    WAction ord = ordinary_action("m2_ordinary", detail::matrix_algebra(2));
    CHECK(ord.W.dim() == 1);
    CHECK(ord.act_left(ord.W.basis_vec(0), ord.A.basis_vec(2)) == ord.A.basis_vec(2));
}

TEST_CASE("pi map on the self action is the identity embedding") {
    WAction act = builtin_ut2_self();
    auto pi = pi_map(act);
    for (int i = 0; i < act.W.dim(); ++i) CHECK(pi[i] == act.A.basis_vec(i));
    // The scalar action also has a pi map (1 -> 1_A).
    CHECK_NOTHROW(pi_map(builtin_ut2_F()));
}

TEST_CASE("semidirect product structure") {
    WAction base = builtin_ut2_D();
    WAction sd = semidirect(base);
    CHECK(sd.A.dim() == base.A.dim() + base.W.dim());
    auto unity = sd.A.find_unity();
    REQUIRE(unity.has_value());
    // unity = (0, 1_W) and A embeds as an ideal.
    for (int i = 0; i < base.A.dim(); ++i) CHECK((*unity)[i] == 0);
    for (int i = 0; i < sd.A.dim(); ++i)
        for (int j = 0; j < base.A.dim(); ++j) {
            RatVec prod = sd.A.multiply(sd.A.basis_vec(i), sd.A.basis_vec(j));
            for (int t = base.A.dim(); t < sd.A.dim(); ++t) CHECK(prod[t] == 0);
        }
}

TEST_CASE("action axiom violations are caught") {
    WAction act = builtin_ut2_self();
    act.left[1][2] = act.A.basis_vec(0); // corrupt e12 * e22
    CHECK_THROWS(act.validate());
}

TEST_CASE("algebra document round trip") {
    WAction act = builtin_ut2_D();
    nlohmann::json doc = action_to_json(act);
    WAction back = load_algebra(doc);
    CHECK(back.A.basis == act.A.basis);
    CHECK(back.W.basis == act.W.basis);
    CHECK(back.A.mult == act.A.mult);
    CHECK(back.left == act.left);
    CHECK(back.right == act.right);
    CHECK(back.parity == act.parity);

    WAction graded = grassmann_truncated(2);
    WAction graded_back = load_algebra(action_to_json(graded));
    CHECK(graded_back.parity == graded.parity);
}

TEST_CASE("algebra document rejects malformed input") {
    nlohmann::json doc = action_to_json(builtin_ut2_F());
    nlohmann::json missing = doc;
    missing.erase("left");
    CHECK_THROWS(load_algebra(missing));
    nlohmann::json badshape = doc;
    badshape["A"]["dim"] = 5;
    CHECK_THROWS(load_algebra(badshape));
    nlohmann::json badrat = doc;
    badrat["A"]["mult"][0][0][0] = "not-a-number";
    CHECK_THROWS(load_algebra(badrat));
}

TEST_CASE("rational parsing") {
    CHECK(rat_from_string("3/2") == Rat(3, 2));
    CHECK(rat_from_string("-7") == Rat(-7));
    CHECK(rat_to_string(Rat(3, 2)) == "3/2");
    CHECK(rat_to_string(Rat(4, 2)) == "2");
}
