#include <catch2/catch_amalgamated.hpp>

#include "gpid/gpoly.hpp"
#include "gpid/walgebra.hpp"

using namespace gpid;

namespace {

GenPoly monomial(std::vector<int> w, std::vector<int> x, int w_dim, Rat c = 1) {
    GenPoly f(w_dim);
    f.add_term(GenMonomial(std::move(w), std::move(x)), c);
    return f;
}

} // namespace

TEST_CASE("monomial invariants") {
    CHECK_THROWS(GenMonomial({0}, {0, 1}));        // length mismatch
    GenPoly f(2);
    CHECK_THROWS(f.add_term(GenMonomial({2, -1}, {0}), 1)); // W index out of range
    CHECK(GenMonomial({-1, -1}, {0}).degree() == 1);
    // Order: variable word first, then W word.
    CHECK(GenMonomial({-1, -1, -1}, {0, 1}) < GenMonomial({-1, -1, -1}, {1, 0}));
    CHECK(GenMonomial({-1, 0, -1}, {0, 1}) < GenMonomial({0, -1, -1}, {0, 1}));
}

TEST_CASE("multiplication contracts boundary W factors") {
    FiniteAlgebra W = detail::ut2_algebra();
    int d = W.dim();
    // (x1 e11) * (e12 x2) = x1 (e11 e12) x2 = x1 e12 x2.
    GenPoly left = monomial({-1, 0}, {0}, d);
    GenPoly right = monomial({1, -1}, {1}, d);
    GenPoly prod = gp_multiply(left, right, W);
    REQUIRE(prod.terms.size() == 1);
    CHECK(prod.terms.begin()->first == GenMonomial({-1, 1, -1}, {0, 1}));
    // (x1 e12) * (e12 x2) = 0.
    CHECK(gp_multiply(monomial({-1, 1}, {0}, d), right, W).is_zero());
    // Unital boundary factors concatenate without contraction.
    GenPoly u = gp_multiply(monomial({-1, -1}, {0}, d), monomial({2, -1}, {1}, d), W);
    CHECK(u.terms.begin()->first == GenMonomial({-1, 2, -1}, {0, 1}));
}

TEST_CASE("multiplication is associative and unital") {
    FiniteAlgebra W = detail::ut2_algebra();
    int d = W.dim();
    std::vector<GenPoly> samples = {
        monomial({0, 1}, {0}, d), monomial({-1, 2}, {1}, d, Rat(3, 2)),
        monomial({2, 0}, {0}, d) , monomial({1, -1}, {1}, d)};
    for (const GenPoly& a : samples)
        for (const GenPoly& b : samples)
            for (const GenPoly& c : samples) {
                GenPoly ab_c = gp_multiply(gp_multiply(a, b, W), c, W);
                GenPoly a_bc = gp_multiply(a, gp_multiply(b, c, W), W);
                CHECK(ab_c.terms == a_bc.terms);
            }
    // The degree-0 unital monomial is a two-sided unit.
    GenPoly one(d);
    one.add_term(GenMonomial(), 1);
    for (const GenPoly& a : samples) {
        CHECK(gp_multiply(one, a, W).terms == a.terms);
        CHECK(gp_multiply(a, one, W).terms == a.terms);
    }
}

TEST_CASE("multilinear basis enumeration") {
    MultilinearBasis b23(2, 3);
    CHECK(b23.size() == 27 * 2); // d^{n+1} n!
    CHECK(MultilinearBasis(3, 1).size() == 6);
    CHECK(MultilinearBasis(1, 2).size() == 4);
    // Deterministic order: first monomial is all-zero W word with x1 x2.
    CHECK(b23.monomials.front() == GenMonomial({0, 0, 0}, {0, 1}));
    CHECK(b23.index.at(b23.monomials[17]) == 17);
    // The S_n action permutes basis monomials; trace of a nonidentity
    // permutation is 0, trace of the identity is the full size.
    MultilinearBasis b(3, 2);
    for (const Perm& sigma : all_permutations(3)) {
        int fixed = 0;
        for (const GenMonomial& m : b.monomials) {
            GenPoly f(2);
            f.add_term(m, 1);
            GenPoly g = sigma_act(sigma, f);
            REQUIRE(b.index.count(g.terms.begin()->first) == 1);
            if (g.terms.begin()->first == m) ++fixed;
        }
        CHECK(fixed == (sigma == perm_identity(3) ? b.size() : 0));
    }
}

TEST_CASE("multidegree and multilinearity") {
    GenPoly f = monomial({-1, -1, -1}, {0, 0}, 1);
    CHECK(f.multidegree() == std::vector<int>{2});
    CHECK_FALSE(f.is_multilinear(2));
    f.add_term(GenMonomial({-1, -1, -1}, {0, 1}), 1);
    CHECK_FALSE(f.multidegree().has_value());
}

TEST_CASE("full linearization") {
    // x1^2 -> x1 x2 + x2 x1.
    GenPoly sq = monomial({-1, -1, -1}, {0, 0}, 1);
    GenPoly ml = multilinearize(sq);
    CHECK(ml.terms.size() == 2);
    CHECK(ml.terms.at(GenMonomial({-1, -1, -1}, {0, 1})) == 1);
    CHECK(ml.terms.at(GenMonomial({-1, -1, -1}, {1, 0})) == 1);
    // Multidegree (2,1): blocks {x1,x2} for the old x1, {x3} for the old x2.
    GenPoly g = monomial({-1, -1, -1, -1}, {0, 1, 0}, 1);
    GenPoly mlg = multilinearize(g);
    CHECK(mlg.terms.size() == 2);
    CHECK(mlg.terms.count(GenMonomial({-1, -1, -1, -1}, {0, 2, 1})) == 1);
    CHECK(mlg.terms.count(GenMonomial({-1, -1, -1, -1}, {1, 2, 0})) == 1);
    CHECK_THROWS(multilinearize(GenPoly(1))); // not multihomogeneous (empty)
}

TEST_CASE("Capelli polynomials") {
    GenPoly cap2 = capelli(2);
    // y1 x_{s(1)} y2 x_{s(2)} y3 over s in S_2 with signs.
    CHECK(cap2.terms.size() == 2);
    CHECK(cap2.terms.at(GenMonomial(std::vector<int>(6, -1), {2, 0, 3, 1, 4})) == 1);
    CHECK(cap2.terms.at(GenMonomial(std::vector<int>(6, -1), {2, 1, 3, 0, 4})) == -1);
    CHECK(cap2.is_multilinear(5));
    CHECK(capelli(3).terms.size() == 6);
}

TEST_CASE("generalized Capelli set") {
    FiniteAlgebra W = detail::ut2_algebra();
    std::vector<GenPoly> set = generalized_capelli_set(2, W);
    CHECK(set.size() == 4 * 4 * 4); // (d + 1)^{m+1} patterns
    // The all-free member comes first and is Cap_2 itself.
    CHECK(set.front().terms == capelli(2, W.dim()).terms);
    // A fully decorated member has no y variables left.
    const GenPoly& last = set.back();
    CHECK(last.num_variables() == 2);
    for (const auto& [m, c] : last.terms) {
        CHECK(m.degree() == 2);
        for (int wi : m.w) CHECK(wi == 2); // all slots carry e22
    }
}

TEST_CASE("substitution of W elements for variables") {
    FiniteAlgebra W = detail::ut2_algebra();
    // x1 x2 with x1 := e11: e11 x1 (renumbered).
    GenPoly f = monomial({-1, -1, -1}, {0, 1}, W.dim());
    GenPoly g = substitute_w(f, 0, 0, W);
    REQUIRE(g.terms.size() == 1);
    CHECK(g.terms.begin()->first == GenMonomial({0, -1}, {0}));
    // Substituting 1_W just erases the slot.
    CHECK(substitute_w(f, 1, -1, W).terms.begin()->first == GenMonomial({-1, -1}, {0}));
    // Contraction through neighboring W factors: e12 x1 e12, x1 := e22 gives
    // e12 e22 e12 = 0 as the boundary product vanishes.
    GenPoly h = monomial({1, 1}, {0}, W.dim());
    CHECK(substitute_w(h, 0, 2, W).is_zero());
}

TEST_CASE("sign twist") {
    // One even variable (index 0), two odd (1, 2).
    auto mono = [](std::vector<int> x) {
        std::vector<int> w(x.size() + 1, -1);
        return GenMonomial(std::move(w), std::move(x));
    };
    GradedGenPoly f{GenPoly(1), {0, 1, 1}};
    f.poly.add_term(mono({0, 1, 2}), 1); // z-order (z1, z2): sign +
    f.poly.add_term(mono({2, 0, 1}), 1); // z-order (z2, z1): sign -
    GradedGenPoly t = tilde(f);
    CHECK(t.poly.terms.at(mono({0, 1, 2})) == 1);
    CHECK(t.poly.terms.at(mono({2, 0, 1})) == -1);
    CHECK(tilde(t).poly.terms == f.poly.terms);
    // No odd variables: the twist is trivial.
    GradedGenPoly even{GenPoly(1), {0, 0}};
    even.poly.add_term(mono({1, 0}), Rat(5));
    CHECK(tilde(even).poly.terms == even.poly.terms);
    // Missing an odd variable is rejected.
    GradedGenPoly bad{GenPoly(1), {1, 1}};
    bad.poly.add_term(mono({0}), 1);
    CHECK_THROWS(tilde(bad));
}

TEST_CASE("polynomial text parser") {
    GenPoly f = parse_genpoly("3/2 * w[0] x1 w[2] x2 w[0]", 3);
    REQUIRE(f.terms.size() == 1);
    CHECK(f.terms.begin()->first == GenMonomial({0, 2, 0}, {0, 1}));
    CHECK(f.terms.begin()->second == Rat(3, 2));

    GenPoly g = parse_genpoly("x1 x2 - x2 x1", 1);
    CHECK(g.terms.size() == 2);
    CHECK(g.terms.at(GenMonomial({-1, -1, -1}, {0, 1})) == 1);
    CHECK(g.terms.at(GenMonomial({-1, -1, -1}, {1, 0})) == -1);

    CHECK(parse_genpoly("x1 - x1", 1).is_zero());
    CHECK(parse_genpoly("2 x1 + x1", 1).terms.begin()->second == 3);
    CHECK_THROWS(parse_genpoly("w[5] x1", 3));
    CHECK_THROWS(parse_genpoly("x1 +", 1));
    CHECK_THROWS(parse_genpoly("w[0] w[1] x1", 3));
    CHECK_THROWS(parse_genpoly("bogus", 1));
}

TEST_CASE("rendering") {
    GenPoly f = parse_genpoly("3/2 * w[0] x1 w[2] x2 w[0]", 3);
    CHECK(f.to_string() == "3/2 w[0] x1 w[2] x2 w[0]");
    CHECK(GenPoly(1).to_string() == "0");
}
