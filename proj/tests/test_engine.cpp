#include <catch2/catch_amalgamated.hpp>

#include "gpid/engine.hpp"

using namespace gpid;

namespace {

// 2x2 diagonal matrices with the scalar W-action: commutative reference.
WAction diagonal_algebra() {
    FiniteAlgebra d;
    d.basis = {"e11", "e22"};
    d.mult.assign(2, std::vector<RatVec>(2, RatVec(2, 0)));
    d.mult[0][0][0] = 1;
    d.mult[1][1][1] = 1;
    return ordinary_action("diag2", d);
}

SchurExpansion table(int n, std::vector<std::pair<Partition, int>> rows) {
    SchurExpansion exp(n);
    for (auto& [lambda, m] : rows) exp.add(lambda, m);
    return exp;
}

} // namespace

TEST_CASE("evaluation of monomials") {
    WAction act = builtin_ut2_self();
    // e12 x1 e12 evaluates to e12 a e12 = 0 for every basis a.
    GenPoly f = parse_genpoly("w[1] x1 w[1]", 3);
    for (int i = 0; i < 3; ++i)
        CHECK(evaluate(f, act, {act.A.basis_vec(i)}) == act.A.zero());
    // e11 x1 e22 at e12 gives e12.
    GenPoly g = parse_genpoly("w[0] x1 w[2]", 3);
    CHECK(evaluate(g, act, {act.A.basis_vec(1)}) == act.A.basis_vec(1));
    CHECK(evaluate(g, act, {act.A.basis_vec(0)}) == act.A.zero());
}

TEST_CASE("identity testing") {
    WAction ut2 = builtin_ut2_self();
    CHECK(is_identity(parse_genpoly("w[1] x1 w[1]", 3), ut2));
    CHECK_FALSE(is_identity(parse_genpoly("x1", 3), ut2));
    // Commutativity on the diagonal algebra, not on UT2.
    WAction diag = diagonal_algebra();
    CHECK(is_identity(parse_genpoly("x1 x2 - x2 x1", 1), diag));
    CHECK_FALSE(is_identity(parse_genpoly("x1 x2 - x2 x1", 1), builtin_ut2_F()));
    // Non-multilinear input routes through linearization: x1^2 x2 - x2 x1^2
    // is an identity of the commutative algebra.
    CHECK(is_identity(parse_genpoly("x1 x1 x2 - x2 x1 x1", 1), diag));
    // [x1, x2][x3, x4] + [x3, x4][x1, x2] is a known UT2 identity; the
    // stronger fact [x1, x2][x3, x4] = 0 holds since the commutator lands in
    // the strictly upper triangular part.
    CHECK(is_identity(parse_genpoly("x1 x2 x3 x4 - x2 x1 x3 x4 - x1 x2 x4 x3 + x2 x1 x4 x3", 1),
                      builtin_ut2_F()));
}

TEST_CASE("codimensions match the closed tables") {
    CHECK(codimension(builtin_ut2_self(), 1) == 5);
    CHECK(codimension(builtin_ut2_self(), 2) == 10);
    CHECK(codimension(builtin_ut2_D(), 1) == 3);
    CHECK(codimension(builtin_ut2_F(), 1) == 1);
    CHECK(codimension(builtin_ut2_F(), 2) == 2);
    // gc_1 is the rank of the operator family a -> w_i a w_j on UT2.
    CHECK(free_codimension(2, 2) == 16);
    CHECK(free_codimension(3, 1) == 9);
}

TEST_CASE("cocharacter tables at small n") {
    CocharacterResult r2 = cocharacter(builtin_ut2_self(), 2);
    CHECK(r2.multiplicities == table(2, {{Partition{2}, 7}, {Partition{1, 1}, 3}}));
    CHECK(r2.codim == 10);
    CHECK(r2.colength == 10);

    CocharacterResult r3 = cocharacter(builtin_ut2_self(), 3);
    CHECK(r3.multiplicities ==
          table(3, {{Partition{3}, 9}, {Partition{2, 1}, 6}, {Partition{1, 1, 1}, 1}}));
    CHECK(r3.codim == 22);

    CocharacterResult d2 = cocharacter(builtin_ut2_D(), 2);
    CHECK(d2.multiplicities == table(2, {{Partition{2}, 4}, {Partition{1, 1}, 2}}));

    // Ordinary identities of UT2 through the W = F action: the classical
    // cocharacter (2): 1, (1,1): 1 at n = 2.
    CocharacterResult f2 = cocharacter(builtin_ut2_F(), 2);
    CHECK(f2.multiplicities == table(2, {{Partition{2}, 1}, {Partition{1, 1}, 1}}));
}

TEST_CASE("ut2_F agrees with an ordinary reference computation") {
    WAction viaF = builtin_ut2_F();
    WAction ref = ordinary_action("ut2_ref", detail::ut2_algebra());
    for (int n = 1; n <= 4; ++n) {
        CocharacterResult a = cocharacter(viaF, n);
        CocharacterResult b = cocharacter(ref, n);
        CHECK(a.codim == b.codim);
        CHECK(a.multiplicities == b.multiplicities);
    }
}

TEST_CASE("multidegree dimensions") {
    WAction act = builtin_ut2_self();
    CHECK(multidegree_dimension(act, {1}) == 5);
    CHECK(multidegree_dimension(act, {2}) == 7);
    // (1,...,1) recovers the codimension.
    CHECK(multidegree_dimension(act, {1, 1}) == 10);
    CHECK(free_multidegree_dimension(2, {1, 1}) == 16);
    CHECK(free_multidegree_dimension(2, {2}) == 8);
}

TEST_CASE("homogeneous codimensions") {
    CHECK(homogeneous_codimension(builtin_ut2_self(), 3, 1) == 9);
    CHECK(homogeneous_codimension(builtin_ut2_D(), 2, 1) == 4);
    CHECK(homogeneous_codimension(builtin_ut2_self(), 2, 2) == 24); // 7*3 + 3*1, cross-checked internally
    CHECK(free_multidegree_dimension(2, {2}) == 8); // d^{n+1} at k = 1, n = 2
}

TEST_CASE("GL pipeline agrees with the S_n pipeline") {
    for (int n = 1; n <= 3; ++n) {
        WAction act = builtin_ut2_D();
        CHECK(gl_pipeline_multiplicities(act, n, n) == cocharacter(act, n).multiplicities);
    }
    SchurExpansion free2 = free_gl_multiplicities(1, 2, 2);
    CHECK(free2 == table(2, {{Partition{2}, 1}, {Partition{1, 1}, 1}}));
}

TEST_CASE("Hilbert series") {
    TruncatedSeries h = hilbert_truncated(builtin_ut2_self(), 1, 4);
    CHECK(h.poly().coefficient({1}) == 5);
    CHECK(h.poly().coefficient({2}) == 7);
    CHECK(h.poly().coefficient({3}) == 9);
    CHECK(h.poly().coefficient({4}) == 11);
    CHECK(h == expand_closed_form(ClosedForm::UT2, 1, 4));

    TruncatedSeries hd = hilbert_truncated(builtin_ut2_D(), 1, 3);
    CHECK(hd.poly().coefficient({1}) == 3);
    CHECK(hd.poly().coefficient({2}) == 4);
    CHECK(hd.poly().coefficient({3}) == 5);

    CHECK(free_hilbert_truncated(3, 1, 3) == expand_closed_form(ClosedForm::FreeAlgebra, 1, 3, 3));
    CHECK(free_hilbert_truncated(2, 2, 3) == expand_closed_form(ClosedForm::FreeAlgebra, 2, 3, 2));
}

TEST_CASE("codimension is monotone under the semidirect product") {
    for (const WAction& base : {builtin_ut2_D(), builtin_ut2_F()}) {
        WAction sd = semidirect(base);
        for (int n = 1; n <= 2; ++n) CHECK(codimension(base, n) <= codimension(sd, n));
    }
}

TEST_CASE("Capelli reports") {
    // dim UT2 = 3, so the rank-4 generalized set holds for all actions on it.
    CHECK(capelli_report(builtin_ut2_self(), 4).holds);
    CHECK(capelli_report(builtin_ut2_D(), 4).holds);
    // M_2 does not satisfy rank 2: exhibit a nonvanishing evaluation.
    CapelliReport m2 = capelli_report(builtin_matrix(2), 2);
    CHECK_FALSE(m2.holds);
    CHECK_FALSE(m2.witness.empty());
    // The plain Capelli polynomial of rank dim A + 1 is always an identity.
    CHECK(is_identity(capelli(3, 1), diagonal_algebra()));
}

TEST_CASE("multiplicity bound report") {
    BoundReport rep = multiplicity_bound_check(builtin_ut2_self(), 1);
    REQUIRE(rep.rows.size() == 1);
    CHECK(rep.rows[0].lambda == Partition{1});
    CHECK(rep.rows[0].multiplicity == 5);
    CHECK(rep.rows[0].multiplicity <= rep.rows[0].bound);
    // Non-unital A is rejected: strictly upper triangular part alone.
    FiniteAlgebra nilpotent;
    nilpotent.basis = {"e12"};
    nilpotent.mult.assign(1, std::vector<RatVec>(1, RatVec(1, 0)));
    CHECK_THROWS(multiplicity_bound_check(ordinary_action("nil", nilpotent), 1));
}

TEST_CASE("evaluation space traces") {
    // The trace at the identity equals the rank; traces are class functions
    // realized with exact rational arithmetic.
    EvaluationSpace space(builtin_ut2_D(), 2);
    CHECK(space.rank() == 6); // 4 + 2 from the n = 2 table
    CHECK(space.trace(perm_identity(2)) == 6);
    CHECK(space.trace(Perm{1, 0}) == 2); // chi(2) - chi(1,1) = 4 - 2
}

TEST_CASE("deterministic under worker count") {
    CocharacterResult serial = cocharacter(builtin_ut2_D(), 3);
#ifdef _WIN32
    (void)serial;
#else
    setenv("GPI_THREADS", "4", 1);
    CocharacterResult parallel = cocharacter(builtin_ut2_D(), 3);
    unsetenv("GPI_THREADS");
    CHECK(serial.multiplicities == parallel.multiplicities);
    CHECK(serial.codim == parallel.codim);
#endif
}
