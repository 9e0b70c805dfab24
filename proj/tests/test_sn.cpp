#include <catch2/catch_amalgamated.hpp>

#include "gpid/sn.hpp"

using namespace gpid;

TEST_CASE("permutation basics") {
    Perm a{1, 2, 0}, b{1, 0, 2};
    CHECK(perm_compose(a, b) == Perm{2, 1, 0}); // a(b(i))
    CHECK(perm_compose(a, perm_inverse(a)) == perm_identity(3));
    CHECK(perm_sign(perm_identity(4)) == 1);
    CHECK(perm_sign(Perm{1, 0, 2}) == -1);
    CHECK(perm_sign(a) == 1); // 3-cycle
    CHECK(cycle_type(a) == Partition{3});
    CHECK(cycle_type(Perm{1, 0, 3, 2}) == Partition{2, 2});
    CHECK(cycle_type(class_representative(Partition{3, 2})) == Partition{3, 2});
}

TEST_CASE("conjugacy class sizes") {
    CHECK(class_size(Partition{1, 1, 1}) == 1);
    CHECK(class_size(Partition{2, 1}) == 3);
    CHECK(class_size(Partition{3}) == 2);
    CHECK(class_size(Partition{2, 2}) == 3);
    for (int n = 1; n <= 6; ++n) {
        Int total = 0;
        for (const Partition& mu : enumerate_partitions(n)) total += class_size(mu);
        CHECK(total == factorial(n));
    }
}

TEST_CASE("irreducible characters: known table for n=3") {
    // classes: (1,1,1), (2,1), (3)
    CHECK(irreducible_character(Partition{3}, Partition{1, 1, 1}) == 1);
    CHECK(irreducible_character(Partition{3}, Partition{2, 1}) == 1);
    CHECK(irreducible_character(Partition{3}, Partition{3}) == 1);
    CHECK(irreducible_character(Partition{2, 1}, Partition{1, 1, 1}) == 2);
    CHECK(irreducible_character(Partition{2, 1}, Partition{2, 1}) == 0);
    CHECK(irreducible_character(Partition{2, 1}, Partition{3}) == -1);
    CHECK(irreducible_character(Partition{1, 1, 1}, Partition{2, 1}) == -1);
    // sign character: sign of the class.
    for (const Partition& mu : enumerate_partitions(5))
        CHECK(irreducible_character(Partition{1, 1, 1, 1, 1}, mu) ==
              perm_sign(class_representative(mu)));
    // degree = dimension from hook lengths.
    for (int n = 1; n <= 6; ++n) {
        std::vector<int> ones(n, 1);
        for (const Partition& lambda : enumerate_partitions(n))
            CHECK(irreducible_character(lambda, Partition(ones)) == sn_dimension(lambda));
    }
}

TEST_CASE("character orthogonality") {
    for (int n = 2; n <= 5; ++n) {
        auto parts = enumerate_partitions(n);
        for (const Partition& a : parts)
            for (const Partition& b : parts)
                CHECK(inner_product(character_of(a), character_of(b)) == Rat(a == b ? 1 : 0));
    }
}

TEST_CASE("decompose recovers the regular representation") {
    // chi_reg(mu) = n! at the identity, 0 elsewhere; multiplicities d_lambda.
    int n = 4;
    CharacterVector reg;
    reg.n = n;
    for (const Partition& mu : enumerate_partitions(n))
        reg.values[mu] = (mu.height() == n) ? Rat(factorial(n)) : Rat(0);
    SchurExpansion exp = decompose(reg);
    for (const Partition& lambda : enumerate_partitions(n))
        CHECK(exp.coefficient(lambda) == Rat(sn_dimension(lambda)));
}

TEST_CASE("decompose rejects non-characters") {
    CharacterVector bad;
    bad.n = 2;
    bad.values[Partition{1, 1}] = 1;
    bad.values[Partition{2}] = 0; // inner products are 1/2 each
    CHECK_THROWS_AS(decompose(bad), VerificationError);
}

TEST_CASE("Young symmetrizer span dimensions") {
    for (int n = 1; n <= 4; ++n)
        for (const Partition& lambda : enumerate_partitions(n))
            CHECK(Int(symmetrizer_span_dimension(Tableau::row_major(lambda))) == sn_dimension(lambda));
}

TEST_CASE("young_symmetrizer structure") {
    GroupAlgebraElement e = young_symmetrizer(Tableau::row_major(Partition{2, 1}));
    // |row stabilizer| * |column stabilizer| = 2 * 2 terms, all distinct here.
    CHECK(e.terms.size() == 4);
    CHECK(e.terms.at(perm_identity(3)) == 1);
    Tableau bad{Partition{2, 1}, {{1, 1}, {2}}};
    CHECK_THROWS(young_symmetrizer(bad));
}

TEST_CASE("branching rule") {
    for (int n = 2; n <= 5; ++n)
        for (const Partition& lambda : enumerate_partitions(n))
            CHECK(branching_check(lambda));
}
