#include <catch2/catch_amalgamated.hpp>

#include "gpid/partition.hpp"

using namespace gpid;

TEST_CASE("partition construction and access") {
    Partition p{3, 1, 1};
    CHECK(p.size() == 5);
    CHECK(p.height() == 3);
    CHECK(p.part(1) == 3);
    CHECK(p.part(4) == 0);
    CHECK(Partition(std::vector<int>{2, 1, 0, 0}) == Partition{2, 1});
    CHECK_THROWS(Partition{1, 2});
    CHECK_THROWS(Partition{2, -1});
}

TEST_CASE("partition serialization") {
    CHECK(Partition{3, 1, 1}.to_string() == "3,1,1");
    CHECK(Partition().to_string() == "-");
    CHECK(Partition::parse("3,1,1") == Partition{3, 1, 1});
    CHECK(Partition::parse("-") == Partition());
    CHECK(Partition::parse("") == Partition());
    CHECK(Partition::parse(Partition{4, 2}.to_string()) == Partition{4, 2});
}

TEST_CASE("containment and conjugation") {
    CHECK(Partition{3, 2}.contains(Partition{2, 2}));
    CHECK_FALSE(Partition{3, 1}.contains(Partition{2, 2}));
    CHECK(Partition{3, 1, 1}.conjugate() == Partition{3, 1, 1});
    CHECK(Partition{4, 2}.conjugate() == Partition{2, 2, 1, 1});
    for (const Partition& lambda : enumerate_partitions(6))
        CHECK(lambda.conjugate().conjugate() == lambda);
}

TEST_CASE("partition enumeration counts and order") {
    // p(0..10) = 1, 1, 2, 3, 5, 7, 11, 15, 22, 30, 42
    int expected[] = {1, 1, 2, 3, 5, 7, 11, 15, 22, 30, 42};
    for (int n = 0; n <= 10; ++n)
        CHECK(static_cast<int>(enumerate_partitions(n).size()) == expected[n]);
    auto parts4 = enumerate_partitions(4);
    REQUIRE(parts4.size() == 5);
    CHECK(parts4[0] == Partition{4});
    CHECK(parts4[1] == Partition{3, 1});
    CHECK(parts4[2] == Partition{2, 2});
    CHECK(parts4[3] == Partition{2, 1, 1});
    CHECK(parts4[4] == Partition{1, 1, 1, 1});
    CHECK(enumerate_partitions(4, 2).size() == 3);
    PartitionOrder less;
    for (size_t i = 0; i + 1 < parts4.size(); ++i) CHECK(less(parts4[i], parts4[i + 1]));
}

TEST_CASE("hook membership") {
    CHECK(hook_membership(Partition{5, 1, 1}, HookShape{1, 1}));
    CHECK_FALSE(hook_membership(Partition{5, 2, 1}, HookShape{1, 1}));
    CHECK(hook_membership(Partition{4, 4, 4}, HookShape{3, 0}));
    CHECK_FALSE(hook_membership(Partition{1, 1, 1, 1}, HookShape{3, 0}));
}

TEST_CASE("irreducible dimensions via hook lengths") {
    CHECK(sn_dimension(Partition{1}) == 1);
    CHECK(sn_dimension(Partition{2, 1}) == 2);
    CHECK(sn_dimension(Partition{2, 2}) == 2);
    CHECK(sn_dimension(Partition{3, 2}) == 5);
    CHECK(sn_dimension(Partition{3, 1, 1}) == 6);
    CHECK(sn_dimension(Partition{4, 3, 2, 1}) == 768);
    for (int n = 1; n <= 7; ++n) {
        Int sum = 0;
        for (const Partition& lambda : enumerate_partitions(n)) {
            Int d = sn_dimension(lambda);
            sum += d * d;
        }
        CHECK(sum == factorial(n));
    }
}

TEST_CASE("Weyl module dimensions") {
    CHECK(weyl_dimension(Partition{1}, 3) == 3);
    CHECK(weyl_dimension(Partition{2}, 2) == 3);
    CHECK(weyl_dimension(Partition{1, 1}, 2) == 1);
    CHECK(weyl_dimension(Partition{2, 1}, 2) == 2);
    CHECK(weyl_dimension(Partition{1, 1, 1}, 2) == 0);
    CHECK(weyl_dimension(Partition{2, 1}, 3) == 8); // adjoint of GL_3
    // Stability: s_lambda(1^k) equals the number of SSYT with entries <= k.
    CHECK(weyl_dimension(Partition{3, 1}, 3) == 15);
}

TEST_CASE("branching and interleaving") {
    auto up = branch_up(Partition{2, 1});
    REQUIRE(up.size() == 3);
    CHECK(up[0] == Partition{3, 1});
    CHECK(up[1] == Partition{2, 2});
    CHECK(up[2] == Partition{2, 1, 1});
    auto down = branch_down(Partition{2, 1});
    REQUIRE(down.size() == 2);
    CHECK(down[0] == Partition{1, 1});
    CHECK(down[1] == Partition{2});
    CHECK(interleaves(Partition{3, 1}, Partition{2, 1}));
    CHECK(interleaves(Partition{3, 1}, Partition{3}));
    CHECK_FALSE(interleaves(Partition{2, 2}, Partition{1}));   // lambda_2 > mu_1 fails
    CHECK_FALSE(interleaves(Partition{2, 1}, Partition{2, 2})); // mu_2 > lambda_2
}
