#include <catch2/catch_amalgamated.hpp>

#include "hec/fp.hpp"
#include "hec/rng.hpp"

using namespace hec;

TEST_CASE("FieldCtx construction") {
    CHECK_NOTHROW(FieldCtx(3));
    CHECK_NOTHROW(FieldCtx(65537));
    CHECK_THROWS_AS(FieldCtx(2), BadField);
    CHECK_THROWS_AS(FieldCtx(4), BadField);
    CHECK_THROWS_AS(FieldCtx(1), BadField);
    CHECK_THROWS_AS(FieldCtx(91), BadField);  // 7*13
    CHECK_THROWS_AS(FieldCtx(1ull << 62), BadField);
}

TEST_CASE("add examples") {
    OpCount c;
    FieldCtx F7(7), F11(11);
    CHECK(add(0, 5, F7, c) == 5);
    CHECK(add(5, 4, F7, c) == 2);
    CHECK(add(10, 10, F11, c) == 9);
    CHECK(c == OpCount{0, 0, 3});
}

TEST_CASE("mul examples") {
    OpCount c;
    FieldCtx F7(7), F13(13);
    CHECK(mul(1, 6, F7, c) == 6);
    CHECK(mul(3, 5, F7, c) == 1);
    CHECK(mul(6, 6, F13, c) == 10);
    CHECK(c == OpCount{0, 3, 0});
}

TEST_CASE("inv examples") {
    OpCount c;
    FieldCtx F7(7), F11(11), F101(101);
    CHECK(inv(3, F7, c) == 5);
    CHECK(inv(1, F11, c) == 1);
    // 17^-1 mod 101, value frozen from a brute-force scan for 17*b = 1
    CHECK(inv(17, F101, c) == 6);
    CHECK(c == OpCount{3, 0, 0});
    CHECK_THROWS_AS(inv(0, F7, c), ZeroInverse);
}

TEST_CASE("halve examples") {
    OpCount c;
    FieldCtx F7(7), F13(13);
    CHECK(halve(4, F7, c) == 2);
    CHECK(halve(3, F7, c) == 5);
    CHECK(halve(1, F13, c) == 7);
    CHECK(c == OpCount{0, 0, 3});
}

TEST_CASE("small_scale examples") {
    OpCount c;
    FieldCtx F7(7);
    CHECK(small_scale(4, 2, F7, c) == 1);
    CHECK(c.add == 1);
    CHECK(small_scale(3, 3, F7, c) == 2);
    CHECK(c.add == 3);
    CHECK(small_scale(0, 2, F7, c) == 0);
    CHECK(c == OpCount{0, 0, 4});
}

TEST_CASE("batch_invert values and exact cost") {
    FieldCtx F7(7);
    {
        OpCount c;
        CHECK(batch_invert({3}, F7, c) == std::vector<Fp>{5});
        CHECK(c == OpCount{1, 0, 0});
    }
    {
        OpCount c;
        CHECK(batch_invert({2, 3, 4}, F7, c) == std::vector<Fp>({4, 5, 2}));
        CHECK(c == OpCount{1, 6, 0});
    }
    {
        OpCount c;
        CHECK(batch_invert({1, 1}, F7, c) == std::vector<Fp>({1, 1}));
        CHECK(c == OpCount{1, 3, 0});
    }
    OpCount c;
    CHECK(batch_invert({}, F7, c).empty());
    CHECK_THROWS_AS(batch_invert({3, 0, 1}, F7, c), ZeroInverse);
}

TEST_CASE("batch_invert matches inv elementwise, cost 1I + 3(n-1)M") {
    FieldCtx F(65537);
    SplitMix64 rng(42);
    for (int n = 1; n <= 8; ++n) {
        std::vector<Fp> vals;
        for (int i = 0; i < n; ++i) vals.push_back(1 + rng.below(F.p() - 1));
        OpCount c;
        auto out = batch_invert(vals, F, c);
        CHECK(c == OpCount{1, 3 * (n - 1), 0});
        for (int i = 0; i < n; ++i) {
            OpCount scratch;
            CHECK(out[i] == inv(vals[i], F, scratch));
        }
    }
}

TEST_CASE("field identities on random elements") {
    FieldCtx F(1009);
    SplitMix64 rng(1);
    for (int i = 0; i < 2000; ++i) {
        Fp a = rng.below(F.p());
        OpCount c;
        if (a != 0) CHECK(mul(a, inv(a, F, c), F, c) == 1);
        CHECK(halve(add(a, a, F, c), F, c) == a);
        CHECK(F.sub(a, a) == 0);
        CHECK(F.add(a, F.neg(a)) == 0);
    }
}

TEST_CASE("sqrt and is_square agree, both residue classes") {
    for (std::uint64_t p : {13ull, 101ull, 65537ull}) {  // 65537 = 1 mod 4 exercises Tonelli-Shanks
        FieldCtx F(p);
        SplitMix64 rng(p);
        int squares = 0;
        for (int i = 0; i < 500; ++i) {
            Fp a = rng.below(p);
            if (!F.is_square(a)) continue;
            ++squares;
            Fp r = F.sqrt(a);
            CHECK(F.mul(r, r) == a);
        }
        CHECK(squares > 100);
    }
}

TEST_CASE("counter additivity") {
    FieldCtx F(101);
    SplitMix64 rng(9);
    OpCount first, second, joint;
    auto burst = [&](OpCount& c) {
        Fp a = 1 + rng.below(100), b = 1 + rng.below(100);
        (void)mul(add(a, b, F, c), b, F, c);
        (void)inv(a, F, c);
        (void)halve(b, F, c);
    };
    SplitMix64 rng2(9);
    burst(first);
    burst(second);
    rng = rng2;
    burst(joint);
    burst(joint);
    CHECK(first + second == joint);
}
