#include "doctest.h"

#include "classify.hpp"
#include "error.hpp"

using namespace sw;

static LocalWeight lw(std::initializer_list<const char*> xs) {
    LocalWeight v;
    for (const char* s : xs) v.push_back(parse_rat(s));
    return v;
}

TEST_CASE("dominance") {
    CHECK(is_dominant_integral(lw({"3/2", "-3/2"}), BlockType::A));
    CHECK_FALSE(is_dominant_integral(lw({"1/3", "-1/3"}), BlockType::A));
    CHECK_FALSE(is_dominant_integral(lw({"-1/2"}), BlockType::C));
    CHECK(is_dominant_integral(lw({"2"}), BlockType::C));
}

TEST_CASE("normal forms") {
    // (4/3, 1/3, -5/3): the j = 1 gap is dominant, which is forbidden.
    CHECK_FALSE(validate_normal_form(lw({"4/3", "1/3", "-5/3"}), BlockType::A));
    CHECK(validate_normal_form(lw({"1/3", "-1/3"}), BlockType::A));
    CHECK(validate_normal_form(lw({"-1/2"}), BlockType::C));
    CHECK(validate_normal_form(lw({"3/2", "1/2", "-1/2"}), BlockType::C));
    CHECK_FALSE(validate_normal_form(lw({"1/2", "3/2"}), BlockType::C));
    CHECK_FALSE(validate_normal_form(lw({"1", "0", "-1"}), BlockType::A));
    // Dominant-integral deformations of the first coordinates are rejected.
    CHECK_FALSE(validate_normal_form(lw({"2", "-1", "-1"}), BlockType::A));
}

TEST_CASE("mu bracket") {
    // sl(2), mu = 0: t = (1/2, -1/2); mu[1] = -alpha.
    auto r = mu_bracket(lw({"0", "0"}), 1);
    REQUIRE(r.has_value());
    CHECK(*r == lw({"-1", "1"}));
    CHECK_FALSE(mu_bracket(lw({"0", "0"}), 2).has_value());  // zero marker

    // sl(3), l = 1: coordinates become (t2, t1, t3) - rho.
    LocalWeight mu = lw({"2", "1", "0"});
    auto r3 = mu_bracket(mu, 1);
    REQUIRE(r3.has_value());
    // t = mu + rho = (3, 1, -1); mu[1] + rho = (1, 3, -1).
    CHECK(*r3 == lw({"0", "3", "0"}));
}

TEST_CASE("regular integral decomposition") {
    // Round-trip on mu[l].
    LocalWeight mu = lw({"2", "1", "0"});
    for (int l = 1; l <= 2; ++l) {
        auto m = mu_bracket(mu, l);
        REQUIRE(m.has_value());
        auto d = regular_integral_decompose(*m);
        REQUIRE(d.has_value());
        CHECK(d->first == mu);
        CHECK(d->second == l);
    }
    // Nonintegral input: none.
    CHECK_FALSE(regular_integral_decompose(lw({"1/3", "-1/3"})).has_value());
    // Singular integral input: error. (-1, 1) has l_1 + 1 = 0.
    CHECK_THROWS_AS(regular_integral_decompose(lw({"-1", "1"})), Error);
    // Weyl-singular integral (s_1 = s_2): also not of mu[l] form.
    CHECK_THROWS_AS(regular_integral_decompose(lw({"-1/2", "1/2"})), Error);
}

TEST_CASE("partial finiteness and injectivity") {
    auto sl3 = SuperRootSystem::make(AlgebraKind::SL, 3, 0);
    Parabolic p = Parabolic::build(sl3, {Rat(0), Rat(0), Rat(-1)});
    // Block weight (1/3, -1/3): not partially finite, hence injective.
    Weight lam = p.embed_block(lw({"1/3", "-1/3"}), 0);
    CHECK_FALSE(is_partially_finite(lam, p));
    CHECK(is_gamma_injective(lam, p));
    // Dominant integral block: partially finite.
    Weight lam2 = p.embed_block(lw({"2", "-2"}), 0);
    CHECK(is_partially_finite(lam2, p));
    CHECK_FALSE(is_gamma_injective(lam2, p));
    // XOR invariant on bounded weights.
    for (const char* a : {"1/3", "-2", "5/2", "-1"}) {
        LocalWeight b = lw({a, "0"});
        b[1] = -b[0];
        if (!block_is_bounded(b, BlockType::A)) continue;
        Weight l = p.embed_block(b, 0);
        CHECK(is_partially_finite(l, p) != is_gamma_injective(l, p));
    }
}

TEST_CASE("typicality") {
    // W(2): mu = 5 eps_1 + eps_2 atypical with witness i = 1.
    auto w2 = SuperRootSystem::make(AlgebraKind::W, 0, 2);
    RootBasis bw = RootBasis::standard(w2);
    auto t1 = is_typical(w2->parse_weight("5,1"), w2, bw);
    CHECK_FALSE(t1.typical);
    REQUIRE(!t1.witness_indices.empty());
    CHECK(t1.witness_indices[0] == 1);
    CHECK(is_typical(w2->parse_weight("2,3"), w2, bw).typical);

    // gl(1|1): atypical iff a + b = 0.
    auto gl11 = SuperRootSystem::make(AlgebraKind::GL, 1, 1);
    RootBasis bg = RootBasis::standard(gl11);
    CHECK_FALSE(is_typical(gl11->parse_weight("3|-3"), gl11, bg).typical);
    CHECK(is_typical(gl11->parse_weight("3|-2"), gl11, bg).typical);

    // p(2): atypicality via (mu + rho_sl, eps_i - eps_j) = 1.
    auto p2 = SuperRootSystem::make(AlgebraKind::P, 2, 0);
    RootBasis bp = RootBasis::standard(p2);
    // mu + rho_sl = (x + 1/2, y - 1/2): pairing (1,2) = x - y + 1 = 1 iff x = y.
    CHECK_FALSE(is_typical(p2->parse_weight("3,3"), p2, bp).typical);
}

TEST_CASE("singularity") {
    auto sl2 = SuperRootSystem::make(AlgebraKind::SL, 2, 0);
    RootBasis b = RootBasis::standard(sl2);
    Weight minus_rho = sl2->canonical(-b.rho());
    CHECK(is_singular(minus_rho, sl2, b));
    CHECK_FALSE(is_singular(Weight::zero(2), sl2, b));

    auto sl3 = SuperRootSystem::make(AlgebraKind::SL, 3, 0);
    RootBasis b3 = RootBasis::standard(sl3);
    // mu + rho = (1, 1, -2).
    Weight mu = sl3->canonical(sl3->parse_weight("1,1,-2") - b3.rho());
    CHECK(is_singular(mu, sl3, b3));

    // Fast path agrees with the orbit stabilizer.
    auto osp = SuperRootSystem::make(AlgebraKind::OSP, 2, 4);
    RootBasis bo = RootBasis::standard(osp);
    for (const char* s : {"1|2,1", "0|1/2,-1/2", "3|4,2", "1|0,3", "2|2,-2"}) {
        Weight w = osp->parse_weight(s);
        CHECK(is_singular(w, osp, bo) == is_singular_orbit(w, osp, bo));
    }
    // Dot invariance.
    for (const auto& w : sl3->weyl_group()) {
        Weight m2 = dot_action(sl3, b3, w, mu);
        CHECK(is_singular(m2, sl3, b3) == is_singular(mu, sl3, b3));
    }
}

TEST_CASE("central characters") {
    auto sl2 = SuperRootSystem::make(AlgebraKind::SL, 2, 0);
    RootBasis b = RootBasis::standard(sl2);
    Weight mu = sl2->parse_weight("3/7,-3/7");
    auto W = sl2->weyl_group();
    for (const auto& w : W)
        CHECK(central_character(dot_action(sl2, b, w, mu), sl2, b) ==
              central_character(mu, sl2, b));
    Weight alpha = sl2->canonical(sl2->eps(1) - sl2->eps(2));
    CHECK(central_character(Weight::zero(2), sl2, b) !=
          central_character(alpha, sl2, b));
}
