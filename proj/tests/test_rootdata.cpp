#include "doctest.h"

#include <map>

#include "classify.hpp"
#include "error.hpp"
#include "parabolic.hpp"
#include "rootsystem.hpp"

using namespace sw;

TEST_CASE("catalog root counts") {
    auto gl11 = SuperRootSystem::make(AlgebraKind::GL, 1, 1);
    CHECK(gl11->even_roots().empty());
    auto odd = gl11->odd_roots();
    REQUIRE(odd.size() == 2);
    CHECK(gl11->root_multiplicity(gl11->eps(1) - gl11->delta(1)) == 1);
    CHECK(gl11->root_multiplicity(gl11->delta(1) - gl11->eps(1)) == 1);

    auto osp = SuperRootSystem::make(AlgebraKind::OSP, 2, 4);
    CHECK(osp->even_roots().size() == 8);
    CHECK(osp->odd_roots().size() == 8);

    auto w2 = SuperRootSystem::make(AlgebraKind::W, 0, 2);
    CHECK(w2->dim_g0_nilpotent() == 0);

    for (int m = 1; m <= 4; ++m)
        for (int n = 1; n <= 4; ++n) {
            auto g = SuperRootSystem::make(AlgebraKind::GL, m, n);
            CHECK(g->odd_roots().size() == static_cast<size_t>(2 * m * n));
        }

    // p(m): |Delta_1^+| = m(m+1)/2, |Delta_1^-| = m(m-1)/2.
    for (int m = 2; m <= 4; ++m) {
        auto p = SuperRootSystem::make(AlgebraKind::P, m, 0);
        int plus = 0, minus = 0;
        for (const auto& r : p->roots()) {
            if (!r.odd) continue;
            (r.odd_sign > 0 ? plus : minus) += 1;
        }
        CHECK(plus == m * (m + 1) / 2);
        CHECK(minus == m * (m - 1) / 2);
    }

    // W(n): total dimension n 2^n, dim W^{-1} = n, dim g_0'' = n 2^{n-1} - n^2.
    for (int n = 1; n <= 4; ++n) {
        auto w = SuperRootSystem::make(AlgebraKind::W, 0, n);
        CHECK(w->total_dim() == n * (1L << n));
        CHECK(w->dim_g0_nilpotent() == n * (1L << (n - 1)) - n * n);
        long wm1 = 0;
        for (const auto& r : w->roots())
            if (w->grading_degree(r) == -1) wm1 += r.mult;
        CHECK(wm1 == n);
        long total = 0;
        std::map<long, long> by_degree;
        for (const auto& r : w->roots()) by_degree[w->grading_degree(r)] += r.mult;
        by_degree[0] += static_cast<long>(w->dim());
        for (auto& [k, d] : by_degree) total += d;
        CHECK(total == n * (1L << n));
    }
}

TEST_CASE("invalid parameters") {
    CHECK_THROWS_AS(SuperRootSystem::make(AlgebraKind::SL, 2, 2), Error);
    CHECK_THROWS_AS(SuperRootSystem::make(AlgebraKind::OSP, 2, 3), Error);
    CHECK_THROWS_AS(SuperRootSystem::make(AlgebraKind::SP, 2, 0), Error);
}

TEST_CASE("W(2) multiplicities from the superderivation model") {
    auto w2 = SuperRootSystem::make(AlgebraKind::W, 0, 2);
    CHECK(w2->root_multiplicity(-w2->eps(1)) == 1);      // only d_1
    CHECK(w2->root_multiplicity(w2->eps(1)) == 1);       // only xi1 xi2 d_2
    CHECK(w2->root_multiplicity(w2->eps(1) * Rat(2)) == 0);
    auto w3 = SuperRootSystem::make(AlgebraKind::W, 0, 3);
    CHECK(w3->root_multiplicity(w3->eps(1)) == 2);
    CHECK(w3->root_multiplicity(w3->eps(1) + w3->eps(2)) == 1);
}

TEST_CASE("standard bases and rho") {
    auto sl2 = SuperRootSystem::make(AlgebraKind::SL, 2, 0);
    RootBasis b2 = RootBasis::standard(sl2);
    REQUIRE(b2.simple().size() == 1);
    CHECK(sl2->canonical(b2.rho() * Rat(2)) == sl2->canonical(b2.simple()[0]));

    auto gl11 = SuperRootSystem::make(AlgebraKind::GL, 1, 1);
    RootBasis b11 = RootBasis::standard(gl11);
    CHECK(b11.rho() == (gl11->eps(1) - gl11->delta(1)) * Rat(-1, 2));

    // sp(2) block convention: B = {2 eps_1}.
    auto cb = block_standard_basis(BlockType::C, 1);
    REQUIRE(cb.size() == 1);
    CHECK(cb[0] == LocalWeight{Rat(2)});

    // (rho_B, alpha^vee) = 1 for simple even roots of g_0'.
    for (auto sys : {SuperRootSystem::make(AlgebraKind::GL, 2, 2),
                     SuperRootSystem::make(AlgebraKind::OSP, 2, 4),
                     SuperRootSystem::make(AlgebraKind::P, 3, 0),
                     SuperRootSystem::make(AlgebraKind::W, 0, 2)}) {
        RootBasis b = RootBasis::standard(sys);
        for (const auto& s : b.simple()) {
            if (sys->root_multiplicity(s) == 0) continue;
            bool odd = false;
            for (const auto& r : sys->roots())
                if (sys->canonical(r.vec) == sys->canonical(s) && r.odd) odd = true;
            if (odd) continue;
            Rat norm = sys->form(s, s);
            CHECK(Rat(2) * sys->form(b.rho(), s) / norm == 1);
        }
    }
}

TEST_CASE("bilinear form") {
    auto gl = SuperRootSystem::make(AlgebraKind::GL, 2, 2);
    CHECK(gl->form(gl->eps(1), gl->eps(1)) == 1);
    CHECK(gl->form(gl->delta(1), gl->delta(1)) == -1);
    CHECK(gl->form(gl->eps(1) - gl->delta(1), gl->eps(1) + gl->delta(1)) == 2);

    // W-invariance of the form.
    auto osp = SuperRootSystem::make(AlgebraKind::OSP, 2, 4);
    auto W = osp->weyl_group();
    Weight a = osp->parse_weight("1|1/2,-3");
    Weight b = osp->parse_weight("-2|0,7/3");
    for (const auto& w : W)
        CHECK(osp->form(osp->apply(w, a), osp->apply(w, b)) == osp->form(a, b));
}

TEST_CASE("weyl groups") {
    CHECK(SuperRootSystem::make(AlgebraKind::SL, 2, 0)->weyl_group().size() == 2);
    CHECK(SuperRootSystem::make(AlgebraKind::OSP, 2, 4)->weyl_group().size() == 8);
    CHECK(SuperRootSystem::make(AlgebraKind::W, 0, 3)->weyl_group().size() == 6);
    CHECK_THROWS_AS(SuperRootSystem::make(AlgebraKind::GL, 4, 4)->weyl_group(100),
                    Error);
}

TEST_CASE("parabolic construction") {
    // sl(2|1): l(eps) = 0, l(delta_1) = -1 gives a = gl(2), u = g^1.
    auto sl21 = SuperRootSystem::make(AlgebraKind::SL, 2, 1);
    Parabolic p = Parabolic::build(sl21, {Rat(0), Rat(0), Rat(-1)});
    REQUIRE(p.blocks().size() == 1);
    CHECK(p.blocks()[0].type == BlockType::A);
    CHECK(p.blocks()[0].coords == std::vector<int>{0, 1});
    CHECK(p.a_roots().size() == 2);
    CHECK(p.u_roots().size() == 2);
    for (const auto& r : p.u_roots()) CHECK(r.odd);

    // W(n), l = 1 everywhere: a = gl(n) = W^0, u = W_{>=1}.
    auto w2 = SuperRootSystem::make(AlgebraKind::W, 0, 2);
    Parabolic pw = Parabolic::build(w2, {Rat(1), Rat(1)});
    REQUIRE(pw.blocks().size() == 1);
    CHECK(pw.blocks()[0].coords.size() == 2);
    for (const auto& r : pw.u_roots())
        CHECK(w2->grading_degree(r) >= 1);
    for (const auto& r : pw.u_minus_roots())
        CHECK(w2->grading_degree(r) == -1);

    // sl(3) with a gl(2) block.
    auto sl3 = SuperRootSystem::make(AlgebraKind::SL, 3, 0);
    Parabolic p3 = Parabolic::build(sl3, {Rat(0), Rat(0), Rat(-1)});
    REQUIRE(p3.blocks().size() == 1);
    CHECK(p3.blocks()[0].coords == std::vector<int>{0, 1});
    CHECK(p3.u_minus_roots().size() == 2);

    // Zero level with an odd root is rejected.
    CHECK_THROWS_AS(Parabolic::build(sl21, {Rat(0), Rat(0), Rat(0)}), Error);

    // osp: opposite delta levels would merge into a D-type factor.
    auto osp = SuperRootSystem::make(AlgebraKind::OSP, 2, 4);
    CHECK_THROWS_AS(Parabolic::build(osp, {Rat(3), Rat(1), Rat(-1)}), Error);
    Parabolic posp = Parabolic::build(osp, {Rat(3), Rat(1), Rat(0)});
    REQUIRE(posp.blocks().size() == 1);
    CHECK(posp.blocks()[0].type == BlockType::C);
}

TEST_CASE("parabolic projections decompose weights") {
    auto sl3 = SuperRootSystem::make(AlgebraKind::SL, 3, 0);
    Parabolic p = Parabolic::build(sl3, {Rat(0), Rat(0), Rat(-1)});
    Weight eta = sl3->parse_weight("1/2,7,-3");
    Weight sum = p.z_projection(eta);
    for (size_t i = 0; i < p.blocks().size(); ++i)
        sum += p.embed_block(p.block_projection(eta, i), i);
    CHECK(sl3->canonical(sum) == sl3->canonical(eta));
}

TEST_CASE("commuting bases") {
    auto sl3 = SuperRootSystem::make(AlgebraKind::SL, 3, 0);
    Parabolic p = Parabolic::build(sl3, {Rat(0), Rat(0), Rat(0)});  // a = sl(3)
    auto gamma = p.commuting_basis();
    REQUIRE(gamma.size() == 2);
    CHECK(verify_commuting_set(p, gamma));

    auto osp = SuperRootSystem::make(AlgebraKind::OSP, 2, 4);
    Parabolic pc = Parabolic::build(osp, {Rat(1), Rat(0), Rat(0)});  // a = sp(4)
    auto gc = pc.commuting_basis();
    REQUIRE(gc.size() == 2);
    CHECK(verify_commuting_set(pc, gc));
    CHECK(gc[0] == osp->delta(1) * Rat(2));
    CHECK(gc[1] == osp->delta(1) + osp->delta(2));

    auto sl2 = SuperRootSystem::make(AlgebraKind::SL, 2, 0);
    Parabolic p2 = Parabolic::build(sl2, {Rat(0), Rat(0)});
    auto g2 = p2.commuting_basis();
    REQUIRE(g2.size() == 1);
    CHECK(verify_commuting_set(p2, g2));
}

TEST_CASE("functional round-trip reproduces the partition") {
    auto gl21 = SuperRootSystem::make(AlgebraKind::GL, 2, 1);
    Parabolic p = Parabolic::build(gl21, {Rat(0), Rat(0), Rat(-1)});
    Parabolic q = Parabolic::build(gl21, p.functional());
    CHECK(p.u_roots().size() == q.u_roots().size());
    CHECK(p.a_roots().size() == q.a_roots().size());
    CHECK(p.blocks().size() == q.blocks().size());
}

TEST_CASE("weight strings round-trip") {
    auto sl21 = SuperRootSystem::make(AlgebraKind::SL, 2, 1);
    Weight w = sl21->parse_weight("1/2,0|-3/2");
    CHECK(sl21->parse_weight(sl21->weight_str(w)) == w);
    // Unicode minus accepted.
    CHECK(sl21->parse_weight("1/2,0|\xe2\x88\x92" "3/2") == w);
    auto psl = SuperRootSystem::make(AlgebraKind::PSL, 2, 2);
    CHECK_THROWS_AS(psl->parse_weight("1,0|0,0"), Error);  // constraint violated
    CHECK_NOTHROW(psl->parse_weight("1,0|0,-1"));
}
