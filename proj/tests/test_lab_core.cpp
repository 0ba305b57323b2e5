#include "doctest.h"

#include "error.hpp"
#include "lab/oracles.hpp"

using namespace sw;
using namespace sw::lab;

static Weight wt(const LabAlgebraPtr& a, const std::string& s) {
    return a->sys()->parse_weight(s);
}

TEST_CASE("lab algebras satisfy their bracket relations") {
    for (const auto& name : LabAlgebra::catalog()) {
        auto alg = LabAlgebra::make(name);
        // Cartan eigenvalue relations: [h, x] = wt(x)(h) x for every basis
        // element; checked through the structure constants.
        for (size_t h = 0; h < alg->size(); ++h) {
            if (!alg->is_cartan(h)) continue;
            for (size_t x = 0; x < alg->size(); ++x) {
                if (alg->is_cartan(x)) {
                    CHECK(alg->bracket(h, x).empty());
                    continue;
                }
                auto br = alg->bracket(h, x);
                Rat expect = alg->weight_eval(alg->gen(x).weight, h);
                if (expect == 0) {
                    CHECK(br.empty());
                } else {
                    REQUIRE(br.size() == 1);
                    CHECK(br[0].first == x);
                    CHECK(br[0].second == expect);
                }
            }
        }
    }
}

TEST_CASE("sl2 Verma windows") {
    auto sl2 = LabAlgebra::make("sl2");
    Weight lam = wt(sl2, "3/2,-3/2");
    auto m = WeightModule::verma(sl2, lam, 3);
    CHECK(m.space_count() == 4);
    for (size_t wi = 0; wi < m.space_count(); ++wi) CHECK(m.dim(wi) == 1);
    CHECK(m.check_brackets());

    // Singular vector f^{n+1} v for dominant integral lam: Z window.
    Weight lam2 = wt(sl2, "1,-1");  // (lam, alpha^vee) = 2
    auto m2 = WeightModule::verma(sl2, lam2, 6);
    auto z = m2.maximal_trivial_intersection();
    // Z should be everything at depth >= 3 (f^3 v and below).
    size_t zdim = 0;
    for (const auto& [wi, sp] : z.space) zdim += sp.cols();
    CHECK(zdim == 4);  // depths 3..6
    auto l = m2.quotient(z);
    long total = 0;
    for (size_t wi = 0; wi < l.space_count(); ++wi) total += l.dim(wi);
    CHECK(total == 3);  // dim L = 3
}

TEST_CASE("gl(1|1) Kac modules via induction") {
    auto gl11 = LabAlgebra::make("gl11");
    // p = g^0 + g^1: level 0 on eps, -1 on delta.
    std::vector<Rat> l{Rat(0), Rat(-1)};
    std::vector<size_t> all(gl11->size());
    for (size_t i = 0; i < all.size(); ++i) all[i] = i;

    auto mk_kac = [&](const std::string& s) {
        auto r = WeightModule::trivial_line(gl11, all, wt(gl11, s));
        return WeightModule::induce(gl11, all, l, r, 4);
    };
    auto typical = mk_kac("3|-2");
    long dim_typ = 0;
    for (size_t wi = 0; wi < typical.space_count(); ++wi) dim_typ += typical.dim(wi);
    CHECK(dim_typ == 2);
    CHECK(typical.check_brackets());
    CHECK(typical.maximal_trivial_intersection().is_zero());

    auto atypical = mk_kac("3|-3");
    auto z = atypical.maximal_trivial_intersection();
    CHECK(z.total_dim() == 1);
}

TEST_CASE("gl(2|1) Kac module of the trivial module has dimension 4") {
    auto gl21 = LabAlgebra::make("gl21");
    std::vector<size_t> all(gl21->size());
    for (size_t i = 0; i < all.size(); ++i) all[i] = i;
    std::vector<Rat> l{Rat(0), Rat(0), Rat(-1)};
    // R = trivial 1-dim module of gl(2) + gl(1) at weight 0: build as a
    // simple window over the level-0 subalgebra.
    std::vector<size_t> a_elems = gl21->elems_with_level_sign(l, 0);
    auto r = simple_window(gl21, a_elems, Weight::zero(3), 3);
    long rdim = 0;
    for (size_t wi = 0; wi < r.space_count(); ++wi) rdim += r.dim(wi);
    REQUIRE(rdim == 1);
    auto k = WeightModule::induce(gl21, all, l, r, 6);
    long kdim = 0;
    for (size_t wi = 0; wi < k.space_count(); ++wi) kdim += k.dim(wi);
    CHECK(kdim == 4);
    CHECK(k.check_brackets());
}

TEST_CASE("sl(2|1) Verma PBW dimensions") {
    auto sl21 = LabAlgebra::make("sl21");
    Weight lam = wt(sl21, "1/3,-1/5|0");
    auto m = WeightModule::verma(sl21, lam, 4);
    CHECK(m.check_brackets());
    // Weight lam - beta1 - beta2 (both odd roots): the only PBW monomial is
    // f_{beta1} f_{beta2}; the alternative alpha + 2 beta2 needs an odd
    // generator squared.
    Weight beta1 = sl21->sys()->canonical(sl21->sys()->eps(1) - sl21->sys()->delta(1));
    Weight beta2 = sl21->sys()->canonical(sl21->sys()->eps(2) - sl21->sys()->delta(1));
    CHECK(m.dim_at(sl21->sys()->canonical(lam - beta1 - beta2)) == 1);
}

TEST_CASE("W(2) Verma and brackets") {
    auto w2 = LabAlgebra::make("w2");
    Weight lam = wt(w2, "5,1");
    auto m = WeightModule::verma(w2, lam, 4);
    CHECK(m.check_brackets());
    // n^- = {x21 (even), d1, d2 (odd)}: dims per weight from PBW.
    // Weight lam - eps1 + eps2 (one x21): 1; lam - eps1 (d1 alone...).
    Weight a = w2->sys()->canonical(lam - w2->sys()->eps(1) + w2->sys()->eps(2));
    CHECK(m.dim_at(a) >= 1);
}

TEST_CASE("Freudenthal oracle") {
    // sl(2), (lam, alpha^vee) = 2: dims 1,1,1.
    auto pos = block_positive_roots(BlockType::A, 2);
    LocalWeight lam{Rat(1), Rat(-1)};
    auto weyl = block_weyl_images(BlockType::A, lam);
    auto table = freudenthal_weights(pos, lam, weyl);
    CHECK(table.size() == 3);
    for (const auto& [w, m] : table) CHECK(m == 1);
    CHECK(freudenthal_dimension(pos, lam, weyl) == 3);

    // sl(3) adjoint: multiplicity 2 at zero, dimension 8.
    auto pos3 = block_positive_roots(BlockType::A, 3);
    LocalWeight adj{Rat(1), Rat(0), Rat(-1)};
    auto weyl3 = block_weyl_images(BlockType::A, adj);
    auto t3 = freudenthal_weights(pos3, adj, weyl3);
    CHECK(freudenthal_dimension(pos3, adj, weyl3) == 8);
    CHECK(t3.at(LocalWeight{Rat(0), Rat(0), Rat(0)}) == 2);

    // lam = 0: trivial module.
    LocalWeight zero3{Rat(0), Rat(0), Rat(0)};
    CHECK(freudenthal_dimension(pos3, zero3, block_weyl_images(BlockType::A, zero3)) == 1);

    // so(4), lam = eps1: dimension 4.
    auto posd = so_positive_roots(2);
    LocalWeight e1{Rat(1), Rat(0)};
    CHECK(freudenthal_dimension(posd, e1, so_weyl_images(e1)) == 4);

    // sp(4), lam = eps1: dimension 4 (defining representation).
    auto posc = block_positive_roots(BlockType::C, 2);
    CHECK(freudenthal_dimension(posc, e1, block_weyl_images(BlockType::C, e1)) == 4);
}

TEST_CASE("Verma composition oracle on sl(2)") {
    auto sl2 = LabAlgebra::make("sl2");
    // Nonintegral: simple Verma.
    auto c1 = verma_composition_oracle(sl2, wt(sl2, "1/3,-1/3"), 8);
    REQUIRE(c1.size() == 1);
    CHECK(c1[0].second == 1);

    // (lam + rho, alpha^vee) = 3: factors lam and lam - 3 alpha.
    Weight lam = wt(sl2, "1,-1");
    auto c2 = verma_composition_oracle(sl2, lam, 8);
    REQUIRE(c2.size() == 2);
    CHECK(c2[0].first == sl2->sys()->canonical(lam));
    CHECK(c2[0].second == 1);
    Weight alpha = sl2->sys()->canonical(sl2->sys()->eps(1) - sl2->sys()->eps(2));
    CHECK(c2[1].first == sl2->sys()->canonical(lam - alpha * Rat(3)));
    CHECK(c2[1].second == 1);

    // lam = -rho: simple.
    auto c3 = verma_composition_oracle(sl2, wt(sl2, "-1/2,1/2"), 8);
    REQUIRE(c3.size() == 1);
}

TEST_CASE("composition series of an sl(2) Verma window") {
    auto sl2 = LabAlgebra::make("sl2");
    auto m = WeightModule::verma(sl2, wt(sl2, "1,-1"), 8);
    auto chain = m.composition_series();
    REQUIRE(chain.size() == 2);
    CHECK(chain[0].total_dim() == 6);  // the submodule generated by f^3 v
    CHECK(m.is_invariant(chain[0]));
}
