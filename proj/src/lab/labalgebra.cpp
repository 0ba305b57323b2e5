#include "labalgebra.hpp"

#include <algorithm>

#include "../error.hpp"
#include "../linalg.hpp"

namespace sw::lab {

std::vector<std::string> LabAlgebra::catalog() {
    return {"sl2", "sl3", "gl11", "gl21", "sl21", "w2"};
}

int LabAlgebra::index_of(const std::string& name) const {
    for (size_t i = 0; i < gens_.size(); ++i)
        if (gens_[i].name == name) return static_cast<int>(i);
    return -1;
}

Rat LabAlgebra::height_of(size_t i) const {
    return basis_.height(gens_[i].weight);
}

Rat LabAlgebra::weight_eval(const Weight& lam, size_t h) const {
    const auto& v = gens_[h].cartan_vec;
    if (v.empty()) fail(Code::internal, "weight_eval on a non-Cartan element");
    Rat s(0);
    for (size_t k = 0; k < v.size(); ++k) s += lam[k] * v[k];
    return s;
}

AlgCombo LabAlgebra::bracket_combo(const AlgCombo& a, const AlgCombo& b) const {
    std::map<size_t, Rat> acc;
    for (const auto& [i, ci] : a)
        for (const auto& [j, cj] : b)
            for (const auto& [k, ck] : brk_[i][j]) acc[k] += ci * cj * ck;
    AlgCombo out;
    for (const auto& [k, c] : acc)
        if (c != 0) out.emplace_back(k, c);
    return out;
}

AlgCombo LabAlgebra::ad(size_t f, const AlgCombo& x) const {
    return bracket_combo(AlgCombo{{f, Rat(1)}}, x);
}

int LabAlgebra::ad_nilpotence(size_t f, size_t x) const {
    AlgCombo cur{{x, Rat(1)}};
    int n = 0;
    while (!cur.empty()) {
        cur = ad(f, cur);
        if (cur.empty()) break;
        ++n;
        if (n > 64) fail(Code::internal, "ad chain does not terminate");
    }
    return n;
}

std::vector<size_t> LabAlgebra::elems_with_level_sign(const std::vector<Rat>& l,
                                                      int sign) const {
    std::vector<size_t> out;
    for (size_t i = 0; i < gens_.size(); ++i) {
        Rat lev(0);
        for (size_t k = 0; k < l.size(); ++k) lev += l[k] * gens_[i].weight[k];
        int s = lev > 0 ? 1 : (lev < 0 ? -1 : 0);
        if (s == sign) out.push_back(i);
    }
    return out;
}

// Expresses each pairwise super bracket of the given matrices in the basis
// they span. even_rows = number of even coordinates of the representation
// space (parity of row/column indices).
void LabAlgebra::finish(std::vector<std::vector<std::vector<Rat>>> mats,
                        std::vector<int> parities, std::vector<std::string> names,
                        bool super, size_t even_rows) {
    size_t n = mats.size();
    size_t dim = mats[0].size();
    auto flatten = [&](const std::vector<std::vector<Rat>>& m) {
        std::vector<Rat> v;
        v.reserve(dim * dim);
        for (const auto& row : m)
            for (const auto& x : row) v.push_back(x);
        return v;
    };
    Mat basis_mat(dim * dim, n);
    for (size_t j = 0; j < n; ++j) basis_mat.set_col(j, flatten(mats[j]));
    check_invariant(basis_mat.rank() == n, "lab basis matrices must be independent");

    auto mul = [&](const std::vector<std::vector<Rat>>& a,
                   const std::vector<std::vector<Rat>>& b) {
        std::vector<std::vector<Rat>> c(dim, std::vector<Rat>(dim, Rat(0)));
        for (size_t i = 0; i < dim; ++i)
            for (size_t k = 0; k < dim; ++k) {
                if (a[i][k] == 0) continue;
                for (size_t j = 0; j < dim; ++j) c[i][j] += a[i][k] * b[k][j];
            }
        return c;
    };

    brk_.assign(n, std::vector<AlgCombo>(n));
    for (size_t i = 0; i < n; ++i)
        for (size_t j = 0; j < n; ++j) {
            auto ab = mul(mats[i], mats[j]);
            auto ba = mul(mats[j], mats[i]);
            int s = (super && parities[i] == 1 && parities[j] == 1) ? 1 : -1;
            // [a,b] = ab - (-1)^{p q} ba
            std::vector<std::vector<Rat>> br(dim, std::vector<Rat>(dim, Rat(0)));
            for (size_t r = 0; r < dim; ++r)
                for (size_t c2 = 0; c2 < dim; ++c2)
                    br[r][c2] = ab[r][c2] + Rat(s) * ba[r][c2];
            auto sol = basis_mat.solve(Mat::col_vector(flatten(br)));
            check_invariant(sol.has_value(), "lab bracket leaves the span");
            AlgCombo combo;
            for (size_t k = 0; k < n; ++k)
                if (sol->at(k, 0) != 0) combo.emplace_back(k, sol->at(k, 0));
            brk_[i][j] = std::move(combo);
        }
    (void)even_rows;
    (void)names;
}

namespace {

struct MatrixModelSpec {
    RootSystemPtr sys;
    size_t rows_even, rows_odd;  // representation space parities
    // elements: (name, matrix positions) built below
};

std::vector<std::vector<Rat>> unit_matrix(size_t dim, size_t i, size_t j) {
    std::vector<std::vector<Rat>> m(dim, std::vector<Rat>(dim, Rat(0)));
    m[i][j] = Rat(1);
    return m;
}

}  // namespace

LabAlgebraPtr LabAlgebra::make(const std::string& which) {
    auto alg = std::shared_ptr<LabAlgebra>(new LabAlgebra());
    alg->name_ = which;

    auto add_gen = [&](const std::string& nm, const Weight& w, bool odd,
                       std::vector<Rat> cart) {
        alg->gens_.push_back(LabGen{nm, w, odd, std::move(cart)});
    };

    if (which == "sl2" || which == "sl3") {
        int m = which == "sl2" ? 2 : 3;
        alg->sys_ = SuperRootSystem::make(AlgebraKind::SL, m, 0);
        size_t dim = static_cast<size_t>(m);
        std::vector<std::vector<std::vector<Rat>>> mats;
        std::vector<int> par;
        std::vector<std::string> names;
        auto coord = [&](int k) { return alg->sys_->eps(k); };
        for (int i = 1; i <= m; ++i)
            for (int j = 1; j <= m; ++j) {
                if (i == j) continue;
                mats.push_back(unit_matrix(dim, i - 1, j - 1));
                par.push_back(0);
                std::string nm = "E" + std::to_string(i) + std::to_string(j);
                names.push_back(nm);
                add_gen(nm, coord(i) - coord(j), false, {});
            }
        for (int k = 1; k < m; ++k) {
            auto h = unit_matrix(dim, k - 1, k - 1);
            h[static_cast<size_t>(k)][static_cast<size_t>(k)] = Rat(-1);
            mats.push_back(h);
            par.push_back(0);
            std::string nm = "h" + std::to_string(k);
            names.push_back(nm);
            std::vector<Rat> cart(dim, Rat(0));
            cart[static_cast<size_t>(k - 1)] = Rat(1);
            cart[static_cast<size_t>(k)] = Rat(-1);
            add_gen(nm, Weight::zero(dim), false, cart);
        }
        alg->finish(std::move(mats), std::move(par), std::move(names), false, dim);
    } else if (which == "gl11" || which == "gl21" || which == "sl21") {
        int m = which == "gl11" ? 1 : 2;
        int n = 1;
        bool sl = which == "sl21";
        alg->sys_ = SuperRootSystem::make(sl ? AlgebraKind::SL : AlgebraKind::GL, m, n);
        size_t dim = static_cast<size_t>(m + n);
        auto parity = [&](int k) { return k > m ? 1 : 0; };
        auto coord = [&](int k) {
            return k <= m ? alg->sys_->eps(k) : alg->sys_->delta(k - m);
        };
        std::vector<std::vector<std::vector<Rat>>> mats;
        std::vector<int> par;
        std::vector<std::string> names;
        for (int i = 1; i <= m + n; ++i)
            for (int j = 1; j <= m + n; ++j) {
                if (i == j) continue;
                mats.push_back(unit_matrix(dim, i - 1, j - 1));
                par.push_back((parity(i) + parity(j)) % 2);
                std::string nm = "E" + std::to_string(i) + std::to_string(j);
                names.push_back(nm);
                add_gen(nm, coord(i) - coord(j), (parity(i) + parity(j)) % 2 != 0, {});
            }
        if (!sl) {
            for (int k = 1; k <= m + n; ++k) {
                mats.push_back(unit_matrix(dim, k - 1, k - 1));
                par.push_back(0);
                std::string nm = "E" + std::to_string(k) + std::to_string(k);
                names.push_back(nm);
                std::vector<Rat> cart(dim, Rat(0));
                cart[static_cast<size_t>(k - 1)] = Rat(1);
                add_gen(nm, Weight::zero(dim), false, cart);
            }
        } else {
            // Supertraceless Cartan: h1 = E11 - E22, h2 = E22 + E33.
            auto h1 = unit_matrix(dim, 0, 0);
            h1[1][1] = Rat(-1);
            mats.push_back(h1);
            par.push_back(0);
            names.push_back("h1");
            add_gen("h1", Weight::zero(dim), false, {Rat(1), Rat(-1), Rat(0)});
            auto h2 = unit_matrix(dim, 1, 1);
            h2[2][2] = Rat(1);
            mats.push_back(h2);
            par.push_back(0);
            names.push_back("h2");
            add_gen("h2", Weight::zero(dim), false, {Rat(0), Rat(1), Rat(1)});
        }
        alg->finish(std::move(mats), std::move(par), std::move(names), true,
                    static_cast<size_t>(m));
    } else if (which == "w2") {
        alg->sys_ = SuperRootSystem::make(AlgebraKind::W, 0, 2);
        // Operators on the Grassmann algebra with basis 1, xi1, xi2, xi1 xi2.
        const size_t dim = 4;
        auto subset_of = [](size_t idx) -> std::vector<int> {
            switch (idx) {
                case 0: return {};
                case 1: return {1};
                case 2: return {2};
                default: return {1, 2};
            }
        };
        auto index_of_subset = [](const std::vector<int>& s) -> size_t {
            if (s.empty()) return 0;
            if (s == std::vector<int>{1}) return 1;
            if (s == std::vector<int>{2}) return 2;
            return 3;
        };
        // Matrix of d_j (odd derivation).
        auto deriv = [&](int j) {
            std::vector<std::vector<Rat>> m(dim, std::vector<Rat>(dim, Rat(0)));
            for (size_t c = 0; c < dim; ++c) {
                auto s = subset_of(c);
                for (size_t t = 0; t < s.size(); ++t) {
                    if (s[t] != j) continue;
                    auto rest = s;
                    rest.erase(rest.begin() + static_cast<long>(t));
                    Rat sign = (t % 2 == 0) ? Rat(1) : Rat(-1);
                    m[index_of_subset(rest)][c] += sign;
                }
            }
            return m;
        };
        // Matrix of left multiplication by xi_i.
        auto ximul = [&](int i) {
            std::vector<std::vector<Rat>> m(dim, std::vector<Rat>(dim, Rat(0)));
            for (size_t c = 0; c < dim; ++c) {
                auto s = subset_of(c);
                if (std::find(s.begin(), s.end(), i) != s.end()) continue;
                int smaller = 0;
                for (int x : s)
                    if (x < i) ++smaller;
                auto u = s;
                u.push_back(i);
                std::sort(u.begin(), u.end());
                m[index_of_subset(u)][c] += (smaller % 2 == 0) ? Rat(1) : Rat(-1);
            }
            return m;
        };
        auto mul2 = [&](const std::vector<std::vector<Rat>>& a,
                        const std::vector<std::vector<Rat>>& b) {
            std::vector<std::vector<Rat>> c(dim, std::vector<Rat>(dim, Rat(0)));
            for (size_t i = 0; i < dim; ++i)
                for (size_t k = 0; k < dim; ++k)
                    for (size_t j = 0; j < dim; ++j) c[i][j] += a[i][k] * b[k][j];
            return c;
        };

        std::vector<std::vector<std::vector<Rat>>> mats;
        std::vector<int> par;
        std::vector<std::string> names;
        auto eps = [&](int i) { return alg->sys_->eps(i); };
        // d_j: weight -eps_j, odd.
        for (int j = 1; j <= 2; ++j) {
            mats.push_back(deriv(j));
            par.push_back(1);
            names.push_back("d" + std::to_string(j));
            add_gen("d" + std::to_string(j), -eps(j), true, {});
        }
        // xi_i d_j: weight eps_i - eps_j, even; diagonal ones are Cartan.
        for (int i = 1; i <= 2; ++i)
            for (int j = 1; j <= 2; ++j) {
                mats.push_back(mul2(ximul(i), deriv(j)));
                par.push_back(0);
                std::string nm = "x" + std::to_string(i) + std::to_string(j);
                names.push_back(nm);
                if (i == j) {
                    std::vector<Rat> cart(2, Rat(0));
                    cart[static_cast<size_t>(i - 1)] = Rat(1);
                    add_gen(nm, Weight::zero(2), false, cart);
                } else {
                    add_gen(nm, eps(i) - eps(j), false, {});
                }
            }
        // xi1 xi2 d_j: weight eps_1 + eps_2 - eps_j, odd.
        for (int j = 1; j <= 2; ++j) {
            mats.push_back(mul2(ximul(1), mul2(ximul(2), deriv(j))));
            par.push_back(1);
            std::string nm = "y" + std::to_string(j);
            names.push_back(nm);
            add_gen(nm, eps(1) + eps(2) - eps(j), true, {});
        }
        alg->finish(std::move(mats), std::move(par), std::move(names), true, 0);
    } else {
        fail(Code::invalid_parameters, "unknown lab algebra '" + which + "'");
    }

    alg->basis_ = RootBasis::standard(alg->sys_);
    return alg;
}

}  // namespace sw::lab
