#include "localize.hpp"

#include <algorithm>
#include <functional>

#include "../error.hpp"

namespace sw::lab {

Localization::Localization(const WeightModule& m, std::vector<size_t> f_elems,
                           int anchor_steps)
    : m_(&m), f_(std::move(f_elems)), k_(anchor_steps) {
    const auto& sys = m.alg()->sys();
    for (size_t f : f_) alpha_.push_back(sys->canonical(-m.alg()->gen(f).weight));
    // Pairwise commutation of the chosen f's.
    for (size_t i = 0; i < f_.size(); ++i)
        for (size_t j = 0; j < f_.size(); ++j)
            if (i != j)
                check_invariant(m.alg()->bracket(f_[i], f_[j]).empty(),
                                "gamma elements must commute");
    // Injectivity on the window interior: a kernel anywhere is a genuine
    // obstruction (torsion), reported as not-injective.
    for (size_t f : f_) {
        for (size_t wi = 0; wi < m.space_count(); ++wi) {
            const Mat* a = m.action(f, wi);
            if (!a) continue;
            if (a->kernel().cols() > 0)
                fail(Code::not_injective,
                     "f_alpha has a kernel at weight " +
                         sys->weight_str(m.weight(wi)) +
                         "; the module is not Gamma-injective");
        }
    }
    // Nilpotence bound for the Theta sums.
    for (size_t f : f_)
        for (size_t g = 0; g < m.alg()->size(); ++g)
            nmax_ = std::max(nmax_, m.alg()->ad_nilpotence(f, g));

    // Safe weights: the anchor box [anchor(w), anchor(w) + (k + nmax) alpha]
    // must consist of square invertible f-matrices.
    for (size_t wi = 0; wi < m.space_count(); ++wi) {
        const Weight& w = m.weight(wi);
        bool ok = true;
        // Walk the box level by level along each gamma direction.
        std::function<bool(Weight, std::vector<long>)> box_ok =
            [&](Weight base, std::vector<long> rem) -> bool {
            // For each direction with remaining budget, the f-matrix between
            // base and base - alpha_j must be square and invertible.
            for (size_t j = 0; j < f_.size(); ++j) {
                if (rem[j] == 0) continue;
                Weight up = sys->canonical(base + alpha_[j]);
                int ui = m.index_of(up);
                int bi = m.index_of(base);
                size_t updim = ui < 0 ? 0 : m.dim(static_cast<size_t>(ui));
                size_t bdim = bi < 0 ? 0 : m.dim(static_cast<size_t>(bi));
                if (updim != bdim) return false;
                if (updim > 0) {
                    const Mat* a = m.action(f_[j], static_cast<size_t>(ui));
                    if (!a) return false;
                    if (!a->inverse()) return false;
                }
                auto rem2 = rem;
                rem2[j] -= 1;
                if (!box_ok(up, rem2)) return false;
            }
            return true;
        };
        Weight anchor = w;
        bool anchored = true;
        for (size_t j = 0; j < f_.size(); ++j)
            for (int s = 0; s < k_; ++s) anchor = sys->canonical(anchor - alpha_[j]);
        if (!m.in_window(anchor)) anchored = false;
        if (anchored) {
            std::vector<long> budget(f_.size(), k_ + nmax_);
            ok = box_ok(anchor, budget);
        } else {
            ok = false;
        }
        if (ok) safe_.insert(w);
    }
    if (safe_.empty())
        fail(Code::window_too_small,
             "no weight admits a stabilized anchor; deepen the window");
}

Weight Localization::anchor_of(const Weight& w) const {
    Weight a = w;
    const auto& sys = m_->alg()->sys();
    for (size_t j = 0; j < f_.size(); ++j)
        for (int s = 0; s < k_; ++s) a = sys->canonical(a - alpha_[j]);
    return a;
}

std::optional<Mat> Localization::chain(const Weight& w,
                                       const std::vector<long>& steps) const {
    const auto& sys = m_->alg()->sys();
    Weight cur = sys->canonical(w);
    int ci = m_->index_of(cur);
    if (ci < 0) return std::nullopt;
    Mat acc = Mat::identity(m_->dim(static_cast<size_t>(ci)));
    for (size_t j = 0; j < f_.size(); ++j) {
        for (long s = 0; s < steps[j]; ++s) {
            int i = m_->index_of(cur);
            if (i < 0) return std::nullopt;
            const Mat* a = m_->action(f_[j], static_cast<size_t>(i));
            if (!a) return std::nullopt;
            acc = (*a) * acc;
            cur = sys->canonical(cur - alpha_[j]);
        }
    }
    return acc;
}

std::optional<Mat> Localization::inv_chain(const Weight& w,
                                           const std::vector<long>& steps) const {
    const auto& sys = m_->alg()->sys();
    Weight cur = sys->canonical(w);
    int ci = m_->index_of(cur);
    if (ci < 0) return std::nullopt;
    Mat acc = Mat::identity(m_->dim(static_cast<size_t>(ci)));
    for (size_t j = 0; j < f_.size(); ++j) {
        for (long s = 0; s < steps[j]; ++s) {
            Weight up = sys->canonical(cur + alpha_[j]);
            int ui = m_->index_of(up);
            if (ui < 0) return std::nullopt;
            const Mat* a = m_->action(f_[j], static_cast<size_t>(ui));
            if (!a) return std::nullopt;
            auto inv = a->inverse();
            if (!inv) return std::nullopt;
            acc = (*inv) * acc;
            cur = up;
        }
    }
    return acc;
}

std::vector<Rat> Localization::twist_exponents(const Weight& mu) const {
    // Solve mu = -(x_1 alpha_1 + ...) modulo the quotient relation.
    const auto& sys = m_->alg()->sys();
    size_t d = sys->dim(), l = f_.size();
    bool rel = sys->has_quotient();
    Mat a(d, l + (rel ? 1 : 0));
    for (size_t j = 0; j < l; ++j)
        for (size_t r = 0; r < d; ++r) a.at(r, j) = alpha_[j][r];
    if (rel)
        for (size_t r = 0; r < d; ++r) a.at(r, l) = sys->relation()[r];
    Weight cmu = sys->canonical(mu);
    Mat rhs(d, 1);
    for (size_t r = 0; r < d; ++r) rhs.at(r, 0) = -cmu[r];
    auto sol = a.solve(rhs);
    if (!sol)
        fail(Code::invalid_parameters,
             "twist mu is not in the span of the gamma roots");
    std::vector<Rat> x(l);
    for (size_t j = 0; j < l; ++j) x[j] = sol->at(j, 0);
    return x;
}

std::optional<Mat> Localization::theta_action(size_t g, const Weight& w_f,
                                              const std::vector<Rat>& x) const {
    // Matrix of Theta_x(g) : M_F^{w_f} -> M_F^{w_f + wt(g)} in anchor
    // coordinates.
    const auto& alg = m_->alg();
    const auto& sys = alg->sys();
    Weight anchor = anchor_of(w_f);
    int ai = m_->index_of(anchor);
    if (ai < 0) return std::nullopt;
    size_t l = f_.size();
    std::vector<int> nmax(l);
    for (size_t j = 0; j < l; ++j) nmax[j] = alg->ad_nilpotence(f_[j], g);

    std::optional<Mat> acc;
    std::vector<long> idx(l, 0);
    while (true) {
        // Coefficient prod binom(x_j, i_j).
        Rat coef(1);
        for (size_t j = 0; j < l; ++j)
            coef *= binomial(x[j], static_cast<unsigned>(idx[j]));
        if (coef != 0) {
            // ad(f_1)^{i_1} ... ad(f_l)^{i_l}(g)
            AlgCombo combo{{g, Rat(1)}};
            for (size_t j = l; j-- > 0;)
                for (long s = 0; s < idx[j]; ++s) combo = alg->ad(f_[j], combo);
            if (!combo.empty()) {
                auto up = inv_chain(anchor, idx);
                if (!up) return std::nullopt;
                Weight mid = anchor;
                for (size_t j = 0; j < l; ++j)
                    for (long s = 0; s < idx[j]; ++s)
                        mid = sys->canonical(mid + alpha_[j]);
                int mi = m_->index_of(mid);
                if (mi < 0) return std::nullopt;
                auto act = m_->combo_action(combo, static_cast<size_t>(mi));
                if (!act) return std::nullopt;
                Mat term = (*act) * (*up) * coef;
                if (!acc)
                    acc = term;
                else {
                    if (acc->rows() != term.rows()) return std::nullopt;
                    acc = *acc + term;
                }
            }
        }
        // Advance the multi-index.
        size_t j = 0;
        while (j < l && idx[j] == nmax[j]) {
            idx[j] = 0;
            ++j;
        }
        if (j == l) break;
        idx[j] += 1;
    }
    if (!acc) {
        // All terms vanished: the zero map into the target anchor space.
        Weight tgt = sys->canonical(anchor + alg->gen(g).weight);
        int ti = m_->index_of(tgt);
        size_t rows = ti < 0 ? 0 : m_->dim(static_cast<size_t>(ti));
        return Mat(rows, m_->dim(static_cast<size_t>(ai)));
    }
    return acc;
}

std::optional<Mat> Localization::conjugation_action(size_t g, const Weight& w_f,
                                                    const std::vector<long>& x) const {
    // f^x g f^{-x} on anchor coordinates.
    const auto& sys = m_->alg()->sys();
    Weight anchor = anchor_of(w_f);
    auto up = inv_chain(anchor, x);
    if (!up) return std::nullopt;
    Weight mid = anchor;
    for (size_t j = 0; j < f_.size(); ++j)
        for (long s = 0; s < x[j]; ++s) mid = sys->canonical(mid + alpha_[j]);
    int mi = m_->index_of(mid);
    if (mi < 0) return std::nullopt;
    const Mat* act = m_->action(g, static_cast<size_t>(mi));
    if (!act) return std::nullopt;
    Weight moved = sys->canonical(mid + m_->alg()->gen(g).weight);
    auto down = chain(moved, x);
    if (!down) return std::nullopt;
    return (*down) * (*act) * (*up);
}

WeightModule Localization::psi(const Weight& mu) const {
    auto x = twist_exponents(mu);
    const auto& alg = m_->alg();
    const auto& sys = alg->sys();
    WeightModule out;
    // Assemble a WeightModule by hand: weights are w_f + mu for safe w_f.
    struct Space {
        Weight w;
        size_t dim;
        Rat level;
    };
    // Reuse private-access pattern: build through the public-ish path is not
    // available, so psi constructs the object via friend-free composition:
    // we fill a fresh module using the same invariants.
    out = WeightModule::trivial_line(alg, m_->active(), sys->canonical(mu));
    out.psi_fill(*this, x, mu);
    return out;
}

WeightModule::Submodule Localization::psi_submodule(
    const WeightModule::Submodule& n) const {
    WeightModule::Submodule out;
    const auto& sys = m_->alg()->sys();
    for (const auto& w : safe_) {
        Weight anchor = anchor_of(w);
        int ai = m_->index_of(anchor);
        if (ai < 0) continue;
        Mat sp = n.at(static_cast<size_t>(ai), *m_);
        // Stabilization: the f-chain must carry N bijectively across the
        // anchor box.
        for (size_t j = 0; j < f_.size(); ++j) {
            Weight up = sys->canonical(anchor + alpha_[j]);
            int ui = m_->index_of(up);
            if (ui < 0) {
                if (sp.cols() > 0)
                    fail(Code::window_too_small, "submodule not stabilized");
                continue;
            }
            Mat upsp = n.at(static_cast<size_t>(ui), *m_);
            if (upsp.cols() != sp.cols())
                fail(Code::window_too_small,
                     "submodule dimensions not stabilized at the anchor");
        }
        if (sp.cols() > 0) {
            int wi = m_->index_of(w);
            (void)wi;
            out.space[static_cast<size_t>(ai)] = sp;  // keyed by anchor index
        }
    }
    return out;
}

std::vector<size_t> Localization::closure_region() const {
    std::vector<size_t> out;
    std::vector<long> ksteps(f_.size(), k_);
    for (size_t wi = 0; wi < m_->space_count(); ++wi)
        if (chain(m_->weight(wi), ksteps)) out.push_back(wi);
    return out;
}

WeightModule::Submodule Localization::localization_closure(
    const WeightModule::Submodule& n) const {
    WeightModule::Submodule out;
    std::vector<long> ksteps(f_.size(), k_);
    for (size_t wi : closure_region()) {
        auto ch = chain(m_->weight(wi), ksteps);
        Weight anchor = anchor_of(m_->weight(wi));
        int ai = m_->index_of(anchor);
        if (ai < 0) continue;
        Mat target = n.at(static_cast<size_t>(ai), *m_);
        // Preimage of span(target) under the chain matrix.
        // Solve: chain * v in span(target)  <=>  [chain | target] kernel.
        Mat aug = Mat::hstack(*ch, target * Rat(-1));
        Mat ker = aug.kernel();
        // Extract the v-part (first dim columns).
        size_t dim = m_->dim(wi);
        Mat pre(dim, ker.cols());
        for (size_t i = 0; i < dim; ++i)
            for (size_t j = 0; j < ker.cols(); ++j) pre.at(i, j) = ker.at(i, j);
        Mat basis = pre.column_basis();
        if (basis.cols() > 0) out.space[wi] = basis;
    }
    return out;
}

bool Localization::localization_equal(const WeightModule::Submodule& a,
                                      const WeightModule::Submodule& b) const {
    for (const auto& w : safe_) {
        int ai = m_->index_of(anchor_of(w));
        if (ai < 0) continue;
        Mat sa = a.at(static_cast<size_t>(ai), *m_);
        Mat sb = b.at(static_cast<size_t>(ai), *m_);
        if (!Mat::same_space(sa, sb)) return false;
    }
    return true;
}

WeightModule::Submodule Localization::phi(const WeightModule::Submodule& l,
                                          const Weight& mu) const {
    // L is a submodule of psi(mu): spaces indexed by psi weight spaces whose
    // coordinates are anchor coordinates of M_F at w_psi - mu.
    WeightModule::Submodule out;
    const auto& sys = m_->alg()->sys();
    WeightModule p = psi(mu);
    std::vector<long> ksteps(f_.size(), k_);
    for (size_t wi = 0; wi < m_->space_count(); ++wi) {
        const Weight& eta = m_->weight(wi);
        Weight wpsi = sys->canonical(eta + mu);
        int pi = p.index_of(wpsi);
        if (pi < 0) continue;
        Mat target = l.at(static_cast<size_t>(pi), p);
        auto ch = chain(eta, ksteps);
        if (!ch) continue;
        Mat aug = Mat::hstack(*ch, target * Rat(-1));
        Mat ker = aug.kernel();
        size_t dim = m_->dim(wi);
        Mat pre(dim, ker.cols());
        for (size_t i = 0; i < dim; ++i)
            for (size_t j = 0; j < ker.cols(); ++j) pre.at(i, j) = ker.at(i, j);
        Mat basis = pre.column_basis();
        if (basis.cols() > 0) out.space[wi] = basis;
    }
    return out;
}

bool quotient_gamma_injective(const WeightModule& m, const Localization& loc,
                              const WeightModule::Submodule& a,
                              const WeightModule::Submodule& b) {
    // b/a is Gamma-injective iff a = b cap (a)_F on the certified region.
    auto af = loc.localization_closure(a);
    auto cap = m.submodule_intersect(b, af);
    for (size_t wi : loc.closure_region()) {
        Mat xa = a.at(wi, m);
        Mat xc = cap.at(wi, m);
        if (!Mat::same_space(xa, xc)) return false;
    }
    return true;
}

GroupedSeries gamma_injective_series(const WeightModule& m, const Localization& loc) {
    auto chain = m.composition_series();
    // Exchange passes: where the class of (M_i)_F repeats non-contiguously
    // the switch move rewrites the middle term.
    auto loc_class_equal = [&](const WeightModule::Submodule& x,
                               const WeightModule::Submodule& y) {
        return loc.localization_equal(x, y);
    };
    bool changed = true;
    int guard = 0;
    while (changed) {
        changed = false;
        if (++guard > 256) fail(Code::internal, "series exchange runaway");
        for (size_t i = 0; i + 1 < chain.size(); ++i) {
            // Triple (M1, M2, M3) with M2/M1 injective and (M2)_F = (M3)_F:
            // replace M2 by M3 cap (M1)_F.
            WeightModule::Submodule m1 =
                i == 0 ? m.zero_submodule() : chain[i - 1];
            const auto& m2 = chain[i];
            const auto& m3 = chain[i + 1];
            if (!loc_class_equal(m2, m3)) continue;
            if (loc_class_equal(m1, m2)) continue;
            if (!quotient_gamma_injective(m, loc, m1, m2)) continue;
            auto m2p = m.submodule_intersect(m3, loc.localization_closure(m1));
            // Keep the window normal form: closure under the action.
            m2p = m.closure(std::move(m2p));
            if (m.submodule_equal(m2p, chain[i])) continue;
            chain[i] = m2p;
            changed = true;
        }
    }
    GroupedSeries out;
    out.chain = chain;
    out.group_of.resize(chain.size());
    size_t gidx = 0;
    for (size_t i = 0; i < chain.size(); ++i) {
        if (i > 0 && !loc_class_equal(chain[i - 1], chain[i])) ++gidx;
        out.group_of[i] = gidx;
    }
    return out;
}

}  // namespace sw::lab
