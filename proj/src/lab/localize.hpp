#pragma once

#include <set>

#include "module.hpp"

namespace sw::lab {

// Twisted localization along a commuting set Gamma = {f_alpha} acting
// injectively on a window module. The localized module M_F is realized per
// weight by a deep anchor space M^{w - K alpha} where the f-chains have
// stabilized to bijections; twisted actions come from the Theta formula
//   Theta_x(u) = sum_{i <= N(u)} binom(x_1,i_1)...binom(x_l,i_l)
//                ad(f_1)^{i_1}...ad(f_l)^{i_l}(u) f_1^{-i_1}...f_l^{-i_l}
// with exact rational binomials.
class Localization {
  public:
    // anchor_steps: uniform K for every gamma element. Throws not_injective
    // when some f_alpha has a kernel on the window.
    Localization(const WeightModule& m, std::vector<size_t> f_elems,
                 int anchor_steps);

    const WeightModule& base() const { return *m_; }
    const std::vector<size_t>& gamma_elems() const { return f_; }
    // alpha_j = -weight(f_j), canonical.
    const std::vector<Weight>& gamma_roots() const { return alpha_; }

    // Weights of M_F where all twisted actions are computable.
    const std::set<Weight>& safe_weights() const { return safe_; }
    bool safe(const Weight& w_f) const { return safe_.count(m_->alg()->sys()->canonical(w_f)) > 0; }

    // Psi^mu_Gamma(M) as a window module on the safe weights (shifted by
    // mu). mu must lie in the rational span of the gamma roots.
    WeightModule psi(const Weight& mu) const;

    // Solves mu = -(x_1 alpha_1 + ... ); throws when mu is outside the span.
    std::vector<Rat> twist_exponents(const Weight& mu) const;

    // Integer-twist conjugation matrices f^x g f^{-x} for cross-checking the
    // Theta formula; x >= 0 componentwise.
    std::optional<Mat> conjugation_action(size_t g, const Weight& w_f,
                                          const std::vector<long>& x) const;
    std::optional<Mat> theta_action(size_t g, const Weight& w_f,
                                    const std::vector<Rat>& x) const;

    // (N)_F in anchor coordinates: the submodule of psi(0) induced by an
    // f-invariant submodule N of M. Throws window_too_small when N has not
    // stabilized at the anchors.
    WeightModule::Submodule psi_submodule(const WeightModule::Submodule& n) const;

    // (N)_F cap M as a submodule of M, on the weights where the K-step
    // chain stays inside the window.
    WeightModule::Submodule localization_closure(const WeightModule::Submodule& n) const;
    // Weights of M where localization_closure is certified.
    std::vector<size_t> closure_region() const;

    bool localization_equal(const WeightModule::Submodule& a,
                            const WeightModule::Submodule& b) const;

    // Phi^{-mu}(L) for a submodule L of psi(mu), as a submodule of M.
    WeightModule::Submodule phi(const WeightModule::Submodule& l,
                                const Weight& mu) const;

    // Chain matrix of f^{steps} from the weight w of M (downward), when all
    // factors exist.
    std::optional<Mat> chain(const Weight& w, const std::vector<long>& steps) const;
    // Inverse chain (upward) from w; requires bijectivity along the path.
    std::optional<Mat> inv_chain(const Weight& w, const std::vector<long>& steps) const;

    Weight anchor_of(const Weight& w) const;

  private:
    const WeightModule* m_;
    std::vector<size_t> f_;
    std::vector<Weight> alpha_;
    int k_;
    int nmax_ = 0;
    std::set<Weight> safe_;
};

// Gamma-injective composition series (Theorem ordering): a composition
// series regrouped by localization classes via the exchange move
// M_2' = M_3 cap (M_1)_F, so that classes are contiguous and the class
// quotients are Gamma-injective.
struct GroupedSeries {
    std::vector<WeightModule::Submodule> chain;  // 0 excluded, M included
    std::vector<size_t> group_of;                // per chain entry
};
GroupedSeries gamma_injective_series(const WeightModule& m, const Localization& loc);

// Is the quotient b/a Gamma-injective? (Lemma criterion a = b cap (a)_F.)
bool quotient_gamma_injective(const WeightModule& m, const Localization& loc,
                              const WeightModule::Submodule& a,
                              const WeightModule::Submodule& b);

}  // namespace sw::lab
