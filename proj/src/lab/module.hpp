#pragma once

#include <map>
#include <optional>
#include <set>

#include "../linalg.hpp"
#include "labalgebra.hpp"

namespace sw::lab {

// A weight module realized on a finite weight window with exact action
// matrices. Construction is by parabolic induction from a window module R
// over the level-zero subalgebra of a functional l: u^- = {level < 0}
// elements act freely (PBW), u = {level > 0} acts trivially on R.
//
// Window semantics: a weight w is inside the window when
// height(top_ref - w) <= depth; action matrices exist exactly for targets
// inside the window. Everything on the window is exact; statements that
// need to cross the bottom boundary are the caller's responsibility.
class WeightModule {
  public:
    // R with a single basis vector of weight lam (for Verma-type induction).
    static WeightModule trivial_line(const LabAlgebraPtr& alg,
                                     const std::vector<size_t>& active,
                                     const Weight& lam);

    // Parabolic induction M_p(R). active lists the elements of the acting
    // subalgebra ("g" for this module); l the defining functional (will be
    // normalized to vanish on the quotient relation).
    static WeightModule induce(const LabAlgebraPtr& alg,
                               const std::vector<size_t>& active,
                               const std::vector<Rat>& l, const WeightModule& r,
                               int depth);

    // Verma module over the active subalgebra: Borel induction by basis
    // height. depth caps the window (throws depth_too_large above the cap).
    static WeightModule verma(const LabAlgebraPtr& alg,
                              const std::vector<size_t>& active,
                              const Weight& lam, int depth);
    static WeightModule verma(const LabAlgebraPtr& alg, const Weight& lam,
                              int depth);

    const LabAlgebraPtr& alg() const { return alg_; }
    const std::vector<size_t>& active() const { return active_; }
    const std::vector<Rat>& functional() const { return l_; }

    size_t space_count() const { return weights_.size(); }
    const std::vector<Weight>& support() const { return weights_; }
    int index_of(const Weight& w) const;
    size_t dim(size_t wi) const { return dims_[wi]; }
    size_t dim_at(const Weight& w) const;
    const Weight& weight(size_t wi) const { return weights_[wi]; }
    Rat level(size_t wi) const { return levels_[wi]; }
    Rat depth_of_weight(const Weight& w) const;  // height(top_ref - w)
    int depth() const { return depth_; }
    const Weight& top_ref() const { return top_ref_; }
    bool in_window(const Weight& w) const;

    // Action matrix of element e on weight space wi; nullptr when the
    // target weight falls outside the window (truncated).
    const Mat* action(size_t e, size_t wi) const;
    Weight target_weight(size_t e, size_t wi) const;

    // Sum of several element actions given as an algebra combination.
    std::optional<Mat> combo_action(const AlgCombo& c, size_t wi) const;

    // Top slice: weights at the maximal level (the image of R).
    std::vector<size_t> top_slice() const;
    Rat top_level() const { return top_level_; }

    // Bracket-relation residual check on the window interior: verifies
    // act([x,y]) = act(x)act(y) -+ act(y)act(x) wherever all matrices exist.
    bool check_brackets() const;

    // Quotient by a submodule (see below); weight spaces shrink, zero
    // spaces are dropped.
    struct Submodule;
    WeightModule quotient(const Submodule& z) const;

    // The sum of all submodules meeting the top slice trivially (Z_p) --
    // exact on the whole window because only raising paths are needed.
    Submodule maximal_trivial_intersection() const;

    // Common kernel of the given elements, certified per weight: weights
    // where some constraint target is truncated are omitted.
    std::map<size_t, Mat> invariants(const std::vector<size_t>& elems) const;

    // --- Submodules ---------------------------------------------------------
    struct Submodule {
        std::map<size_t, Mat> space;  // weight index -> column span

        bool is_zero() const;
        size_t total_dim() const;
        Mat at(size_t wi, const WeightModule& m) const;  // empty Mat if absent
    };

    Submodule zero_submodule() const { return Submodule{}; }
    Submodule full_submodule() const;
    // Closure under all existing action matrices (lowering images falling
    // outside the window are dropped -- window truncation).
    Submodule closure(Submodule seed) const;
    Submodule generated_by(size_t wi, const std::vector<Rat>& vec) const;
    bool submodule_contains(const Submodule& a, const Submodule& b) const;
    bool submodule_equal(const Submodule& a, const Submodule& b) const;
    Submodule submodule_sum(const Submodule& a, const Submodule& b) const;
    Submodule submodule_intersect(const Submodule& a, const Submodule& b) const;
    // Verifies invariance of the given spaces (no proper check of closure).
    bool is_invariant(const Submodule& s) const;

    // Composition series 0 = N_0 < N_1 < ... < N_r = M (window semantics).
    std::vector<Submodule> composition_series() const;

  private:
    WeightModule() = default;
    void build_actions();

    LabAlgebraPtr alg_;
    std::vector<size_t> active_;
    std::vector<Rat> l_;
    int depth_ = 0;
    Weight top_ref_;
    Rat top_level_{0};

    std::vector<Weight> weights_;
    std::map<Weight, size_t> index_;
    std::vector<size_t> dims_;
    std::vector<Rat> levels_;

    // Basis bookkeeping for induction: per weight space, the list of
    // (monomial over u^-, R overall basis position) labels.
    struct BasisLabel {
        std::vector<size_t> mono;  // non-decreasing element indices
        size_t r_pos;
    };
    std::vector<std::vector<BasisLabel>> labels_;
    std::map<std::pair<std::vector<size_t>, size_t>, std::pair<size_t, size_t>>
        label_index_;  // label -> (weight idx, position)

    std::vector<size_t> u_minus_;  // PBW order
    // R bookkeeping: overall R position -> (R weight index, R inner position)
    const WeightModule* r_ = nullptr;  // only during construction
    std::vector<std::pair<size_t, size_t>> r_positions_;

    std::map<std::pair<size_t, size_t>, Mat> act_;  // (elem, weight idx)

    std::vector<Rat> act_on_basis(size_t e, size_t wi, size_t pos,
                                  std::map<std::tuple<size_t, size_t, size_t>,
                                           std::vector<Rat>>& memo) const;
};

// Normalizes a level functional to vanish on the quotient relation (so that
// evaluation on canonical representatives matches literal root levels).
// Throws invalid_parameters for psl functionals with a nonzero value.
std::vector<Rat> normalize_functional(const RootSystemPtr& sys,
                                      std::vector<Rat> l);

}  // namespace sw::lab
