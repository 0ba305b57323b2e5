#pragma once

#include <optional>
#include <utility>

#include "parabolic.hpp"

namespace sw {

// --- Block-level predicates (local coordinates, see rootsystem.hpp) -------

// (lam, alpha^vee) in Z>=0 for all simple roots of the block.
bool is_dominant_integral(const LocalWeight& lam, BlockType t);

// The normal-form constraints on lambda^{a_i}:
// type A (sl(m)):  sum l_j = 0,  l_j - l_{j+1} in Z>=0  iff  j = 2..m-1;
// type C (sp(2m)): l_j in 1/2 + Z,  l_1 >= ... >= l_m >= -1/2.
bool validate_normal_form(const LocalWeight& lam, BlockType t);

// Type A: l_1 - l_2 in Z (all tail gaps integral as well).
bool block_is_integral(const LocalWeight& lam);

// Type A: l_1 + ... + l_j + j = 0 for some j (the singularity test used by
// the mu[l] parametrization).
bool block_is_singular(const LocalWeight& lam);

// Bounded highest-weight test for a block: normal form, a Weyl dot-translate
// of a normal form, or dominant integral.
bool block_is_bounded(const LocalWeight& lam, BlockType t);

// mu[l] for dominant integral mu (type A): cyclic shift of the rho-shifted
// coordinates. nullopt is the zero marker (l >= m).
std::optional<LocalWeight> mu_bracket(const LocalWeight& mu, int l);

// Inverse of mu_bracket on regular integral weights: the unique (mu, l) with
// 1 <= l <= m-1. nullopt for nonintegral input; throws not_regular_integral
// for singular integral input (including integral weights not of mu[l] form).
std::optional<std::pair<LocalWeight, int>> regular_integral_decompose(
    const LocalWeight& lam);

// --- Weight-level predicates ----------------------------------------------

bool is_partially_finite(const Weight& lam, const Parabolic& p);

// Lemma: for bounded lambda, Gamma_a-injectivity is the negation of partial
// finiteness. Throws not_bounded when no block passes block_is_bounded.
bool is_gamma_injective(const Weight& lam, const Parabolic& p);

struct TypicalityResult {
    bool typical = true;
    // gl/sl/psl/osp: odd roots alpha with (mu + rho_B, alpha) = 0.
    std::vector<Weight> witness_roots;
    // p(m)/sp(m): ordered pairs (i, j), 1-based, with
    // (mu + rho_{sl(m)}, eps_i - eps_j) = 1.
    std::vector<std::pair<int, int>> witness_pairs;
    // W(n): indices i with mu = a eps_i + eps_{i+1} + ... + eps_n.
    std::vector<int> witness_indices;
};

TypicalityResult is_typical(const Weight& mu, const RootSystemPtr& sys,
                            const RootBasis& basis);

// s(mu + rho_B) = mu + rho_B for some s in W. Uses the coordinate fast path;
// cross-checked against the full orbit stabilizer in tests.
bool is_singular(const Weight& mu, const RootSystemPtr& sys, const RootBasis& basis);
bool is_singular_orbit(const Weight& mu, const RootSystemPtr& sys,
                       const RootBasis& basis, size_t cap = 100000);

// Canonical dot-orbit representative: lexicographically minimal element of
// W(mu + rho_B), minus rho_B.
Weight central_character(const Weight& mu, const RootSystemPtr& sys,
                         const RootBasis& basis, size_t cap = 100000);

// Dot action w . mu = w(mu + rho) - rho.
Weight dot_action(const RootSystemPtr& sys, const RootBasis& basis,
                  const WeylElement& w, const Weight& mu);

}  // namespace sw
