#pragma once

#include <optional>
#include <vector>

#include "rootsystem.hpp"

namespace sw {

// One simple factor a_i of the reductive part a = a_1 + ... + a_k + z.
// coords are ambient coordinate indices in adapted order; a type A block of
// size r is sl(r) (r >= 2), a type C block of size r is sp(2r).
struct Block {
    BlockType type;
    std::vector<int> coords;
    bool delta_block = false;
    Rat level;  // the common value of the defining functional on the block
};

// Parabolic p = u + a determined by an integer functional l on the ambient
// weight space: Delta(u) = {l > 0}, Delta_a = {l = 0}, Delta(u^-) = {l < 0}.
class Parabolic {
  public:
    // Validates the Proposition-catalog shape of the zero level; throws
    // not_parabolic / catalog_mismatch.
    static Parabolic build(const RootSystemPtr& sys, const std::vector<Rat>& l);

    const RootSystemPtr& sys() const { return sys_; }
    const std::vector<Rat>& functional() const { return l_; }

    // l evaluated on a literal ambient vector (roots are stored as such).
    Rat level(const Weight& ambient) const;

    const std::vector<Root>& u_roots() const { return u_; }
    const std::vector<Root>& u_minus_roots() const { return u_minus_; }
    const std::vector<Root>& a_roots() const { return a_; }
    const std::vector<Block>& blocks() const { return blocks_; }

    // Projection of a weight onto h*_{a_i}, in the block's local coordinates
    // (traceless for type A; identity on the block for type C).
    LocalWeight block_projection(const Weight& w, size_t i) const;
    // Ambient (canonical) weight with the given local block coordinates.
    Weight embed_block(const LocalWeight& lw, size_t i) const;
    Weight z_projection(const Weight& w) const;

    // Basis B of Delta with B inside Delta_p whose restriction to each block
    // is the block's standard basis. Throws invalid_parameters when the
    // functional is not adapted to the family's distinguished basis shape.
    const RootBasis& adapted_basis() const;
    bool has_adapted_basis() const { return adapted_.has_value(); }

    // Commuting basis Gamma_a of Q_a (templates; exhaustive fallback).
    std::vector<Weight> commuting_basis() const;

    // Membership of a difference vector in Q_a (integer span of Delta_a) and
    // in K tensor Q_a, compared in the quotient space.
    bool in_Qa(const Weight& diff) const;
    bool in_KQa(const Weight& diff) const;

    size_t qa_rank() const;

  private:
    RootSystemPtr sys_;
    std::vector<Rat> l_;
    std::vector<Root> u_, u_minus_, a_;
    std::vector<Block> blocks_;
    std::optional<RootBasis> adapted_;

    // span solver for Q_a membership: columns = Gamma_a, then relation.
    std::vector<Weight> gamma_;
    bool span_solve(const Weight& diff, bool integral) const;
};

// Verifies the commuting-set contract: pairwise sums are not roots of a, and
// the set is an integer-unimodular basis of Q_a.
bool verify_commuting_set(const Parabolic& p, const std::vector<Weight>& gamma);

}  // namespace sw
