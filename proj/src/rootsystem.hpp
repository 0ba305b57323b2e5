#pragma once

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "weight.hpp"

namespace sw {

// The seven catalog families. SL requires m != n (n = 0 gives the plain
// Lie algebra sl(m)); GL(m|0) is gl(m). OSP(2|n) requires even n >= 2.
enum class AlgebraKind { GL, SL, PSL, OSP, P, SP, W };

const char* kind_name(AlgebraKind k);
std::optional<AlgebraKind> kind_from_name(const std::string& s);

// A root with its ambient representative vector, parity and multiplicity.
// The vector is the literal eps/delta expression, before any quotient.
struct Root {
    Weight vec;
    bool odd = false;
    int mult = 1;
    int odd_sign = 0;  // +1 in Delta_1^+, -1 in Delta_1^-, 0 otherwise
};

// Weyl group element acting on ambient coordinates: x_i -> sign[i] * x_perm[i].
struct WeylElement {
    std::vector<int> perm;
    std::vector<int> sign;
};

class SuperRootSystem;
using RootSystemPtr = std::shared_ptr<const SuperRootSystem>;

class SuperRootSystem : public std::enable_shared_from_this<SuperRootSystem> {
  public:
    // Validates size parameters; throws invalid_parameters.
    static RootSystemPtr make(AlgebraKind kind, int m, int n);

    AlgebraKind kind() const { return kind_; }
    int m() const { return m_; }
    int n() const { return n_; }
    size_t dim() const { return eps_ + delta_; }
    size_t eps_count() const { return eps_; }
    size_t delta_count() const { return delta_; }
    std::string name() const;

    const std::vector<Root>& roots() const { return roots_; }
    std::vector<Root> even_roots() const;
    std::vector<Root> odd_roots() const;

    // Total multiplicity of the weight alpha as a root; 0 if not a root.
    // Compares canonical images, so coincidences in quotient spaces (e.g.
    // psl(2|2)) accumulate.
    int root_multiplicity(const Weight& alpha) const;

    // Z-grading degree of a root: 0 / +-1 for type I, coordinate sum for W(n).
    long grading_degree(const Root& r) const;

    // dim g_0'' (nonzero only for W(n)).
    long dim_g0_nilpotent() const;
    // Total dimension: sum of root multiplicities plus Cartan dimension.
    long total_dim() const;

    bool has_quotient() const { return !relation_.is_zero(); }
    const Weight& relation() const { return relation_; }

    // Canonical representative modulo the quotient relation; validates the
    // psl constraint (total coordinate sum zero). Canonical reps satisfy
    // sum(eps coords) - sum(delta coords) = 0.
    Weight canonical(const Weight& w) const;

    // Standard bilinear form (eps_i,eps_j)=d_ij, (delta_i,delta_j)=-d_ij,
    // evaluated on canonical representatives.
    Rat form(const Weight& a, const Weight& b) const;

    // Full Weyl group of g_0' (coordinate permutations / sign changes).
    // Throws group_too_large beyond the cap.
    std::vector<WeylElement> weyl_group(size_t cap = 100000) const;
    size_t weyl_order() const;
    Weight apply(const WeylElement& w, const Weight& x) const;

    // Weight string I/O: comma-separated rationals, '|' between eps and
    // delta blocks (no '|' when the algebra has a single block).
    Weight parse_weight(const std::string& s) const;
    std::string weight_str(const Weight& w) const;

    Weight eps(int i) const;    // 1-based
    Weight delta(int j) const;  // 1-based

  private:
    SuperRootSystem() = default;
    void build_roots();

    AlgebraKind kind_;
    int m_ = 0, n_ = 0;
    size_t eps_ = 0, delta_ = 0;
    std::vector<Root> roots_;
    Weight relation_;  // zero weight when no quotient
    bool psl_constraint_ = false;
};

// ---------------------------------------------------------------------------
// RootBasis: ordered simple roots, induced positive systems, rho.

class RootBasis {
  public:
    // The distinguished basis of the family (documented per-family convention).
    static RootBasis standard(const RootSystemPtr& sys);

    // Basis adapted to a coordinate reordering: coordinate positions listed
    // in the order in which the simple-root chain should run. Used by the
    // parabolic machinery. eps_order/delta_order are 0-based ambient indices.
    static RootBasis reordered(const RootSystemPtr& sys,
                               const std::vector<int>& eps_order,
                               const std::vector<int>& delta_order);

    const RootSystemPtr& sys() const { return sys_; }
    const std::vector<Weight>& simple() const { return simple_; }
    const std::vector<Root>& positive_even() const { return pos_even_; }
    const std::vector<Root>& positive_odd() const { return pos_odd_; }
    const Weight& rho() const { return rho_; }

    // Expansion of an ambient vector in the simple roots (ambient
    // coordinates, exact). Empty optional if not in the span.
    std::optional<std::vector<Rat>> expand(const Weight& ambient) const;

    // True iff hi - lo is a non-negative integer combination of the basis,
    // compared in the quotient space (handles the psl relation).
    bool leq(const Weight& lo, const Weight& hi) const;

    // Height of a difference vector: sum of basis coefficients. Throws if
    // not in the span.
    Rat height(const Weight& diff_ambient) const;

    bool is_positive_root_vec(const Weight& ambient) const;

  private:
    void finish();  // computes positives and rho from simple_

    RootSystemPtr sys_;
    std::vector<Weight> simple_;  // ambient representatives
    std::vector<Root> pos_even_, pos_odd_;
    Weight rho_;
    // Precomputed expansion solver data (row-reduced simple-root matrix).
    std::vector<std::vector<Rat>> solve_mat_;
    std::vector<int> pivot_cols_;
    std::vector<Rat> relation_coeffs_;  // expansion of the quotient relation, if in span
    bool relation_in_span_ = false;
};

// ---------------------------------------------------------------------------
// Block-level helpers (the reductive pieces a_i are type A or C).

enum class BlockType { A, C };

// Local weights are plain coordinate vectors in the block's own basis with a
// positive-definite form; delta-coordinate blocks map to this convention
// sign-free (pairings with coroots agree).
using LocalWeight = std::vector<Rat>;

// Standard simple roots of the block, as local coordinate vectors:
// type A rank m: e_i - e_{i+1}; type C rank m: e_i - e_{i+1} and 2 e_m.
std::vector<LocalWeight> block_standard_basis(BlockType t, int rank);

// Positive roots of the block in local coordinates.
std::vector<LocalWeight> block_positive_roots(BlockType t, int rank);

// rho of the block (half sum of positive roots), local coordinates.
LocalWeight block_rho(BlockType t, int rank);

// (x, y) with the local positive-definite form.
Rat local_dot(const LocalWeight& x, const LocalWeight& y);

// (lam, alpha^vee) = 2 (lam, alpha) / (alpha, alpha).
Rat local_pairing(const LocalWeight& lam, const LocalWeight& alpha);

}  // namespace sw
