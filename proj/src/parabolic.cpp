#include "parabolic.hpp"

#include <algorithm>
#include <map>

#include "error.hpp"

namespace sw {

Rat Parabolic::level(const Weight& ambient) const {
    Rat s(0);
    for (size_t i = 0; i < l_.size(); ++i) s += l_[i] * ambient[i];
    return s;
}

Parabolic Parabolic::build(const RootSystemPtr& sys, const std::vector<Rat>& l) {
    if (l.size() != sys->dim())
        fail(Code::invalid_parameters, "functional needs one value per coordinate");
    Parabolic p;
    p.sys_ = sys;
    p.l_ = l;

    for (const auto& r : sys->roots()) {
        Rat v = p.level(r.vec);
        if (!rat_is_integer(v))
            fail(Code::invalid_parameters,
                 "functional is not integer-valued on the root lattice");
        if (v > 0)
            p.u_.push_back(r);
        else if (v < 0)
            p.u_minus_.push_back(r);
        else
            p.a_.push_back(r);
    }

    // Zero level must be even and inside g_0'.
    for (const auto& r : p.a_) {
        if (r.odd)
            fail(Code::not_parabolic, "zero level contains the odd root " +
                                          sys->weight_str(r.vec));
        if (sys->kind() == AlgebraKind::W) {
            // g_0' = gl(n): roots eps_i - eps_j.
            int plus = 0, minus = 0, other = 0;
            for (size_t i = 0; i < r.vec.dim(); ++i) {
                if (r.vec[i] == 1)
                    ++plus;
                else if (r.vec[i] == -1)
                    ++minus;
                else if (r.vec[i] != 0)
                    ++other;
            }
            if (!(plus == 1 && minus == 1 && other == 0))
                fail(Code::not_parabolic,
                     "zero level leaves g_0' (W(n) even root " +
                         sys->weight_str(r.vec) + ")");
        }
    }

    // Group coordinates by functional value into blocks.
    size_t m = sys->eps_count(), d = sys->dim();
    auto group = [&](size_t lo, size_t hi, bool is_delta) {
        std::map<Rat, std::vector<int>, std::less<Rat>> groups;
        for (size_t i = lo; i < hi; ++i) groups[l[i]].push_back(static_cast<int>(i));
        // Descending level order.
        std::vector<std::pair<Rat, std::vector<int>>> out(groups.begin(), groups.end());
        std::sort(out.begin(), out.end(),
                  [](const auto& a, const auto& b) { return b.first < a.first; });
        (void)is_delta;
        return out;
    };

    bool osp = sys->kind() == AlgebraKind::OSP;
    auto eps_groups = group(0, m, false);
    auto delta_groups = group(m, d, true);

    if (osp) {
        // The catalog reductive parts are K + gl(q_1', ...) + sp(2q''): the
        // zero-level delta coordinates form the C block; a sum root
        // delta_k + delta_l across nonzero levels would create a D-type
        // factor, which is not in the catalog.
        for (const auto& r : p.a_) {
            bool sum_type = false;
            Rat tot(0);
            for (size_t i = m; i < d; ++i) tot += r.vec[i];
            if (tot != 0) sum_type = true;  // 2delta_k or delta_k + delta_l
            if (sum_type) {
                for (size_t i = m; i < d; ++i)
                    if (r.vec[i] != 0 && l[i] != 0)
                        fail(Code::catalog_mismatch,
                             "zero level generates a D-type factor (root " +
                                 sys->weight_str(r.vec) + ")");
            }
        }
    }

    for (const auto& [lev, coords] : eps_groups) {
        if (sys->kind() == AlgebraKind::OSP) continue;  // single eps coord, central
        if (coords.size() >= 2)
            p.blocks_.push_back(Block{BlockType::A, coords, false, lev});
    }
    for (const auto& [lev, coords] : delta_groups) {
        if (osp && lev == 0) {
            p.blocks_.push_back(Block{BlockType::C, coords, true, lev});
        } else if (coords.size() >= 2) {
            p.blocks_.push_back(Block{BlockType::A, coords, true, lev});
        }
    }

    // Adapted basis: coordinates reordered by descending level (stable).
    // Exists when the reordered chain stays inside Delta_p.
    std::vector<int> eo, dor;
    for (const auto& [lev, coords] : eps_groups)
        for (int c : coords) eo.push_back(c);
    for (const auto& [lev, coords] : delta_groups)
        for (int c : coords) dor.push_back(c);
    bool adapted_ok = true;
    switch (sys->kind()) {
        case AlgebraKind::GL:
        case AlgebraKind::SL:
        case AlgebraKind::PSL:
            if (!eo.empty() && !dor.empty())
                adapted_ok = !(l[eo.back()] < l[dor.front()]);
            break;
        case AlgebraKind::OSP:
            for (size_t j = m; j < d; ++j)
                if (l[j] < 0) adapted_ok = false;
            if (!dor.empty() && l[0] < l[dor.front()]) adapted_ok = false;
            break;
        case AlgebraKind::P:
        case AlgebraKind::SP:
        case AlgebraKind::W:
            if (l[eo.back()] < 0) adapted_ok = false;
            break;
    }
    if (adapted_ok) {
        RootBasis b = RootBasis::reordered(sys, eo, dor);
        // Confirm B inside Delta_p: no simple root with negative level.
        for (const auto& s : b.simple())
            if (p.level(s) < 0) adapted_ok = false;
        if (adapted_ok) p.adapted_ = std::move(b);
    }

    p.gamma_ = p.commuting_basis();
    return p;
}

LocalWeight Parabolic::block_projection(const Weight& w, size_t i) const {
    const Block& b = blocks_.at(i);
    Weight cw = sys_->canonical(w);
    LocalWeight loc;
    loc.reserve(b.coords.size());
    for (int c : b.coords) loc.push_back(cw[static_cast<size_t>(c)]);
    if (b.type == BlockType::A) {
        Rat mean(0);
        for (const auto& x : loc) mean += x;
        mean /= Rat(static_cast<long>(loc.size()));
        for (auto& x : loc) x -= mean;
    }
    return loc;
}

Weight Parabolic::embed_block(const LocalWeight& lw, size_t i) const {
    const Block& b = blocks_.at(i);
    if (lw.size() != b.coords.size())
        fail(Code::internal, "block weight size mismatch");
    Weight w = Weight::zero(sys_->dim());
    for (size_t k = 0; k < lw.size(); ++k)
        w[static_cast<size_t>(b.coords[k])] = lw[k];
    return sys_->canonical(w);
}

Weight Parabolic::z_projection(const Weight& w) const {
    Weight r = sys_->canonical(w);
    for (size_t i = 0; i < blocks_.size(); ++i)
        r -= embed_block(block_projection(w, i), i);
    return sys_->canonical(r);
}

const RootBasis& Parabolic::adapted_basis() const {
    if (!adapted_)
        fail(Code::invalid_parameters,
             "parabolic functional is not adapted to the distinguished basis "
             "shape of " +
                 sys_->name());
    return *adapted_;
}

std::vector<Weight> Parabolic::commuting_basis() const {
    std::vector<Weight> gamma;
    auto unit = [&](int idx) { return Weight::unit(sys_->dim(), idx); };
    for (const auto& b : blocks_) {
        if (b.type == BlockType::A) {
            for (size_t j = 1; j < b.coords.size(); ++j)
                gamma.push_back(unit(b.coords[0]) - unit(b.coords[j]));
        } else {
            gamma.push_back(unit(b.coords[0]) * Rat(2));
            for (size_t j = 1; j < b.coords.size(); ++j)
                gamma.push_back(unit(b.coords[0]) + unit(b.coords[j]));
        }
    }
    return gamma;
}

size_t Parabolic::qa_rank() const { return gamma_.size(); }

bool Parabolic::span_solve(const Weight& diff, bool integral) const {
    // Solve [gamma | relation] x = diff over the rationals; accept when
    // consistent and (if integral) the gamma part is integer.
    size_t d = sys_->dim();
    size_t k = gamma_.size();
    bool has_rel = sys_->has_quotient();
    size_t cols = k + (has_rel ? 1 : 0);
    std::vector<std::vector<Rat>> aug(d, std::vector<Rat>(cols + 1, Rat(0)));
    for (size_t c = 0; c < k; ++c)
        for (size_t r = 0; r < d; ++r) aug[r][c] = gamma_[c][r];
    if (has_rel)
        for (size_t r = 0; r < d; ++r) aug[r][k] = sys_->relation()[r];
    Weight cd = sys_->canonical(diff);
    for (size_t r = 0; r < d; ++r) aug[r][cols] = cd[r];

    // Gaussian elimination.
    size_t row = 0;
    std::vector<int> pivot_col;
    for (size_t c = 0; c < cols && row < d; ++c) {
        size_t pr = row;
        while (pr < d && aug[pr][c] == 0) ++pr;
        if (pr == d) continue;
        std::swap(aug[pr], aug[row]);
        Rat inv = Rat(1) / aug[row][c];
        for (size_t j = 0; j <= cols; ++j) aug[row][j] *= inv;
        for (size_t i = 0; i < d; ++i)
            if (i != row && aug[i][c] != 0) {
                Rat f = aug[i][c];
                for (size_t j = 0; j <= cols; ++j) aug[i][j] -= f * aug[row][j];
            }
        pivot_col.push_back(static_cast<int>(c));
        ++row;
    }
    for (size_t r = row; r < d; ++r)
        if (aug[r][cols] != 0) return false;
    if (integral) {
        for (size_t r = 0; r < pivot_col.size(); ++r) {
            if (pivot_col[r] < static_cast<int>(k) && !rat_is_integer(aug[r][cols]))
                return false;
        }
    }
    return true;
}

bool Parabolic::in_Qa(const Weight& diff) const { return span_solve(diff, true); }
bool Parabolic::in_KQa(const Weight& diff) const { return span_solve(diff, false); }

bool verify_commuting_set(const Parabolic& p, const std::vector<Weight>& gamma) {
    const auto& sys = p.sys();
    // Pairwise: alpha_i + alpha_j never a root of a.
    for (size_t i = 0; i < gamma.size(); ++i)
        for (size_t j = i + 1; j < gamma.size(); ++j) {
            Weight s = sys->canonical(gamma[i] + gamma[j]);
            for (const auto& r : p.a_roots())
                if (sys->canonical(r.vec) == s) return false;
        }
    // Rank and integrality: every a-root must be an integer combination.
    if (gamma.size() != p.qa_rank()) return false;
    size_t d = sys->dim();
    size_t k = gamma.size();
    for (const auto& r : p.a_roots()) {
        std::vector<std::vector<Rat>> aug(d, std::vector<Rat>(k + 1, Rat(0)));
        for (size_t c = 0; c < k; ++c)
            for (size_t row = 0; row < d; ++row) aug[row][c] = gamma[c][row];
        for (size_t row = 0; row < d; ++row) aug[row][k] = r.vec[row];
        size_t row = 0;
        std::vector<int> piv;
        for (size_t c = 0; c < k && row < d; ++c) {
            size_t pr = row;
            while (pr < d && aug[pr][c] == 0) ++pr;
            if (pr == d) continue;
            std::swap(aug[pr], aug[row]);
            Rat inv = Rat(1) / aug[row][c];
            for (size_t j = 0; j <= k; ++j) aug[row][j] *= inv;
            for (size_t i2 = 0; i2 < d; ++i2)
                if (i2 != row && aug[i2][c] != 0) {
                    Rat f = aug[i2][c];
                    for (size_t j = 0; j <= k; ++j) aug[i2][j] -= f * aug[row][j];
                }
            piv.push_back(static_cast<int>(c));
            ++row;
        }
        for (size_t r2 = row; r2 < d; ++r2)
            if (aug[r2][k] != 0) return false;
        for (size_t r2 = 0; r2 < piv.size(); ++r2)
            if (!rat_is_integer(aug[r2][k])) return false;
    }
    return true;
}

}  // namespace sw
