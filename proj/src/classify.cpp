#include "classify.hpp"

#include <algorithm>

#include "error.hpp"

namespace sw {

bool is_dominant_integral(const LocalWeight& lam, BlockType t) {
    size_t m = lam.size();
    for (size_t j = 0; j + 1 < m; ++j) {
        Rat d = lam[j] - lam[j + 1];
        if (d < 0 || !rat_is_integer(d)) return false;
    }
    if (t == BlockType::C) {
        if (lam[m - 1] < 0 || !rat_is_integer(lam[m - 1])) return false;
    }
    return true;
}

bool validate_normal_form(const LocalWeight& lam, BlockType t) {
    size_t m = lam.size();
    if (t == BlockType::A) {
        Rat sum(0);
        for (const auto& x : lam) sum += x;
        if (sum != 0)
            fail(Code::invalid_weight, "sl-block weight must be traceless");
        for (size_t j = 1; j <= m - 1 && m >= 2; ++j) {
            Rat d = lam[j - 1] - lam[j];
            bool dom = d >= 0 && rat_is_integer(d);
            bool want = (j >= 2);  // j = 2 .. m-1 in 1-based terms
            if (dom != want) return false;
        }
        return true;
    }
    for (size_t j = 0; j < m; ++j) {
        Rat twice = lam[j] * 2;
        if (!rat_is_integer(twice) || rat_is_integer(lam[j])) return false;
        if (j + 1 < m && lam[j] < lam[j + 1]) return false;
    }
    return lam[m - 1] >= Rat(-1, 2);
}

bool block_is_integral(const LocalWeight& lam) {
    for (size_t j = 0; j + 1 < lam.size(); ++j)
        if (!rat_is_integer(lam[j] - lam[j + 1])) return false;
    return true;
}

bool block_is_singular(const LocalWeight& lam) {
    Rat acc(0);
    for (size_t j = 0; j < lam.size(); ++j) {
        acc += lam[j];
        if (acc + Rat(static_cast<long>(j) + 1) == 0) return true;
    }
    return false;
}

static std::vector<std::vector<int>> block_weyl_perms(size_t m) {
    std::vector<int> idx(m);
    for (size_t i = 0; i < m; ++i) idx[i] = static_cast<int>(i);
    std::vector<std::vector<int>> out;
    do {
        out.push_back(idx);
    } while (std::next_permutation(idx.begin(), idx.end()));
    return out;
}

bool block_is_bounded(const LocalWeight& lam, BlockType t) {
    if (validate_normal_form(lam, t) || is_dominant_integral(lam, t)) return true;
    // Weyl dot-translates of normal forms.
    size_t m = lam.size();
    LocalWeight rho = block_rho(t, static_cast<int>(m));
    LocalWeight s(m);
    for (size_t i = 0; i < m; ++i) s[i] = lam[i] + rho[i];
    for (const auto& perm : block_weyl_perms(m)) {
        size_t nsign = (t == BlockType::C) ? (1u << m) : 1u;
        for (size_t bits = 0; bits < nsign; ++bits) {
            LocalWeight w(m);
            for (size_t i = 0; i < m; ++i) {
                w[i] = s[static_cast<size_t>(perm[i])];
                if (bits & (1u << i)) w[i] = -w[i];
            }
            LocalWeight cand(m);
            for (size_t i = 0; i < m; ++i) cand[i] = w[i] - rho[i];
            if (t == BlockType::A) {
                // Dot translates must stay traceless to be comparable.
                Rat sum(0);
                for (const auto& x : cand) sum += x;
                if (sum != 0) continue;
            }
            if (validate_normal_form(cand, t)) return true;
        }
    }
    return false;
}

std::optional<LocalWeight> mu_bracket(const LocalWeight& mu, int l) {
    int m = static_cast<int>(mu.size());
    if (l < 1) fail(Code::invalid_parameters, "mu_bracket needs l >= 1");
    if (!is_dominant_integral(mu, BlockType::A))
        fail(Code::not_dominant, "mu_bracket needs dominant integral mu");
    if (l >= m) return std::nullopt;
    LocalWeight rho = block_rho(BlockType::A, m);
    LocalWeight t(mu.size());
    for (int i = 0; i < m; ++i) t[static_cast<size_t>(i)] = mu[i] + rho[i];
    LocalWeight s(mu.size());
    // (t_{l+1}, t_1, ..., t_l, t_{l+2}, ..., t_m), 1-based.
    s[0] = t[static_cast<size_t>(l)];
    for (int i = 1; i <= l; ++i) s[static_cast<size_t>(i)] = t[static_cast<size_t>(i - 1)];
    for (int i = l + 1; i < m; ++i) s[static_cast<size_t>(i)] = t[static_cast<size_t>(i)];
    LocalWeight out(mu.size());
    for (int i = 0; i < m; ++i) out[static_cast<size_t>(i)] = s[static_cast<size_t>(i)] - rho[i];
    return out;
}

std::optional<std::pair<LocalWeight, int>> regular_integral_decompose(
    const LocalWeight& lam) {
    if (!block_is_integral(lam)) return std::nullopt;
    int m = static_cast<int>(lam.size());
    if (block_is_singular(lam))
        fail(Code::not_regular_integral,
             "singular integral weight is not of the form mu[l]");
    LocalWeight rho = block_rho(BlockType::A, m);
    LocalWeight s(lam.size());
    for (int i = 0; i < m; ++i) s[static_cast<size_t>(i)] = lam[i] + rho[i];
    // Pattern: s_2 > ... > s_{l+1} > s_1 > s_{l+2} > ... > s_m.
    int l = 0;
    for (int i = 1; i < m; ++i)
        if (s[static_cast<size_t>(i)] > s[0]) ++l;
    bool ok = l >= 1 && l <= m - 1;
    for (int i = 1; ok && i + 1 < m; ++i)
        if (!(s[static_cast<size_t>(i)] > s[static_cast<size_t>(i + 1)])) ok = false;
    for (int i = 1; ok && i < m; ++i)
        if (s[static_cast<size_t>(i)] == s[0]) ok = false;
    if (ok && l + 1 < m && !(s[0] > s[static_cast<size_t>(l + 1)])) ok = false;
    if (!ok)
        fail(Code::not_regular_integral,
             "integral weight is not of the form mu[l]");
    LocalWeight t(lam.size());
    for (int i = 0; i < l; ++i) t[static_cast<size_t>(i)] = s[static_cast<size_t>(i + 1)];
    t[static_cast<size_t>(l)] = s[0];
    for (int i = l + 1; i < m; ++i) t[static_cast<size_t>(i)] = s[static_cast<size_t>(i)];
    LocalWeight mu(lam.size());
    for (int i = 0; i < m; ++i) mu[static_cast<size_t>(i)] = t[static_cast<size_t>(i)] - rho[i];
    check_invariant(is_dominant_integral(mu, BlockType::A),
                    "mu[l] decomposition produced a non-dominant mu");
    auto back = mu_bracket(mu, l);
    check_invariant(back.has_value() && *back == lam,
                    "mu_bracket round-trip failed");
    return std::make_pair(mu, l);
}

bool is_partially_finite(const Weight& lam, const Parabolic& p) {
    for (size_t i = 0; i < p.blocks().size(); ++i)
        if (is_dominant_integral(p.block_projection(lam, i), p.blocks()[i].type))
            return true;
    return false;
}

bool is_gamma_injective(const Weight& lam, const Parabolic& p) {
    for (size_t i = 0; i < p.blocks().size(); ++i)
        if (!block_is_bounded(p.block_projection(lam, i), p.blocks()[i].type))
            fail(Code::not_bounded,
                 "L(lambda) is not bounded on block " + std::to_string(i) +
                     "; the injectivity criterion only applies to bounded modules");
    return !is_partially_finite(lam, p);
}

TypicalityResult is_typical(const Weight& mu, const RootSystemPtr& sys,
                            const RootBasis& basis) {
    TypicalityResult res;
    switch (sys->kind()) {
        case AlgebraKind::GL:
        case AlgebraKind::SL:
        case AlgebraKind::PSL:
        case AlgebraKind::OSP: {
            Weight shifted = sys->canonical(mu) + basis.rho();
            for (const auto& r : sys->odd_roots()) {
                if (sys->form(shifted, r.vec) == 0) {
                    res.typical = false;
                    res.witness_roots.push_back(r.vec);
                }
            }
            break;
        }
        case AlgebraKind::P:
        case AlgebraKind::SP: {
            // Atypical iff (mu + rho_{sl(m)}, eps_i - eps_j) = 1 for some
            // ordered pair i != j.
            int m = static_cast<int>(sys->eps_count());
            Weight rho_sl = Weight::zero(sys->dim());
            for (int i = 1; i <= m; ++i)
                rho_sl[static_cast<size_t>(i - 1)] = Rat(m + 1 - 2 * i, 2);
            Weight shifted = sys->canonical(mu) + rho_sl;
            for (int i = 1; i <= m; ++i)
                for (int j = 1; j <= m; ++j) {
                    if (i == j) continue;
                    if (sys->form(shifted, sys->eps(i) - sys->eps(j)) == 1) {
                        res.typical = false;
                        res.witness_pairs.emplace_back(i, j);
                    }
                }
            break;
        }
        case AlgebraKind::W: {
            // Atypical iff mu = a eps_i + eps_{i+1} + ... + eps_n.
            int n = static_cast<int>(sys->eps_count());
            const Weight cmu = sys->canonical(mu);
            for (int i = 1; i <= n; ++i) {
                bool match = true;
                for (int j = 1; j < i; ++j)
                    if (cmu[static_cast<size_t>(j - 1)] != 0) match = false;
                for (int j = i + 1; j <= n; ++j)
                    if (cmu[static_cast<size_t>(j - 1)] != 1) match = false;
                if (match) {
                    res.typical = false;
                    res.witness_indices.push_back(i);
                }
            }
            break;
        }
    }
    return res;
}

bool is_singular(const Weight& mu, const RootSystemPtr& sys,
                 const RootBasis& basis) {
    Weight s = sys->canonical(sys->canonical(mu) + basis.rho());
    size_t m = sys->eps_count(), d = sys->dim();
    auto equal_pair = [&](size_t lo, size_t hi) {
        for (size_t i = lo; i < hi; ++i)
            for (size_t j = i + 1; j < hi; ++j)
                if (s[i] == s[j]) return true;
        return false;
    };
    switch (sys->kind()) {
        case AlgebraKind::GL:
        case AlgebraKind::SL:
        case AlgebraKind::PSL:
            return equal_pair(0, m) || equal_pair(m, d);
        case AlgebraKind::OSP: {
            for (size_t i = m; i < d; ++i) {
                if (s[i] == 0) return true;
                for (size_t j = i + 1; j < d; ++j)
                    if (s[i] == s[j] || s[i] == -s[j]) return true;
            }
            return false;
        }
        case AlgebraKind::P:
        case AlgebraKind::SP:
        case AlgebraKind::W: return equal_pair(0, m);
    }
    return false;
}

bool is_singular_orbit(const Weight& mu, const RootSystemPtr& sys,
                       const RootBasis& basis, size_t cap) {
    Weight s = sys->canonical(sys->canonical(mu) + basis.rho());
    for (const auto& w : sys->weyl_group(cap)) {
        bool identity = true;
        for (size_t i = 0; i < w.perm.size(); ++i)
            if (w.perm[i] != static_cast<int>(i) || w.sign[i] != 1) identity = false;
        if (identity) continue;
        if (sys->apply(w, s) == s) return true;
    }
    return false;
}

Weight central_character(const Weight& mu, const RootSystemPtr& sys,
                         const RootBasis& basis, size_t cap) {
    Weight s = sys->canonical(sys->canonical(mu) + basis.rho());
    std::optional<Weight> best;
    for (const auto& w : sys->weyl_group(cap)) {
        Weight img = sys->apply(w, s);
        if (!best || img < *best) best = img;
    }
    return sys->canonical(*best - basis.rho());
}

Weight dot_action(const RootSystemPtr& sys, const RootBasis& basis,
                  const WeylElement& w, const Weight& mu) {
    Weight s = sys->canonical(mu) + basis.rho();
    return sys->canonical(sys->apply(w, s) - basis.rho());
}

}  // namespace sw
