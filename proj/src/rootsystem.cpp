#include "rootsystem.hpp"

#include <algorithm>
#include <map>

#include "error.hpp"

namespace sw {

const char* kind_name(AlgebraKind k) {
    switch (k) {
        case AlgebraKind::GL: return "gl";
        case AlgebraKind::SL: return "sl";
        case AlgebraKind::PSL: return "psl";
        case AlgebraKind::OSP: return "osp";
        case AlgebraKind::P: return "p";
        case AlgebraKind::SP: return "sp";
        case AlgebraKind::W: return "W";
    }
    return "?";
}

std::optional<AlgebraKind> kind_from_name(const std::string& s) {
    if (s == "gl") return AlgebraKind::GL;
    if (s == "sl") return AlgebraKind::SL;
    if (s == "psl") return AlgebraKind::PSL;
    if (s == "osp") return AlgebraKind::OSP;
    if (s == "p") return AlgebraKind::P;
    if (s == "sp") return AlgebraKind::SP;
    if (s == "W" || s == "w") return AlgebraKind::W;
    return std::nullopt;
}

std::string SuperRootSystem::name() const {
    switch (kind_) {
        case AlgebraKind::GL:
            return "gl(" + std::to_string(m_) + "|" + std::to_string(n_) + ")";
        case AlgebraKind::SL:
            return "sl(" + std::to_string(m_) + "|" + std::to_string(n_) + ")";
        case AlgebraKind::PSL:
            return "psl(" + std::to_string(m_) + "|" + std::to_string(m_) + ")";
        case AlgebraKind::OSP:
            return "osp(2|" + std::to_string(n_) + ")";
        case AlgebraKind::P: return "p(" + std::to_string(m_) + ")";
        case AlgebraKind::SP: return "sp(" + std::to_string(m_) + ")";
        case AlgebraKind::W: return "W(" + std::to_string(n_) + ")";
    }
    return "?";
}

RootSystemPtr SuperRootSystem::make(AlgebraKind kind, int m, int n) {
    auto sys = std::shared_ptr<SuperRootSystem>(new SuperRootSystem());
    sys->kind_ = kind;
    switch (kind) {
        case AlgebraKind::GL:
            if (m < 0 || n < 0 || m + n < 1)
                fail(Code::invalid_parameters, "gl(m|n) needs m,n >= 0, m+n >= 1");
            sys->m_ = m;
            sys->n_ = n;
            sys->eps_ = m;
            sys->delta_ = n;
            break;
        case AlgebraKind::SL:
            if (m < 0 || n < 0 || m + n < 2)
                fail(Code::invalid_parameters, "sl(m|n) needs m+n >= 2");
            if (m == n)
                fail(Code::invalid_parameters,
                     "sl(m|n) requires m != n (use psl for m == n)");
            sys->m_ = m;
            sys->n_ = n;
            sys->eps_ = m;
            sys->delta_ = n;
            break;
        case AlgebraKind::PSL:
            if (n != 0 && n != m)
                fail(Code::invalid_parameters, "psl(m|m) takes a single size m");
            if (m < 2) fail(Code::invalid_parameters, "psl(m|m) needs m >= 2");
            sys->m_ = m;
            sys->n_ = m;
            sys->eps_ = m;
            sys->delta_ = m;
            sys->psl_constraint_ = true;
            break;
        case AlgebraKind::OSP:
            if (m != 0 && m != 2)
                fail(Code::invalid_parameters, "osp(2|n): first size must be 2");
            if (n < 2 || n % 2 != 0)
                fail(Code::invalid_parameters, "osp(2|n) requires even n >= 2");
            sys->m_ = 2;
            sys->n_ = n;
            sys->eps_ = 1;
            sys->delta_ = n / 2;
            break;
        case AlgebraKind::P:
            if (m < 2) fail(Code::invalid_parameters, "p(m) needs m >= 2");
            sys->m_ = m;
            sys->n_ = 0;
            sys->eps_ = m;
            sys->delta_ = 0;
            break;
        case AlgebraKind::SP:
            // For m <= 2 the odd roots eps_i + eps_j degenerate to zero in
            // the quotient space; the catalog starts at m = 3.
            if (m < 3) fail(Code::invalid_parameters, "sp(m) needs m >= 3");
            sys->m_ = m;
            sys->n_ = 0;
            sys->eps_ = m;
            sys->delta_ = 0;
            break;
        case AlgebraKind::W: {
            int rank = n > 0 ? n : m;
            if (rank < 1) fail(Code::invalid_parameters, "W(n) needs n >= 1");
            sys->m_ = 0;
            sys->n_ = rank;
            sys->eps_ = rank;
            sys->delta_ = 0;
            break;
        }
    }
    // Quotient relation vectors.
    size_t d = sys->dim();
    sys->relation_ = Weight::zero(d);
    if (kind == AlgebraKind::SL || kind == AlgebraKind::PSL) {
        for (size_t i = 0; i < sys->eps_; ++i) sys->relation_[i] = Rat(1);
        for (size_t j = 0; j < sys->delta_; ++j)
            sys->relation_[sys->eps_ + j] = Rat(-1);
    } else if (kind == AlgebraKind::SP) {
        for (size_t i = 0; i < sys->eps_; ++i) sys->relation_[i] = Rat(1);
    }
    sys->build_roots();
    return sys;
}

Weight SuperRootSystem::eps(int i) const {
    if (i < 1 || static_cast<size_t>(i) > eps_)
        fail(Code::internal, "eps index out of range");
    return Weight::unit(dim(), i - 1);
}

Weight SuperRootSystem::delta(int j) const {
    if (j < 1 || static_cast<size_t>(j) > delta_)
        fail(Code::internal, "delta index out of range");
    return Weight::unit(dim(), eps_ + j - 1);
}

void SuperRootSystem::build_roots() {
    roots_.clear();
    auto add = [&](const Weight& v, bool odd, int mult, int sign) {
        roots_.push_back(Root{v, odd, mult, sign});
    };
    switch (kind_) {
        case AlgebraKind::GL:
        case AlgebraKind::SL:
        case AlgebraKind::PSL: {
            int m = static_cast<int>(eps_), n = static_cast<int>(delta_);
            for (int i = 1; i <= m; ++i)
                for (int j = 1; j <= m; ++j)
                    if (i != j) add(eps(i) - eps(j), false, 1, 0);
            for (int k = 1; k <= n; ++k)
                for (int l = 1; l <= n; ++l)
                    if (k != l) add(delta(k) - delta(l), false, 1, 0);
            for (int i = 1; i <= m; ++i)
                for (int l = 1; l <= n; ++l) {
                    add(eps(i) - delta(l), true, 1, +1);
                    add(delta(l) - eps(i), true, 1, -1);
                }
            break;
        }
        case AlgebraKind::OSP: {
            int q = static_cast<int>(delta_);
            for (int k = 1; k <= q; ++k) {
                add(delta(k) * Rat(2), false, 1, 0);
                add(delta(k) * Rat(-2), false, 1, 0);
            }
            for (int k = 1; k <= q; ++k)
                for (int l = 1; l <= q; ++l)
                    if (k != l) add(delta(k) - delta(l), false, 1, 0);
            for (int k = 1; k <= q; ++k)
                for (int l = k + 1; l <= q; ++l) {
                    add(delta(k) + delta(l), false, 1, 0);
                    add(-(delta(k) + delta(l)), false, 1, 0);
                }
            for (int k = 1; k <= q; ++k) {
                add(eps(1) + delta(k), true, 1, +1);
                add(eps(1) - delta(k), true, 1, +1);
                add(-(eps(1) + delta(k)), true, 1, -1);
                add(-(eps(1) - delta(k)), true, 1, -1);
            }
            break;
        }
        case AlgebraKind::P:
        case AlgebraKind::SP: {
            int m = static_cast<int>(eps_);
            for (int i = 1; i <= m; ++i)
                for (int j = 1; j <= m; ++j)
                    if (i != j) add(eps(i) - eps(j), false, 1, 0);
            for (int i = 1; i <= m; ++i)
                for (int j = i + 1; j <= m; ++j) {
                    add(eps(i) + eps(j), true, 1, +1);
                    add(-(eps(i) + eps(j)), true, 1, -1);
                }
            for (int i = 1; i <= m; ++i) add(eps(i) * Rat(2), true, 1, +1);
            break;
        }
        case AlgebraKind::W: {
            // Roots and multiplicities from the monomial superderivation
            // basis xi_{i_1}..xi_{i_k} d_j of W(n). The (S, j) pair has
            // weight sum_{i in S} eps_i - eps_j and parity |S|+1 mod 2.
            int nn = static_cast<int>(eps_);
            std::map<Weight, std::pair<int, bool>> acc;  // weight -> (mult, odd)
            for (unsigned S = 0; S < (1u << nn); ++S) {
                for (int j = 1; j <= nn; ++j) {
                    Weight w = Weight::zero(dim());
                    int popcount = 0;
                    for (int i = 1; i <= nn; ++i)
                        if (S & (1u << (i - 1))) {
                            w += eps(i);
                            ++popcount;
                        }
                    w -= eps(j);
                    if (w.is_zero()) continue;  // Cartan direction xi_j d_j
                    bool odd = ((popcount + 1) % 2) != 0;
                    auto it = acc.find(w);
                    if (it == acc.end()) {
                        acc[w] = {1, odd};
                    } else {
                        check_invariant(it->second.second == odd,
                                        "W(n) root parity must be weight-determined");
                        it->second.first += 1;
                    }
                }
            }
            for (const auto& [w, mo] : acc) add(w, mo.second, mo.first, 0);
            break;
        }
    }
}

std::vector<Root> SuperRootSystem::even_roots() const {
    std::vector<Root> r;
    for (const auto& x : roots_)
        if (!x.odd) r.push_back(x);
    return r;
}

std::vector<Root> SuperRootSystem::odd_roots() const {
    std::vector<Root> r;
    for (const auto& x : roots_)
        if (x.odd) r.push_back(x);
    return r;
}

int SuperRootSystem::root_multiplicity(const Weight& alpha) const {
    Weight a = canonical(alpha);
    int mult = 0;
    for (const auto& r : roots_)
        if (canonical(r.vec) == a) mult += r.mult;
    return mult;
}

long SuperRootSystem::grading_degree(const Root& r) const {
    if (kind_ == AlgebraKind::W) {
        Rat s = r.vec.coord_sum();
        return rat_to_long(s);
    }
    if (!r.odd) return 0;
    return r.odd_sign;
}

long SuperRootSystem::dim_g0_nilpotent() const {
    if (kind_ != AlgebraKind::W) return 0;
    // Even root spaces outside gl(n) = W^0.
    long d = 0;
    for (const auto& r : roots_) {
        if (r.odd) continue;
        // gl(n) roots are eps_i - eps_j.
        int nonzero = 0;
        bool is_gl = true;
        Rat sum(0);
        for (size_t i = 0; i < r.vec.dim(); ++i) {
            if (r.vec[i] != 0) {
                ++nonzero;
                if (r.vec[i] != 1 && r.vec[i] != -1) is_gl = false;
            }
            sum += r.vec[i];
        }
        if (!(is_gl && nonzero == 2 && sum == 0)) d += r.mult;
    }
    return d;
}

long SuperRootSystem::total_dim() const {
    long d = static_cast<long>(dim());
    if (kind_ == AlgebraKind::SL || kind_ == AlgebraKind::SP) d -= 1;
    if (kind_ == AlgebraKind::PSL) d -= 2;
    for (const auto& r : roots_) d += r.mult;
    return d;
}

Weight SuperRootSystem::canonical(const Weight& w) const {
    if (w.dim() != dim()) fail(Code::invalid_weight, "wrong coordinate count");
    if (psl_constraint_) {
        if (w.coord_sum() != 0)
            fail(Code::invalid_weight,
                 "psl weight must have total coordinate sum zero");
    }
    if (relation_.is_zero()) return w;
    // Scale so that sum(eps) - sum(delta) of the representative is zero.
    Rat num(0), den(0);
    for (size_t i = 0; i < eps_; ++i) {
        num += w[i];
        den += relation_[i];
    }
    for (size_t j = eps_; j < dim(); ++j) {
        num -= w[j];
        den -= relation_[j];
    }
    Rat c = num / den;
    return w - relation_ * c;
}

Rat SuperRootSystem::form(const Weight& a, const Weight& b) const {
    Weight x = canonical(a), y = canonical(b);
    Rat s(0);
    for (size_t i = 0; i < eps_; ++i) s += x[i] * y[i];
    for (size_t j = eps_; j < dim(); ++j) s -= x[j] * y[j];
    return s;
}

size_t SuperRootSystem::weyl_order() const {
    auto fact = [](size_t k) {
        size_t f = 1;
        for (size_t i = 2; i <= k; ++i) f *= i;
        return f;
    };
    switch (kind_) {
        case AlgebraKind::GL:
        case AlgebraKind::SL:
        case AlgebraKind::PSL: return fact(eps_) * fact(delta_);
        case AlgebraKind::OSP: return fact(delta_) << delta_;
        case AlgebraKind::P:
        case AlgebraKind::SP:
        case AlgebraKind::W: return fact(eps_);
    }
    return 1;
}

std::vector<WeylElement> SuperRootSystem::weyl_group(size_t cap) const {
    size_t order = weyl_order();
    if (order > cap)
        fail(Code::group_too_large,
             "Weyl group order " + std::to_string(order) + " exceeds cap " +
                 std::to_string(cap));
    size_t d = dim();
    std::vector<WeylElement> out;
    out.reserve(order);

    std::vector<int> id(d), ones(d, 1);
    for (size_t i = 0; i < d; ++i) id[i] = static_cast<int>(i);

    auto push_perms = [&](size_t lo, size_t hi, bool signs) {
        // Permutations (and optional sign flips) of coordinates [lo, hi),
        // combined with whatever is already in `out`.
        std::vector<size_t> idx;
        for (size_t i = lo; i < hi; ++i) idx.push_back(i);
        std::vector<WeylElement> base = std::move(out);
        out.clear();
        std::vector<size_t> perm = idx;
        do {
            size_t nsign = signs ? (1u << idx.size()) : 1u;
            for (size_t sbits = 0; sbits < nsign; ++sbits) {
                for (const auto& b : base) {
                    WeylElement w = b;
                    for (size_t k = 0; k < idx.size(); ++k) {
                        w.perm[idx[k]] = static_cast<int>(perm[k]);
                        if (signs && (sbits & (1u << k))) w.sign[idx[k]] = -1;
                    }
                    out.push_back(std::move(w));
                }
            }
        } while (std::next_permutation(perm.begin(), perm.end()));
        return;
    };

    out.push_back(WeylElement{id, ones});
    switch (kind_) {
        case AlgebraKind::GL:
        case AlgebraKind::SL:
        case AlgebraKind::PSL:
            if (eps_ > 1) push_perms(0, eps_, false);
            if (delta_ > 1) push_perms(eps_, dim(), false);
            break;
        case AlgebraKind::OSP: push_perms(eps_, dim(), true); break;
        case AlgebraKind::P:
        case AlgebraKind::SP:
        case AlgebraKind::W:
            if (eps_ > 1) push_perms(0, eps_, false);
            break;
    }
    check_invariant(out.size() == order, "Weyl group enumeration size");
    return out;
}

Weight SuperRootSystem::apply(const WeylElement& w, const Weight& x) const {
    Weight cx = canonical(x);
    Weight y = Weight::zero(dim());
    for (size_t i = 0; i < dim(); ++i)
        y[i] = Rat(w.sign[i]) * cx[static_cast<size_t>(w.perm[i])];
    return canonical(y);
}

Weight SuperRootSystem::parse_weight(const std::string& s) const {
    std::vector<std::string> blocks;
    std::string cur;
    for (char c : s) {
        if (c == '|') {
            blocks.push_back(cur);
            cur.clear();
        } else {
            cur += c;
        }
    }
    blocks.push_back(cur);
    auto split = [](const std::string& b) {
        std::vector<std::string> parts;
        std::string t;
        for (char c : b) {
            if (c == ',') {
                parts.push_back(t);
                t.clear();
            } else {
                t += c;
            }
        }
        parts.push_back(t);
        return parts;
    };
    std::vector<Rat> coords;
    if (blocks.size() == 1 && (eps_ == 0 || delta_ == 0)) {
        for (const auto& p : split(blocks[0])) coords.push_back(parse_rat(p));
    } else if (blocks.size() == 2) {
        auto e = split(blocks[0]), d = split(blocks[1]);
        if (e.size() != eps_ || d.size() != delta_)
            fail(Code::invalid_weight,
                 "expected " + std::to_string(eps_) + "|" + std::to_string(delta_) +
                     " coordinates for " + name());
        for (const auto& p : e) coords.push_back(parse_rat(p));
        for (const auto& p : d) coords.push_back(parse_rat(p));
    } else {
        fail(Code::invalid_weight, "bad weight string for " + name());
    }
    if (coords.size() != dim())
        fail(Code::invalid_weight,
             "expected " + std::to_string(dim()) + " coordinates for " + name());
    return canonical(Weight(std::move(coords)));
}

std::string SuperRootSystem::weight_str(const Weight& w) const {
    Weight c = canonical(w);
    std::string out;
    for (size_t i = 0; i < eps_; ++i) {
        if (i) out += ',';
        out += rat_str(c[i]);
    }
    if (eps_ > 0 && delta_ > 0) out += '|';
    for (size_t j = 0; j < delta_; ++j) {
        if (j) out += ',';
        out += rat_str(c[eps_ + j]);
    }
    return out;
}

// ---------------------------------------------------------------------------
// RootBasis

static std::vector<std::vector<Rat>> rref(std::vector<std::vector<Rat>> mat,
                                          std::vector<int>& pivots,
                                          size_t pivot_limit) {
    size_t rows = mat.size();
    size_t cols = rows ? mat[0].size() : 0;
    pivots.clear();
    size_t r = 0;
    for (size_t c = 0; c < pivot_limit && c < cols && r < rows; ++c) {
        size_t p = r;
        while (p < rows && mat[p][c] == 0) ++p;
        if (p == rows) continue;
        std::swap(mat[p], mat[r]);
        Rat inv = Rat(1) / mat[r][c];
        for (size_t j = 0; j < cols; ++j) mat[r][j] *= inv;
        for (size_t i = 0; i < rows; ++i) {
            if (i != r && mat[i][c] != 0) {
                Rat f = mat[i][c];
                for (size_t j = 0; j < cols; ++j) mat[i][j] -= f * mat[r][j];
            }
        }
        pivots.push_back(static_cast<int>(c));
        ++r;
    }
    return mat;
}

RootBasis RootBasis::standard(const RootSystemPtr& sys) {
    std::vector<int> eo, dono;
    for (size_t i = 0; i < sys->eps_count(); ++i) eo.push_back(static_cast<int>(i));
    for (size_t j = 0; j < sys->delta_count(); ++j)
        dono.push_back(static_cast<int>(sys->eps_count() + j));
    return reordered(sys, eo, dono);
}

RootBasis RootBasis::reordered(const RootSystemPtr& sys,
                               const std::vector<int>& eps_order,
                               const std::vector<int>& delta_order) {
    RootBasis b;
    b.sys_ = sys;
    auto unit = [&](int idx) { return Weight::unit(sys->dim(), idx); };
    auto chain = [&](const std::vector<int>& ord) {
        for (size_t k = 0; k + 1 < ord.size(); ++k)
            b.simple_.push_back(unit(ord[k]) - unit(ord[k + 1]));
    };
    switch (sys->kind()) {
        case AlgebraKind::GL:
        case AlgebraKind::SL:
        case AlgebraKind::PSL:
            chain(eps_order);
            if (!eps_order.empty() && !delta_order.empty())
                b.simple_.push_back(unit(eps_order.back()) - unit(delta_order.front()));
            chain(delta_order);
            break;
        case AlgebraKind::OSP:
            b.simple_.push_back(unit(0) - unit(delta_order.front()));
            chain(delta_order);
            b.simple_.push_back(unit(delta_order.back()) * Rat(2));
            break;
        case AlgebraKind::P:
        case AlgebraKind::SP:
            chain(eps_order);
            b.simple_.push_back(unit(eps_order.back()) * Rat(2));
            break;
        case AlgebraKind::W:
            chain(eps_order);
            b.simple_.push_back(unit(eps_order.back()));
            break;
    }
    b.finish();
    return b;
}

void RootBasis::finish() {
    size_t d = sys_->dim();
    size_t k = simple_.size();
    // Row-reduce the (d x k) matrix of simple roots once; reuse for expand().
    std::vector<std::vector<Rat>> aug(d, std::vector<Rat>(k + d, Rat(0)));
    for (size_t c = 0; c < k; ++c)
        for (size_t r = 0; r < d; ++r) aug[r][c] = simple_[c][r];
    for (size_t r = 0; r < d; ++r) aug[r][k + r] = Rat(1);
    solve_mat_ = rref(std::move(aug), pivot_cols_, k);

    // Expansion of the quotient relation vector, when it lies in the span
    // (psl); needed for order comparison in the quotient.
    relation_in_span_ = false;
    if (sys_->has_quotient()) {
        auto rc = expand(sys_->relation());
        if (rc) {
            relation_coeffs_ = *rc;
            relation_in_span_ = true;
        }
    }

    pos_even_.clear();
    pos_odd_.clear();
    Weight acc = Weight::zero(d);
    for (const auto& r : sys_->roots()) {
        auto c = expand(r.vec);
        check_invariant(c.has_value(), "root outside simple-root span");
        bool nonneg = true, nonpos = true;
        for (const auto& x : *c) {
            if (x < 0) nonneg = false;
            if (x > 0) nonpos = false;
            check_invariant(rat_is_integer(x), "non-integral root expansion");
        }
        check_invariant(nonneg != nonpos, "root neither positive nor negative");
        if (nonneg) {
            (r.odd ? pos_odd_ : pos_even_).push_back(r);
            Rat mult(r.mult);
            acc += r.vec * (r.odd ? -mult : mult);
        }
    }
    rho_ = sys_->canonical(acc * Rat(1, 2));
}

std::optional<std::vector<Rat>> RootBasis::expand(const Weight& ambient) const {
    size_t d = sys_->dim();
    size_t k = simple_.size();
    // Apply the stored row-reduction to the new rhs, then read off solution.
    std::vector<Rat> rhs(d, Rat(0));
    for (size_t r = 0; r < d; ++r) {
        Rat v(0);
        for (size_t j = 0; j < d; ++j) v += solve_mat_[r][k + j] * ambient[j];
        rhs[r] = v;
    }
    std::vector<Rat> coeff(k, Rat(0));
    for (size_t r = 0; r < pivot_cols_.size(); ++r)
        coeff[static_cast<size_t>(pivot_cols_[r])] = rhs[r];
    // Consistency: rows past the pivot count must have zero rhs.
    for (size_t r = pivot_cols_.size(); r < d; ++r)
        if (rhs[r] != 0) return std::nullopt;
    // Verify (guards against free columns).
    Weight check = Weight::zero(d);
    for (size_t c = 0; c < k; ++c) check += simple_[c] * coeff[c];
    if (!(check == ambient)) return std::nullopt;
    return coeff;
}

bool RootBasis::is_positive_root_vec(const Weight& ambient) const {
    auto c = expand(ambient);
    if (!c) return false;
    bool nonneg = true, nonzero = false;
    for (const auto& x : *c) {
        if (x < 0) nonneg = false;
        if (x != 0) nonzero = true;
    }
    return nonneg && nonzero;
}

static bool coeffs_nonneg_integral(const std::vector<Rat>& c) {
    for (const auto& x : c)
        if (x < 0 || !rat_is_integer(x)) return false;
    return true;
}

bool RootBasis::leq(const Weight& lo, const Weight& hi) const {
    Weight diff = sys_->canonical(hi) - sys_->canonical(lo);
    if (!sys_->has_quotient()) {
        auto c = expand(diff);
        return c && coeffs_nonneg_integral(*c);
    }
    if (!relation_in_span_) {
        // Solve diff + t*relation in span(B); t is determined because the
        // relation is independent of the span (sl, sp).
        // Try: expand(diff) directly in the extended system.
        size_t k = simple_.size();
        size_t d = sys_->dim();
        std::vector<std::vector<Rat>> aug(d, std::vector<Rat>(k + 2, Rat(0)));
        for (size_t c = 0; c < k; ++c)
            for (size_t r = 0; r < d; ++r) aug[r][c] = simple_[c][r];
        for (size_t r = 0; r < d; ++r) {
            aug[r][k] = sys_->relation()[r];
            aug[r][k + 1] = diff[r];
        }
        std::vector<int> piv;
        auto R = rref(std::move(aug), piv, k + 1);
        // Solve: [B | v] * (c, t) = diff. Unique when consistent.
        for (size_t r = piv.size(); r < d; ++r)
            if (R[r][k + 1] != 0) return false;  // inconsistent
        std::vector<Rat> sol(k + 1, Rat(0));
        for (size_t r = 0; r < piv.size(); ++r)
            sol[static_cast<size_t>(piv[r])] = R[r][k + 1];
        std::vector<Rat> c(sol.begin(), sol.begin() + k);
        return coeffs_nonneg_integral(c);
    }
    // psl: particular solution plus t * relation_coeffs.
    auto c0 = expand(diff);
    if (!c0) return false;
    const auto& rc = relation_coeffs_;
    // Find i0 with rc[i0] != 0 and scan integer candidates for c[i0].
    size_t i0 = rc.size();
    for (size_t i = 0; i < rc.size(); ++i)
        if (rc[i] != 0) {
            i0 = i;
            break;
        }
    if (i0 == rc.size()) return coeffs_nonneg_integral(*c0);
    // Bound |t| by the coefficient sizes.
    Rat bound(0);
    for (const auto& x : *c0)
        if (abs(x) > bound) bound = abs(x);
    long B = rat_to_long(Rat(rat_floor(bound))) + 2;
    for (long z = -4 * B; z <= 4 * B; ++z) {
        Rat t = (Rat(z) - (*c0)[i0]) / rc[i0];
        std::vector<Rat> c = *c0;
        bool ok = true;
        for (size_t i = 0; i < c.size(); ++i) {
            c[i] += t * rc[i];
            if (c[i] < 0 || !rat_is_integer(c[i])) {
                ok = false;
                break;
            }
        }
        if (ok) return true;
    }
    return false;
}

Rat RootBasis::height(const Weight& diff_ambient) const {
    Weight diff = sys_->canonical(diff_ambient);
    if (!sys_->has_quotient()) {
        auto c = expand(diff);
        if (!c) fail(Code::internal, "height: vector outside basis span");
        Rat h(0);
        for (const auto& x : *c) h += x;
        return h;
    }
    // Quotient: use the [B | relation] expansion (unique for sl/sp; a fixed
    // representative for psl).
    size_t k = simple_.size();
    size_t d = sys_->dim();
    std::vector<std::vector<Rat>> aug(d, std::vector<Rat>(k + 2, Rat(0)));
    for (size_t c = 0; c < k; ++c)
        for (size_t r = 0; r < d; ++r) aug[r][c] = simple_[c][r];
    for (size_t r = 0; r < d; ++r) {
        aug[r][k] = sys_->relation()[r];
        aug[r][k + 1] = diff[r];
    }
    std::vector<int> piv;
    auto R = rref(std::move(aug), piv, k + 1);
    for (size_t r = piv.size(); r < d; ++r)
        if (R[r][k + 1] != 0) fail(Code::internal, "height: vector outside span");
    Rat h(0);
    for (size_t r = 0; r < piv.size(); ++r)
        if (piv[r] < static_cast<int>(k)) h += R[r][k + 1];
    return h;
}

// ---------------------------------------------------------------------------
// Block helpers

std::vector<LocalWeight> block_standard_basis(BlockType t, int rank) {
    std::vector<LocalWeight> b;
    auto unit = [&](int i) {
        LocalWeight w(rank, Rat(0));
        w[i] = Rat(1);
        return w;
    };
    for (int i = 0; i + 1 < rank; ++i) {
        LocalWeight w = unit(i);
        w[i + 1] = Rat(-1);
        b.push_back(w);
    }
    if (t == BlockType::C) {
        LocalWeight w = unit(rank - 1);
        w[rank - 1] = Rat(2);
        b.push_back(w);
    }
    return b;
}

std::vector<LocalWeight> block_positive_roots(BlockType t, int rank) {
    std::vector<LocalWeight> out;
    auto mk = [&](int i, Rat ci, int j, Rat cj) {
        LocalWeight w(rank, Rat(0));
        w[i] = ci;
        if (j >= 0) w[j] = cj;
        out.push_back(w);
    };
    for (int i = 0; i < rank; ++i)
        for (int j = i + 1; j < rank; ++j) mk(i, Rat(1), j, Rat(-1));
    if (t == BlockType::C) {
        for (int i = 0; i < rank; ++i)
            for (int j = i + 1; j < rank; ++j) mk(i, Rat(1), j, Rat(1));
        for (int i = 0; i < rank; ++i) mk(i, Rat(2), -1, Rat(0));
    }
    return out;
}

LocalWeight block_rho(BlockType t, int rank) {
    LocalWeight r(rank, Rat(0));
    for (const auto& a : block_positive_roots(t, rank))
        for (int i = 0; i < rank; ++i) r[i] += a[i] / 2;
    return r;
}

Rat local_dot(const LocalWeight& x, const LocalWeight& y) {
    Rat s(0);
    for (size_t i = 0; i < x.size(); ++i) s += x[i] * y[i];
    return s;
}

Rat local_pairing(const LocalWeight& lam, const LocalWeight& alpha) {
    return Rat(2) * local_dot(lam, alpha) / local_dot(alpha, alpha);
}

}  // namespace sw
