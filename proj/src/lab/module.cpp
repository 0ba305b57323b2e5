#include "module.hpp"

#include <algorithm>
#include <functional>
#include <tuple>

#include "../error.hpp"

namespace sw::lab {

std::vector<Rat> normalize_functional(const RootSystemPtr& sys, std::vector<Rat> l) {
    if (l.size() != sys->dim())
        fail(Code::invalid_parameters, "functional needs one value per coordinate");
    if (!sys->has_quotient()) return l;
    const Weight& v = sys->relation();
    Rat lv(0);
    for (size_t i = 0; i < l.size(); ++i) lv += l[i] * v[i];
    if (lv == 0) return l;
    // Find w with w(root span) = 0 and w(v) = 1; exists iff v is outside the
    // rational span of the roots (sl, sp). For psl the value is forced.
    RootBasis b = RootBasis::standard(sys);
    size_t d = sys->dim(), k = b.simple().size();
    Mat a(k + 1, d);
    Mat rhs(k + 1, 1);
    for (size_t r = 0; r < k; ++r)
        for (size_t c = 0; c < d; ++c) a.at(r, c) = b.simple()[r][c];
    for (size_t c = 0; c < d; ++c) a.at(k, c) = v[c];
    rhs.at(k, 0) = Rat(1);
    auto w = a.solve(rhs);
    if (!w)
        fail(Code::invalid_parameters,
             "functional does not descend to the quotient weight space");
    for (size_t i = 0; i < d; ++i) l[i] -= lv * w->at(i, 0);
    return l;
}

// ---------------------------------------------------------------------------

int WeightModule::index_of(const Weight& w) const {
    auto it = index_.find(alg_->sys()->canonical(w));
    return it == index_.end() ? -1 : static_cast<int>(it->second);
}

size_t WeightModule::dim_at(const Weight& w) const {
    int i = index_of(w);
    return i < 0 ? 0 : dims_[static_cast<size_t>(i)];
}

Rat WeightModule::depth_of_weight(const Weight& w) const {
    return alg_->basis().height(top_ref_ - alg_->sys()->canonical(w));
}

bool WeightModule::in_window(const Weight& w) const {
    Rat d = depth_of_weight(w);
    return d <= Rat(depth_);
}

const Mat* WeightModule::action(size_t e, size_t wi) const {
    auto it = act_.find({e, wi});
    return it == act_.end() ? nullptr : &it->second;
}

Weight WeightModule::target_weight(size_t e, size_t wi) const {
    return alg_->sys()->canonical(weights_[wi] + alg_->gen(e).weight);
}

std::optional<Mat> WeightModule::combo_action(const AlgCombo& c, size_t wi) const {
    std::optional<Mat> acc;
    for (const auto& [e, coef] : c) {
        const Mat* m = action(e, wi);
        if (!m) return std::nullopt;
        Mat term = (*m) * coef;
        if (!acc)
            acc = term;
        else
            acc = *acc + term;
    }
    if (!acc) return Mat(0, dims_[wi]);
    return acc;
}

std::vector<size_t> WeightModule::top_slice() const {
    std::vector<size_t> out;
    for (size_t i = 0; i < weights_.size(); ++i)
        if (levels_[i] == top_level_) out.push_back(i);
    return out;
}

WeightModule WeightModule::trivial_line(const LabAlgebraPtr& alg,
                                        const std::vector<size_t>& active,
                                        const Weight& lam) {
    WeightModule m;
    m.alg_ = alg;
    m.active_ = active;
    m.l_ = std::vector<Rat>(alg->sys()->dim(), Rat(0));
    m.depth_ = 0;
    Weight cl = alg->sys()->canonical(lam);
    m.top_ref_ = cl;
    m.weights_ = {cl};
    m.index_[cl] = 0;
    m.dims_ = {1};
    m.levels_ = {Rat(0)};
    m.labels_.push_back({BasisLabel{{}, 0}});
    for (size_t e : active) {
        if (!alg->is_cartan(e)) continue;
        Mat h(1, 1);
        h.at(0, 0) = alg->weight_eval(cl, e);
        m.act_[{e, 0}] = std::move(h);
    }
    return m;
}

WeightModule WeightModule::verma(const LabAlgebraPtr& alg,
                                 const std::vector<size_t>& active,
                                 const Weight& lam, int depth) {
    // Borel induction: the level functional is the basis height.
    // Build an ambient functional with l(root) = height(root): solve on the
    // simple roots; heights are well-defined via RootBasis::height, so use
    // the height of each coordinate's image is not available directly --
    // instead classify elements by the sign of the height of their weight.
    // We implement this by passing a functional evaluated through heights.
    if (depth < 1) fail(Code::invalid_parameters, "depth must be >= 1");
    if (depth > 64) fail(Code::depth_too_large, "depth cap is 64");
    WeightModule r = trivial_line(alg, active, lam);
    // Height functional: represent as l with l(w) = height(w). Heights are
    // linear on the root span; extend by zero on the complement using the
    // same solve as normalize_functional.
    const auto& b = alg->basis();
    size_t d = alg->sys()->dim();
    std::vector<Rat> l(d, Rat(0));
    // Solve sum l_i * (alpha)_i = height(alpha) over the simple roots, with
    // l orthogonal to the relation if present.
    size_t k = b.simple().size();
    bool rel = alg->sys()->has_quotient();
    Mat a(k + (rel ? 1 : 0), d);
    Mat rhs(k + (rel ? 1 : 0), 1);
    for (size_t r2 = 0; r2 < k; ++r2) {
        for (size_t c = 0; c < d; ++c) a.at(r2, c) = b.simple()[r2][c];
        rhs.at(r2, 0) = Rat(1);  // simple roots have height 1
    }
    if (rel)
        for (size_t c = 0; c < d; ++c) a.at(k, c) = alg->sys()->relation()[c];
    auto sol = a.solve(rhs);
    check_invariant(sol.has_value(), "height functional solve failed");
    for (size_t i = 0; i < d; ++i) l[i] = sol->at(i, 0);
    return induce(alg, active, l, r, depth);
}

WeightModule WeightModule::verma(const LabAlgebraPtr& alg, const Weight& lam,
                                 int depth) {
    std::vector<size_t> all(alg->size());
    for (size_t i = 0; i < all.size(); ++i) all[i] = i;
    return verma(alg, all, lam, depth);
}

WeightModule WeightModule::induce(const LabAlgebraPtr& alg,
                                  const std::vector<size_t>& active,
                                  const std::vector<Rat>& l_in,
                                  const WeightModule& r, int depth) {
    if (depth < 0) fail(Code::invalid_parameters, "negative depth");
    if (depth > 64) fail(Code::depth_too_large, "depth cap is 64");
    WeightModule m;
    m.alg_ = alg;
    m.active_ = active;
    m.l_ = normalize_functional(alg->sys(), l_in);
    m.depth_ = depth;
    m.r_ = &r;

    auto level_of = [&](const Weight& w) {
        Rat s(0);
        for (size_t i = 0; i < w.dim(); ++i) s += m.l_[i] * w[i];
        return s;
    };

    // u^- elements among the active set, in PBW order (element index).
    for (size_t e : active) {
        if (alg->is_cartan(e)) continue;
        if (level_of(alg->sys()->canonical(alg->gen(e).weight)) < 0)
            m.u_minus_.push_back(e);
    }
    std::sort(m.u_minus_.begin(), m.u_minus_.end());

    // R positions and the top reference.
    std::optional<Weight> top;
    std::optional<Rat> top_h;
    const auto& basis = alg->basis();
    for (size_t rwi = 0; rwi < r.space_count(); ++rwi) {
        const Weight& w = r.weight(rwi);
        for (size_t p = 0; p < r.dim(rwi); ++p) m.r_positions_.emplace_back(rwi, p);
        Rat h = basis.height(w - r.weight(0));
        if (!top_h || h > *top_h) {
            top_h = h;
            top = w;
        }
    }
    check_invariant(top.has_value(), "induction from an empty module");
    m.top_ref_ = *top;

    // All R weights must sit at one level (supp R in one K Q_a coset).
    Rat lev0 = level_of(r.weight(0));
    for (size_t rwi = 0; rwi < r.space_count(); ++rwi)
        check_invariant(level_of(r.weight(rwi)) == lev0,
                        "inducing module support must lie at one level");
    m.top_level_ = lev0;

    // Depth contribution of each u^- element (positive integer).
    std::vector<long> hneg(m.u_minus_.size());
    for (size_t i = 0; i < m.u_minus_.size(); ++i) {
        Rat h = -basis.height(alg->gen(m.u_minus_[i]).weight);
        if (!rat_is_integer(h) || h <= 0)
            fail(Code::internal, "u^- element with non-positive depth step");
        hneg[i] = rat_to_long(h);
    }

    // Enumerate PBW monomials per R position within the depth budget.
    std::map<Weight, std::vector<BasisLabel>> spaces;
    for (size_t rp = 0; rp < m.r_positions_.size(); ++rp) {
        size_t rwi = m.r_positions_[rp].first;
        const Weight& rw = r.weight(rwi);
        long base = rat_to_long(basis.height(m.top_ref_ - rw));
        // Recursive enumeration of non-decreasing index monomials.
        std::vector<size_t> mono;
        std::function<void(size_t, long, const Weight&)> gen =
            [&](size_t start, long used, const Weight& w) {
                spaces[alg->sys()->canonical(w)].push_back(BasisLabel{mono, rp});
                for (size_t i = start; i < m.u_minus_.size(); ++i) {
                    size_t e = m.u_minus_[i];
                    if (used + hneg[i] > depth) continue;
                    if (alg->gen(e).odd && !mono.empty() && mono.back() == e)
                        continue;  // odd generators square to the bracket rule
                    mono.push_back(e);
                    gen(i, used + hneg[i], w + alg->gen(e).weight);
                    mono.pop_back();
                }
            };
        gen(0, base, rw);
    }

    for (auto& [w, labels] : spaces) {
        size_t wi = m.weights_.size();
        m.weights_.push_back(w);
        m.index_[w] = wi;
        m.dims_.push_back(labels.size());
        m.levels_.push_back(level_of(w));
        m.labels_.push_back(std::move(labels));
        for (size_t p = 0; p < m.labels_.back().size(); ++p)
            m.label_index_[{m.labels_.back()[p].mono, m.labels_.back()[p].r_pos}] = {
                wi, p};
    }

    m.build_actions();
    m.r_ = nullptr;
    return m;
}

void WeightModule::build_actions() {
    std::map<std::tuple<size_t, size_t, size_t>, std::vector<Rat>> memo;
    for (size_t wi = 0; wi < weights_.size(); ++wi) {
        for (size_t e : active_) {
            Weight target = target_weight(e, wi);
            Rat dpt = depth_of_weight(target);
            if (dpt > Rat(depth_)) continue;  // truncated
            int ti = index_of(target);
            size_t tdim = ti < 0 ? 0 : dims_[static_cast<size_t>(ti)];
            Mat mat(tdim, dims_[wi]);
            bool ok = true;
            for (size_t p = 0; p < dims_[wi] && ok; ++p) {
                auto col = act_on_basis(e, wi, p, memo);
                if (col.size() != tdim && !(tdim == 0 && col.empty())) {
                    ok = false;
                    break;
                }
                for (size_t i2 = 0; i2 < tdim; ++i2) mat.at(i2, p) = col[i2];
            }
            if (ok) act_[{e, wi}] = std::move(mat);
        }
    }
}

// Returns the coordinates of e . basis(wi, pos) in the target weight space
// (empty vector when the target space is zero-dimensional).
std::vector<Rat> WeightModule::act_on_basis(
    size_t e, size_t wi, size_t pos,
    std::map<std::tuple<size_t, size_t, size_t>, std::vector<Rat>>& memo) const {
    auto key = std::make_tuple(e, wi, pos);
    auto found = memo.find(key);
    if (found != memo.end()) return found->second;

    Weight target = target_weight(e, wi);
    int ti = index_of(target);
    size_t tdim = ti < 0 ? 0 : dims_[static_cast<size_t>(ti)];
    std::vector<Rat> out(tdim, Rat(0));

    const BasisLabel& lbl = labels_[wi][pos];
    const auto& gen_e = alg_->gen(e);

    auto add_scaled = [&](const std::vector<Rat>& v, const Rat& c) {
        for (size_t i = 0; i < out.size(); ++i) out[i] += c * v[i];
    };
    auto combo_on = [&](const AlgCombo& combo, size_t wi2, size_t pos2,
                        const Rat& scale) {
        for (const auto& [k, c] : combo) {
            auto v = act_on_basis(k, wi2, pos2, memo);
            add_scaled(v, c * scale);
        }
    };

    if (lbl.mono.empty()) {
        // Acting on 1 (x) r.
        Rat lev(0);
        {
            Weight cw = alg_->sys()->canonical(gen_e.weight);
            for (size_t i = 0; i < cw.dim(); ++i) lev += l_[i] * cw[i];
        }
        if (lev > 0) {
            // u acts trivially on R.
        } else if (lev == 0) {
            check_invariant(r_ != nullptr, "induction data missing");
            size_t rwi = r_positions_[lbl.r_pos].first;
            size_t rp = r_positions_[lbl.r_pos].second;
            const Mat* ra = r_->action(e, rwi);
            if (!ra)
                fail(Code::window_too_small,
                     "inducing module window lacks an action matrix");
            // Map R target positions into our (empty mono, r) labels.
            Weight rtarget = r_->target_weight(e, rwi);
            int rti = r_->index_of(rtarget);
            if (rti >= 0) {
                size_t base = 0;
                for (size_t q = 0; q < static_cast<size_t>(rti); ++q)
                    base += r_->dim(q);
                for (size_t i2 = 0; i2 < ra->rows(); ++i2) {
                    if (ra->at(i2, rp) == 0) continue;
                    auto it = label_index_.find({{}, base + i2});
                    check_invariant(it != label_index_.end(),
                                    "missing R label in induced module");
                    check_invariant(it->second.first == static_cast<size_t>(ti),
                                    "R label at unexpected weight");
                    out[it->second.second] += ra->at(i2, rp);
                }
            }
        } else {
            // e lies in u^-: the monomial (e) at the target weight.
            auto it = label_index_.find({{e}, lbl.r_pos});
            check_invariant(it != label_index_.end(), "missing PBW label");
            out[it->second.second] += Rat(1);
        }
        memo[key] = out;
        return out;
    }

    size_t f = lbl.mono.front();
    std::vector<size_t> rest(lbl.mono.begin() + 1, lbl.mono.end());
    auto rest_it = label_index_.find({rest, lbl.r_pos});
    check_invariant(rest_it != label_index_.end(), "missing PBW tail label");
    size_t rwi2 = rest_it->second.first, rpos2 = rest_it->second.second;

    Rat lev_e(0);
    {
        Weight cw = alg_->sys()->canonical(gen_e.weight);
        for (size_t i = 0; i < cw.dim(); ++i) lev_e += l_[i] * cw[i];
    }
    bool e_in_uminus = !alg_->is_cartan(e) && lev_e < 0;

    if (e_in_uminus && e < f) {
        std::vector<size_t> mono2;
        mono2.push_back(e);
        mono2.insert(mono2.end(), lbl.mono.begin(), lbl.mono.end());
        auto it = label_index_.find({mono2, lbl.r_pos});
        check_invariant(it != label_index_.end(), "missing prepended PBW label");
        out[it->second.second] += Rat(1);
    } else if (e_in_uminus && e == f && !gen_e.odd) {
        std::vector<size_t> mono2;
        mono2.push_back(e);
        mono2.insert(mono2.end(), lbl.mono.begin(), lbl.mono.end());
        auto it = label_index_.find({mono2, lbl.r_pos});
        check_invariant(it != label_index_.end(), "missing prepended PBW label");
        out[it->second.second] += Rat(1);
    } else if (e_in_uminus && e == f && gen_e.odd) {
        // e^2 = [e,e]/2 in U.
        combo_on(alg_->bracket(e, e), wi, pos, Rat(1, 2));
    } else {
        // e (f w) = [e,f] w + (-1)^{p(e)p(f)} f (e w).
        combo_on(alg_->bracket(e, f), rwi2, rpos2, Rat(1));
        Rat sign = (gen_e.odd && alg_->gen(f).odd) ? Rat(-1) : Rat(1);
        auto ev = act_on_basis(e, rwi2, rpos2, memo);
        // Prepend f to each basis vector of the intermediate target space.
        Weight inter = target_weight(e, rwi2);
        int ii = index_of(inter);
        if (ii >= 0) {
            for (size_t p2 = 0; p2 < ev.size(); ++p2) {
                if (ev[p2] == 0) continue;
                auto fv = act_on_basis(f, static_cast<size_t>(ii), p2, memo);
                add_scaled(fv, sign * ev[p2]);
            }
        }
    }
    memo[key] = out;
    return out;
}

bool WeightModule::check_brackets() const {
    for (size_t xi : active_)
        for (size_t yi : active_) {
            for (size_t wi = 0; wi < weights_.size(); ++wi) {
                const Mat* y = action(yi, wi);
                if (!y) continue;
                Weight mid = target_weight(yi, wi);
                int mi = index_of(mid);
                const Mat* x =
                    mi < 0 ? nullptr : action(xi, static_cast<size_t>(mi));
                if (mi >= 0 && !x) continue;
                // x (y v)
                Mat xy = mi < 0 ? Mat(0, dims_[wi]) : (*x) * (*y);
                // y (x v)
                const Mat* x2 = action(xi, wi);
                if (!x2) continue;
                Weight mid2 = target_weight(xi, wi);
                int mi2 = index_of(mid2);
                const Mat* y2 =
                    mi2 < 0 ? nullptr : action(yi, static_cast<size_t>(mi2));
                if (mi2 >= 0 && !y2) continue;
                Mat yx = mi2 < 0 ? Mat(0, dims_[wi]) : (*y2) * (*x2);
                auto br = combo_action(alg_->bracket(xi, yi), wi);
                if (!br) continue;
                Rat sign =
                    (alg_->gen(xi).odd && alg_->gen(yi).odd) ? Rat(1) : Rat(-1);
                // [x,y] v = x(y v) - (-1)^{pq} y(x v)
                size_t rows = std::max(xy.rows(), yx.rows());
                rows = std::max(rows, br->rows());
                Mat lhs(rows, dims_[wi]), rhs(rows, dims_[wi]);
                for (size_t i2 = 0; i2 < br->rows(); ++i2)
                    for (size_t j = 0; j < dims_[wi]; ++j) lhs.at(i2, j) = br->at(i2, j);
                for (size_t i2 = 0; i2 < xy.rows(); ++i2)
                    for (size_t j = 0; j < dims_[wi]; ++j) rhs.at(i2, j) = xy.at(i2, j);
                for (size_t i2 = 0; i2 < yx.rows(); ++i2)
                    for (size_t j = 0; j < dims_[wi]; ++j)
                        rhs.at(i2, j) += Rat(sign) * yx.at(i2, j);
                if (!(lhs == rhs)) return false;
            }
        }
    return true;
}

// ---------------------------------------------------------------------------
// Submodules

bool WeightModule::Submodule::is_zero() const {
    for (const auto& [wi, m] : space)
        if (m.cols() > 0) return false;
    return true;
}

size_t WeightModule::Submodule::total_dim() const {
    size_t d = 0;
    for (const auto& [wi, m] : space) d += m.cols();
    return d;
}

Mat WeightModule::Submodule::at(size_t wi, const WeightModule& m) const {
    auto it = space.find(wi);
    if (it != space.end()) return it->second;
    return Mat(m.dim(wi), 0);
}

WeightModule::Submodule WeightModule::full_submodule() const {
    Submodule s;
    for (size_t wi = 0; wi < weights_.size(); ++wi)
        s.space[wi] = Mat::identity(dims_[wi]);
    return s;
}

WeightModule::Submodule WeightModule::closure(Submodule seed) const {
    bool changed = true;
    while (changed) {
        changed = false;
        std::vector<std::pair<size_t, Mat>> updates;
        for (const auto& [wi, sp] : seed.space) {
            if (sp.cols() == 0) continue;
            for (size_t e : active_) {
                const Mat* a = action(e, wi);
                if (!a || a->rows() == 0) continue;
                Mat img = (*a) * sp;
                if (img.is_zero()) continue;
                int ti = index_of(target_weight(e, wi));
                check_invariant(ti >= 0, "action target missing");
                Mat cur = seed.at(static_cast<size_t>(ti), *this);
                if (!Mat::contains(cur, img)) {
                    updates.emplace_back(static_cast<size_t>(ti),
                                         Mat::sum(cur, img));
                }
            }
        }
        for (auto& [ti, m] : updates) {
            Mat cur = seed.at(ti, *this);
            if (m.rank() > cur.rank() || !Mat::contains(cur, m)) {
                seed.space[ti] = m;
                changed = true;
            }
        }
    }
    // Normalize bases.
    for (auto& [wi, m] : seed.space) m = m.column_basis();
    return seed;
}

WeightModule::Submodule WeightModule::generated_by(size_t wi,
                                                   const std::vector<Rat>& vec) const {
    Submodule s;
    s.space[wi] = Mat::col_vector(vec);
    return closure(std::move(s));
}

bool WeightModule::submodule_contains(const Submodule& a, const Submodule& b) const {
    for (const auto& [wi, m] : b.space) {
        if (m.cols() == 0) continue;
        if (!Mat::contains(a.at(wi, *this), m)) return false;
    }
    return true;
}

bool WeightModule::submodule_equal(const Submodule& a, const Submodule& b) const {
    return submodule_contains(a, b) && submodule_contains(b, a);
}

WeightModule::Submodule WeightModule::submodule_sum(const Submodule& a,
                                                    const Submodule& b) const {
    Submodule s = a;
    for (const auto& [wi, m] : b.space)
        s.space[wi] = Mat::sum(s.at(wi, *this), m);
    return s;
}

WeightModule::Submodule WeightModule::submodule_intersect(const Submodule& a,
                                                          const Submodule& b) const {
    Submodule s;
    for (const auto& [wi, m] : a.space) {
        Mat o = b.at(wi, *this);
        Mat i = Mat::intersect(m, o);
        if (i.cols() > 0) s.space[wi] = i;
    }
    return s;
}

bool WeightModule::is_invariant(const Submodule& s) const {
    for (const auto& [wi, sp] : s.space) {
        if (sp.cols() == 0) continue;
        for (size_t e : active_) {
            const Mat* a = action(e, wi);
            if (!a || a->rows() == 0) continue;
            Mat img = (*a) * sp;
            if (img.is_zero()) continue;
            int ti = index_of(target_weight(e, wi));
            if (ti < 0) return false;
            if (!Mat::contains(s.at(static_cast<size_t>(ti), *this), img))
                return false;
        }
    }
    return true;
}

WeightModule WeightModule::quotient(const Submodule& z) const {
    WeightModule q;
    q.alg_ = alg_;
    q.active_ = active_;
    q.l_ = l_;
    q.depth_ = depth_;
    q.top_ref_ = top_ref_;
    q.top_level_ = top_level_;

    std::vector<SubspaceReducer> reducers(weights_.size());
    std::vector<int> new_index(weights_.size(), -1);
    for (size_t wi = 0; wi < weights_.size(); ++wi) {
        reducers[wi] = SubspaceReducer(z.at(wi, *this));
        size_t qd = reducers[wi].quotient_dim();
        if (qd == 0) continue;
        new_index[wi] = static_cast<int>(q.weights_.size());
        q.weights_.push_back(weights_[wi]);
        q.index_[weights_[wi]] = q.weights_.size() - 1;
        q.dims_.push_back(qd);
        q.levels_.push_back(levels_[wi]);
        q.labels_.push_back({});
    }
    for (const auto& [key, mat] : act_) {
        auto [e, wi] = key;
        if (new_index[wi] < 0) continue;
        int ti = index_of(target_weight(e, wi));
        size_t src_q = reducers[wi].quotient_dim();
        size_t tgt_q = 0;
        if (ti >= 0 && new_index[static_cast<size_t>(ti)] >= 0)
            tgt_q = reducers[static_cast<size_t>(ti)].quotient_dim();
        Mat qm(tgt_q, src_q);
        const auto& free_src = reducers[wi].free_coords();
        for (size_t j = 0; j < src_q; ++j) {
            // Lift: unit vector at the j-th free coordinate.
            std::vector<Rat> v(dims_[wi], Rat(0));
            v[free_src[j]] = Rat(1);
            std::vector<Rat> img(mat.rows(), Rat(0));
            for (size_t i2 = 0; i2 < mat.rows(); ++i2) img[i2] = mat.at(i2, free_src[j]);
            if (ti >= 0 && tgt_q > 0) {
                auto qc = reducers[static_cast<size_t>(ti)].quotient_coords(img);
                for (size_t i2 = 0; i2 < tgt_q; ++i2) qm.at(i2, j) = qc[i2];
            }
        }
        q.act_[{e, static_cast<size_t>(new_index[wi])}] = std::move(qm);
    }
    return q;
}

WeightModule::Submodule WeightModule::maximal_trivial_intersection() const {
    // u-part elements raise the level; only raising paths reach the slice,
    // so the computation is exact on the whole window.
    std::vector<size_t> u_elems;
    for (size_t e : active_) {
        Weight cw = alg_->sys()->canonical(alg_->gen(e).weight);
        Rat lev(0);
        for (size_t i = 0; i < cw.dim(); ++i) lev += l_[i] * cw[i];
        if (lev > 0) u_elems.push_back(e);
    }
    std::vector<std::optional<Mat>> pmat(weights_.size());
    std::function<const Mat&(size_t)> getp = [&](size_t wi) -> const Mat& {
        if (pmat[wi]) return *pmat[wi];
        if (levels_[wi] == top_level_) {
            pmat[wi] = Mat::identity(dims_[wi]);
            return *pmat[wi];
        }
        std::vector<Mat> stack;
        size_t rows = 0;
        for (size_t e : u_elems) {
            Weight t = target_weight(e, wi);
            int ti = index_of(t);
            if (ti < 0) {
                if (depth_of_weight(t) > Rat(depth_))
                    fail(Code::window_too_small,
                         "raising action leaves the window");
                continue;  // genuinely zero space
            }
            const Mat* a = action(e, wi);
            if (!a)
                fail(Code::window_too_small, "missing action matrix for Z_p");
            Mat p = getp(static_cast<size_t>(ti)) * (*a);
            rows += p.rows();
            stack.push_back(std::move(p));
        }
        Mat big(rows, dims_[wi]);
        size_t r0 = 0;
        for (const auto& p : stack) {
            for (size_t i2 = 0; i2 < p.rows(); ++i2)
                for (size_t j = 0; j < p.cols(); ++j) big.at(r0 + i2, j) = p.at(i2, j);
            r0 += p.rows();
        }
        // Row-space basis keeps kernels identical and sizes bounded.
        Mat reduced = big.transpose().column_basis().transpose();
        pmat[wi] = std::move(reduced);
        return *pmat[wi];
    };
    Submodule z;
    for (size_t wi = 0; wi < weights_.size(); ++wi) {
        Mat ker = getp(wi).kernel();
        if (ker.cols() > 0) z.space[wi] = ker;
    }
    return z;
}

std::map<size_t, Mat> WeightModule::invariants(const std::vector<size_t>& elems) const {
    std::map<size_t, Mat> out;
    for (size_t wi = 0; wi < weights_.size(); ++wi) {
        size_t rows = 0;
        std::vector<const Mat*> stack;
        bool certified = true;
        for (size_t e : elems) {
            Weight t = target_weight(e, wi);
            int ti = index_of(t);
            if (ti < 0) {
                if (depth_of_weight(t) > Rat(depth_)) certified = false;
                continue;
            }
            const Mat* a = action(e, wi);
            if (!a) {
                certified = false;
                continue;
            }
            stack.push_back(a);
            rows += a->rows();
        }
        if (!certified) continue;
        Mat big(rows, dims_[wi]);
        size_t r0 = 0;
        for (const Mat* a : stack) {
            for (size_t i2 = 0; i2 < a->rows(); ++i2)
                for (size_t j = 0; j < a->cols(); ++j) big.at(r0 + i2, j) = a->at(i2, j);
            r0 += a->rows();
        }
        Mat ker = big.kernel();
        if (ker.cols() > 0) out[wi] = ker;
    }
    return out;
}

std::vector<WeightModule::Submodule> WeightModule::composition_series() const {
    std::vector<Submodule> chain;
    Submodule cur = zero_submodule();
    Submodule full = full_submodule();
    auto strictly_bigger = [&](const Submodule& a, const Submodule& b) {
        return submodule_contains(a, b) && !submodule_equal(a, b);
    };
    int guard = 0;
    while (!submodule_equal(cur, full)) {
        if (++guard > 4096) fail(Code::internal, "composition series runaway");
        // Find a minimal submodule strictly above cur.
        std::optional<Submodule> next;
        for (size_t wi = 0; wi < weights_.size() && !next; ++wi) {
            Mat curm = cur.at(wi, *this);
            if (curm.cols() == dims_[wi]) continue;
            // Any vector outside cur at this weight.
            for (size_t j = 0; j < dims_[wi]; ++j) {
                std::vector<Rat> v(dims_[wi], Rat(0));
                v[j] = Rat(1);
                if (Mat::contains(curm, Mat::col_vector(v))) continue;
                next = submodule_sum(cur, generated_by(wi, v));
                break;
            }
        }
        check_invariant(next.has_value(), "no vector outside a proper submodule");
        // Shrink to a minimal extension: scan candidate generators inside.
        bool shrunk = true;
        while (shrunk) {
            shrunk = false;
            for (const auto& [wi, sp] : next->space) {
                Mat curm = cur.at(wi, *this);
                std::vector<std::vector<Rat>> candidates;
                for (size_t j = 0; j < sp.cols(); ++j) candidates.push_back(sp.col(j));
                if (sp.cols() >= 2) {
                    for (size_t j = 1; j < sp.cols(); ++j) {
                        auto a = sp.col(0), b = sp.col(j);
                        std::vector<Rat> s1(a.size()), s2(a.size());
                        for (size_t i2 = 0; i2 < a.size(); ++i2) {
                            s1[i2] = a[i2] + b[i2];
                            s2[i2] = a[i2] - b[i2];
                        }
                        candidates.push_back(s1);
                        candidates.push_back(s2);
                    }
                }
                for (const auto& v : candidates) {
                    if (Mat::contains(curm, Mat::col_vector(v))) continue;
                    Submodule cand = submodule_sum(cur, generated_by(wi, v));
                    if (strictly_bigger(*next, cand)) {
                        next = cand;
                        shrunk = true;
                        break;
                    }
                }
                if (shrunk) break;
            }
        }
        chain.push_back(*next);
        cur = *next;
    }
    return chain;
}

}  // namespace sw::lab
