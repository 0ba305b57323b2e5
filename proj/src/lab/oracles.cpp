#include "oracles.hpp"

#include <algorithm>
#include <functional>

#include "../error.hpp"

namespace sw::lab {

std::vector<LocalWeight> so_positive_roots(int m) {
    std::vector<LocalWeight> out;
    for (int i = 0; i < m; ++i)
        for (int j = i + 1; j < m; ++j) {
            LocalWeight a(m, Rat(0)), b(m, Rat(0));
            a[i] = Rat(1);
            a[j] = Rat(-1);
            b[i] = Rat(1);
            b[j] = Rat(1);
            out.push_back(a);
            out.push_back(b);
        }
    return out;
}

static std::vector<std::vector<int>> all_perms(int m) {
    std::vector<int> idx(m);
    for (int i = 0; i < m; ++i) idx[i] = i;
    std::vector<std::vector<int>> out;
    do {
        out.push_back(idx);
    } while (std::next_permutation(idx.begin(), idx.end()));
    return out;
}

static std::vector<std::vector<LocalWeight>> signed_perm_images(
    const LocalWeight& v, bool signs, bool even_signs_only) {
    int m = static_cast<int>(v.size());
    std::vector<std::vector<LocalWeight>> out;
    for (const auto& p : all_perms(m)) {
        unsigned nsign = signs ? (1u << m) : 1u;
        for (unsigned bits = 0; bits < nsign; ++bits) {
            if (even_signs_only) {
                int pop = 0;
                for (int i = 0; i < m; ++i)
                    if (bits & (1u << i)) ++pop;
                if (pop % 2 != 0) continue;
            }
            LocalWeight w(v.size());
            for (int i = 0; i < m; ++i) {
                w[static_cast<size_t>(i)] = v[static_cast<size_t>(p[i])];
                if (bits & (1u << i)) w[static_cast<size_t>(i)] = -w[static_cast<size_t>(i)];
            }
            out.push_back({w});
        }
    }
    return out;
}

std::vector<std::vector<LocalWeight>> block_weyl_images(BlockType t,
                                                        const LocalWeight& v) {
    return signed_perm_images(v, t == BlockType::C, false);
}

std::vector<std::vector<LocalWeight>> so_weyl_images(const LocalWeight& v) {
    return signed_perm_images(v, true, true);
}

namespace {

// Weight-multiplicity table by the Freudenthal recursion, enumerated on the
// exact set {mu : mu <= lam, height bounded by lam - min(W lam)}.
struct FreudenthalTable {
    std::vector<LocalWeight> simple;  // cone generators (simple roots)
    std::vector<LocalWeight> positive;
    LocalWeight rho;
    LocalWeight lam;
    std::map<LocalWeight, long> mult;

    Rat norm2(const LocalWeight& v) const { return local_dot(v, v); }

    void run(long height_cap) {
        LocalWeight top = lam;
        std::map<LocalWeight, long> seen;
        // BFS downward from lam through the simple-root cone.
        std::vector<LocalWeight> frontier{lam};
        seen[lam] = 0;
        LocalWeight lr(lam.size());
        for (size_t i = 0; i < lam.size(); ++i) lr[i] = lam[i] + rho[i];
        Rat bound = norm2(lr);
        while (!frontier.empty()) {
            std::vector<LocalWeight> next;
            for (const auto& w : frontier) {
                long h = seen[w];
                if (h >= height_cap) continue;
                for (const auto& a : simple) {
                    LocalWeight u(w.size());
                    for (size_t i = 0; i < w.size(); ++i) u[i] = w[i] - a[i];
                    if (!seen.count(u)) {
                        seen[u] = h + 1;
                        next.push_back(u);
                    }
                }
            }
            frontier = std::move(next);
        }
        // Process by increasing distance from the top.
        std::vector<std::pair<long, LocalWeight>> order;
        for (const auto& [w, h] : seen) {
            LocalWeight wr(w.size());
            for (size_t i = 0; i < w.size(); ++i) wr[i] = w[i] + rho[i];
            if (norm2(wr) > bound) continue;  // not a weight of L(lam)
            order.emplace_back(h, w);
        }
        std::sort(order.begin(), order.end());
        for (const auto& [h, w] : order) {
            if (w == lam) {
                mult[w] = 1;
                continue;
            }
            LocalWeight wr(w.size());
            for (size_t i = 0; i < w.size(); ++i) wr[i] = w[i] + rho[i];
            Rat denom = bound - norm2(wr);
            if (denom == 0) {
                mult[w] = 0;
                continue;
            }
            Rat acc(0);
            for (const auto& a : positive) {
                for (long k = 1;; ++k) {
                    LocalWeight u(w.size());
                    for (size_t i = 0; i < w.size(); ++i) u[i] = w[i] + Rat(k) * a[i];
                    auto it = mult.find(u);
                    long mu_mult = it == mult.end() ? 0 : it->second;
                    LocalWeight ur(u.size());
                    for (size_t i = 0; i < u.size(); ++i) ur[i] = u[i] + rho[i];
                    if (norm2(ur) > bound) break;
                    if (mu_mult != 0) acc += Rat(2 * mu_mult) * local_dot(u, a);
                }
            }
            Rat m = acc / denom;
            check_invariant(rat_is_integer(m) && m >= 0,
                            "Freudenthal recursion produced a non-integer");
            mult[w] = rat_to_long(m);
        }
        // Drop zeros.
        for (auto it = mult.begin(); it != mult.end();) {
            if (it->second == 0)
                it = mult.erase(it);
            else
                ++it;
        }
    }
};

}  // namespace

std::map<LocalWeight, long> freudenthal_weights(
    const std::vector<LocalWeight>& positive, const LocalWeight& lam,
    const std::vector<std::vector<LocalWeight>>& weyl_orbit_images) {
    FreudenthalTable t;
    t.positive = positive;
    t.lam = lam;
    size_t n = lam.size();
    t.rho.assign(n, Rat(0));
    for (const auto& a : positive)
        for (size_t i = 0; i < n; ++i) t.rho[i] += a[i] / 2;
    // Simple roots: positive roots not expressible as sums of two positives.
    for (const auto& a : positive) {
        bool decomposable = false;
        for (const auto& b : positive)
            for (const auto& c : positive) {
                bool eq = true;
                for (size_t i = 0; i < n; ++i)
                    if (b[i] + c[i] != a[i]) eq = false;
                if (eq) decomposable = true;
            }
        if (!decomposable) t.simple.push_back(a);
    }
    if (t.simple.empty()) {
        // Abelian block: the module is the single weight.
        return {{lam, 1}};
    }
    // Exact height cap: max over the Weyl orbit of height(lam - w(lam)),
    // computed by solving in the simple roots.
    Mat a(n, t.simple.size());
    for (size_t c = 0; c < t.simple.size(); ++c)
        for (size_t r = 0; r < n; ++r) a.at(r, c) = t.simple[c][r];
    auto height_of = [&](const LocalWeight& v) -> std::optional<long> {
        Mat rhs(n, 1);
        for (size_t r = 0; r < n; ++r) rhs.at(r, 0) = v[r];
        auto sol = a.solve(rhs);
        if (!sol) return std::nullopt;
        // Verify.
        for (size_t r = 0; r < n; ++r) {
            Rat s(0);
            for (size_t c = 0; c < t.simple.size(); ++c)
                s += a.at(r, c) * sol->at(c, 0);
            if (s != v[r]) return std::nullopt;
        }
        Rat h(0);
        for (size_t c = 0; c < t.simple.size(); ++c) h += sol->at(c, 0);
        if (!rat_is_integer(h * 2)) return std::nullopt;
        return rat_to_long(Rat(rat_floor(h * 2)));  // 2h to stay integral
    };
    long cap2 = 0;
    for (const auto& img : weyl_orbit_images) {
        LocalWeight diff(n);
        for (size_t i = 0; i < n; ++i) diff[i] = lam[i] - img[0][i];
        auto h = height_of(diff);
        if (h && *h > cap2) cap2 = *h;
    }
    t.run(cap2 / 2 + 2);
    return t.mult;
}

long freudenthal_multiplicity(const std::vector<LocalWeight>& positive,
                              const LocalWeight& lam, const LocalWeight& mu,
                              const std::vector<std::vector<LocalWeight>>& weyl) {
    auto table = freudenthal_weights(positive, lam, weyl);
    auto it = table.find(mu);
    return it == table.end() ? 0 : it->second;
}

long freudenthal_dimension(const std::vector<LocalWeight>& positive,
                           const LocalWeight& lam,
                           const std::vector<std::vector<LocalWeight>>& weyl) {
    long d = 0;
    for (const auto& [w, m] : freudenthal_weights(positive, lam, weyl)) d += m;
    return d;
}

WeightModule simple_window(const LabAlgebraPtr& alg,
                           const std::vector<size_t>& active, const Weight& lam,
                           int depth) {
    WeightModule m = WeightModule::verma(alg, active, lam, depth);
    auto z = m.maximal_trivial_intersection();
    return m.quotient(z);
}

WeightModule simple_window(const LabAlgebraPtr& alg, const Weight& lam, int depth) {
    std::vector<size_t> all(alg->size());
    for (size_t i = 0; i < all.size(); ++i) all[i] = i;
    return simple_window(alg, all, lam, depth);
}

std::vector<std::pair<Weight, long>> verma_composition_oracle(
    const LabAlgebraPtr& alg, const Weight& lam, int depth) {
    WeightModule m = WeightModule::verma(alg, lam, depth);
    // Remaining character to peel, per weight.
    std::map<Weight, long> rem;
    for (size_t wi = 0; wi < m.space_count(); ++wi)
        rem[m.weight(wi)] = static_cast<long>(m.dim(wi));
    // Candidates in order of increasing depth (height below lam).
    std::vector<std::pair<long, Weight>> order;
    for (size_t wi = 0; wi < m.space_count(); ++wi)
        order.emplace_back(rat_to_long(m.depth_of_weight(m.weight(wi))),
                           m.weight(wi));
    std::sort(order.begin(), order.end(),
              [](const auto& a, const auto& b) {
                  if (a.first != b.first) return a.first < b.first;
                  return a.second < b.second;
              });
    std::vector<std::pair<Weight, long>> out;
    for (const auto& [dpt, nu] : order) {
        long mult = rem[nu];
        check_invariant(mult >= 0, "negative multiplicity while peeling");
        if (mult == 0) continue;
        out.emplace_back(nu, mult);
        WeightModule lw = simple_window(alg, nu, depth - static_cast<int>(dpt));
        for (size_t wi = 0; wi < lw.space_count(); ++wi) {
            auto it = rem.find(lw.weight(wi));
            check_invariant(it != rem.end(), "L window exceeds the Verma window");
            it->second -= mult * static_cast<long>(lw.dim(wi));
        }
    }
    for (const auto& [w, r] : rem)
        check_invariant(r == 0, "character peeling left a remainder");
    return out;
}

}  // namespace sw::lab
