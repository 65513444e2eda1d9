#include "ordpart/root_datum.hpp"

#include <algorithm>
#include <deque>
#include <set>

#include "ordpart/errors.hpp"

namespace ordpart {

namespace {

// Canonical positive-root order: by height, then coordinates descending-lex.
struct RootOrder {
    const std::map<Weight, int>& height_of;
    bool operator()(const Weight& a, const Weight& b) const {
        int ha = height_of.at(a), hb = height_of.at(b);
        if (ha != hb) return ha < hb;
        return a > b;  // descending lexicographic
    }
};

std::string strip_spaces(const std::string& s) {
    std::string r;
    for (char c : s)
        if (c != ' ') r += c;
    return r;
}

}  // namespace

int RootDatum::root_index(const Weight& v) const {
    auto it = index_.find(v);
    return it == index_.end() ? -1 : it->second;
}

int RootDatum::positive_index(const Weight& v) const {
    int i = root_index(v);
    return (i >= 0 && i < n_positive) ? i : -1;
}

// Validates invariants, orders the roots canonically and computes flags and
// derived tables. `simple_vals` are the chosen simple roots (as vectors);
// `fund_override` maps a simple root to a preset fundamental weight.
RootDatum finish_datum(int rank, std::string name, std::vector<Weight> in_roots,
                       std::vector<Coweight> in_coroots, std::vector<Weight> simple_vals,
                       const std::map<Weight, Weight>& fund_override,
                       const std::string& override_section) {
    require(rank >= 1, "rank must be positive");
    require(in_roots.size() == in_coroots.size(), "roots and coroots must match in length");
    require(!in_roots.empty(), "root set must be nonempty");
    for (const auto& r : in_roots) require(static_cast<int>(r.size()) == rank, "root has wrong length");
    for (const auto& c : in_coroots) require(static_cast<int>(c.size()) == rank, "coroot has wrong length");

    std::map<Weight, Coweight> coroot_of;
    for (std::size_t i = 0; i < in_roots.size(); ++i) {
        require(!is_zero(in_roots[i]), "zero vector is not a root");
        require(pairing(in_roots[i], in_coroots[i]) == 2,
                "invariant violated: pairing(alpha, alpha_v) != 2");
        auto [it, fresh] = coroot_of.emplace(in_roots[i], in_coroots[i]);
        require(fresh, "duplicate root");
        (void)it;
    }

    require(!simple_vals.empty(), "at least one simple root required");
    for (const auto& s : simple_vals)
        require(coroot_of.count(s) == 1, "simple root not in root set");

    // Express every root over the simple basis; all-nonnegative = positive.
    Mat simple_mat_t(rank, static_cast<int>(simple_vals.size()));
    for (int j = 0; j < static_cast<int>(simple_vals.size()); ++j)
        for (int i = 0; i < rank; ++i) simple_mat_t(i, j) = simple_vals[j][i];

    std::map<Weight, Vec> coords_of;
    std::map<Weight, int> height_of;
    std::vector<Weight> positives;
    for (const auto& [root, cr] : coroot_of) {
        (void)cr;
        auto sol = solve_integer(simple_mat_t, root);
        require(sol.has_value(),
                "invariant violated: root is not an integer combination of simple roots");
        bool nonneg = true, nonpos = true;
        int h = 0;
        for (Coord c : *sol) {
            nonneg &= (c >= 0);
            nonpos &= (c <= 0);
            h += static_cast<int>(c);
        }
        require(nonneg || nonpos, "invariant violated: root has mixed sign over simple roots");
        if (nonneg) {
            coords_of[root] = *sol;
            height_of[root] = h;
            positives.push_back(root);
        }
    }
    require(2 * positives.size() == coroot_of.size(),
            "invariant violated: roots do not split into positives and negatives");
    for (const auto& pos : positives)
        require(coroot_of.count(vec_neg(pos)) == 1, "invariant violated: missing negative root");

    std::sort(positives.begin(), positives.end(), RootOrder{height_of});

    RootDatum d;
    d.rank = rank;
    d.name = std::move(name);
    d.n_positive = static_cast<int>(positives.size());
    for (const auto& r : positives) {
        d.roots.push_back(r);
        d.coroots.push_back(coroot_of.at(r));
        d.heights.push_back(height_of.at(r));
        d.simple_coords.push_back(coords_of.at(r));
    }
    for (int i = 0; i < d.n_positive; ++i) {
        d.roots.push_back(vec_neg(d.roots[i]));
        d.coroots.push_back(coroot_of.at(d.roots.back()));
        require(d.coroots.back() == vec_neg(d.coroots[i]),
                "invariant violated: coroot of -alpha is not -coroot of alpha");
    }
    for (std::size_t i = 0; i < d.roots.size(); ++i) d.index_[d.roots[i]] = static_cast<int>(i);

    for (const auto& s : simple_vals) {
        int idx = d.positive_index(s);
        require(idx >= 0 && d.heights[idx] == 1, "simple root must be positive of height 1");
    }
    // Simple order follows the canonical positive order.
    for (int i = 0; i < d.n_positive && d.heights[i] == 1; ++i) {
        require(std::find(simple_vals.begin(), simple_vals.end(), d.roots[i]) != simple_vals.end(),
                "height-1 positive root missing from the simple set");
        d.simple.push_back(i);
    }
    require(d.simple.size() == simple_vals.size(), "simple set does not match height-1 roots");

    // Reflections permute the root set, equivariantly on coroots.
    for (int s = 0; s < static_cast<int>(d.roots.size()); ++s) {
        for (std::size_t j = 0; j < d.roots.size(); ++j) {
            Weight img = vec_sub(d.roots[j], vec_scale(d.roots[s], pairing(d.roots[j], d.coroots[s])));
            int k = d.root_index(img);
            require(k >= 0, "invariant violated: reflection does not preserve the root set");
            Coweight cimg =
                vec_sub(d.coroots[j], vec_scale(d.coroots[s], pairing(d.roots[s], d.coroots[j])));
            require(d.coroots[k] == cimg,
                    "invariant violated: root/coroot matching is not reflection-equivariant");
        }
    }

    // Pairwise sums of positive roots (closure table).
    d.root_sum.assign(d.n_positive, std::vector<int>(d.n_positive, -1));
    for (int i = 0; i < d.n_positive; ++i)
        for (int j = 0; j < d.n_positive; ++j)
            d.root_sum[i][j] = d.positive_index(vec_add(d.roots[i], d.roots[j]));

    // Flags.
    std::vector<Vec> simple_rows, coroot_rows;
    for (int s : d.simple) {
        simple_rows.push_back(d.roots[s]);
        coroot_rows.push_back(d.coroots[s]);
    }
    d.connected_centre = rows_span_direct_summand(mat_from_rows(simple_rows));
    d.simply_connected_derived = rows_span_direct_summand(mat_from_rows(coroot_rows));

    if (d.simply_connected_derived) {
        std::vector<Weight> fw;
        bool overridden = true;
        for (int s : d.simple) {
            auto it = fund_override.find(d.roots[s]);
            if (it == fund_override.end()) {
                overridden = false;
                break;
            }
            fw.push_back(it->second);
        }
        if (!overridden) {
            fw.clear();
            // Solve <x, beta_v> = delta for each simple; pick the canonical
            // section: Babai-reduce along X^0, then prefer the all-nonnegative
            // representative with smallest coordinate sum (searched over a
            // small box when X^0 has rank <= 2).
            Mat A(static_cast<int>(d.simple.size()), rank);
            for (int i = 0; i < A.rows; ++i)
                for (int j = 0; j < rank; ++j) A(i, j) = d.coroots[d.simple[i]][j];
            std::vector<Vec> kernel = integer_kernel(A);
            for (int i = 0; i < A.rows; ++i) {
                Vec e(A.rows, 0);
                e[i] = 1;
                auto sol = solve_integer(A, e);
                ensure(sol.has_value(), "fundamental weight solve failed despite flag");
                Vec x = *sol;
                for (const Vec& k : kernel) {
                    Coord kk = dot(k, k);
                    if (kk == 0) continue;
                    Coord q = (2 * dot(x, k) + (dot(x, k) >= 0 ? kk : -kk)) / (2 * kk);
                    x = vec_sub(x, vec_scale(k, q));
                }
                if (kernel.size() <= 2 && !kernel.empty()) {
                    Vec best = x;
                    auto score = [](const Vec& v) {
                        bool nonneg = true;
                        Coord sum = 0;
                        for (Coord c : v) {
                            nonneg &= (c >= 0);
                            sum += (c < 0 ? -c : c);
                        }
                        return std::pair<int, Coord>(nonneg ? 0 : 1, sum);
                    };
                    const Coord B = 4;
                    std::vector<Coord> coef(kernel.size(), -B);
                    while (true) {
                        Vec cand = x;
                        for (std::size_t t = 0; t < kernel.size(); ++t)
                            cand = vec_add(cand, vec_scale(kernel[t], coef[t]));
                        if (score(cand) < score(best) || (score(cand) == score(best) && cand < best))
                            best = cand;
                        std::size_t t = 0;
                        while (t < coef.size() && coef[t] == B) coef[t++] = -B;
                        if (t == coef.size()) break;
                        ++coef[t];
                    }
                    x = best;
                }
                fw.push_back(x);
            }
            d.fundamental_section = "minimal-nonnegative";
        } else {
            d.fundamental_section = override_section;
        }
        for (std::size_t i = 0; i < fw.size(); ++i)
            for (std::size_t j = 0; j < d.simple.size(); ++j)
                ensure(pairing(fw[i], d.coroots[d.simple[j]]) == (i == j ? 1 : 0),
                       "fundamental weight pairing check failed");
        d.fundamental = std::move(fw);
    }
    return d;
}

namespace {

Vec unit(int n, int i, Coord v = 1) {
    Vec e(n, 0);
    e[i] = v;
    return e;
}

RootDatum build_gl(int n) {
    require(n >= 2, "GL(n) requires n >= 2");
    std::vector<Weight> roots;
    std::vector<Coweight> coroots;
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            if (i == j) continue;
            Vec v = unit(n, i);
            v[j] = -1;
            roots.push_back(v);
            coroots.push_back(v);
        }
    std::vector<Weight> simple;
    std::map<Weight, Weight> fund;
    for (int i = 0; i + 1 < n; ++i) {
        Vec a = unit(n, i);
        a[i + 1] = -1;
        simple.push_back(a);
        Vec lam(n, 0);
        for (int k = 0; k <= i; ++k) lam[k] = 1;
        fund[a] = lam;
    }
    return finish_datum(n, "GL(" + std::to_string(n) + ")", roots, coroots, simple, fund,
                        "preset-override");
}

RootDatum build_gsp(int two_n) {
    require(two_n >= 4 && two_n % 2 == 0, "GSp(2n) requires even 2n >= 4");
    int n = two_n / 2;
    int rank = n + 1;  // e_1..e_n, e
    std::vector<Weight> roots;
    std::vector<Coweight> coroots;
    auto add_pair = [&](const Weight& r, const Coweight& c) {
        roots.push_back(r);
        coroots.push_back(c);
        roots.push_back(vec_neg(r));
        coroots.push_back(vec_neg(c));
    };
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) {
            Vec r = unit(rank, i);
            r[j] = -1;
            Vec c = unit(rank, i);
            c[j] = -1;
            add_pair(r, c);  // e_i - e_j
            Vec r2 = unit(rank, i);
            r2[j] = 1;
            r2[n] = -1;
            Vec c2 = unit(rank, i);
            c2[j] = 1;
            add_pair(r2, c2);  // e_i + e_j - e
        }
    for (int i = 0; i < n; ++i) {
        Vec r = unit(rank, i, 2);
        r[n] = -1;
        add_pair(r, unit(rank, i));  // 2 e_i - e, coroot e_i_v
    }
    std::vector<Weight> simple;
    std::map<Weight, Weight> fund;
    for (int i = 0; i + 1 < n; ++i) {
        Vec a = unit(rank, i);
        a[i + 1] = -1;
        simple.push_back(a);
        Vec lam(rank, 0);
        for (int k = 0; k <= i; ++k) lam[k] = 1;
        fund[a] = lam;
    }
    Vec last = unit(rank, n - 1, 2);
    last[n] = -1;
    simple.push_back(last);
    Vec lam(rank, 0);
    for (int k = 0; k < n; ++k) lam[k] = 1;
    fund[last] = lam;
    return finish_datum(rank, "GSp(" + std::to_string(two_n) + ")", roots, coroots, simple, fund,
                        "preset-override");
}

// Pairing matrix P[i][j] = <alpha_i, alpha_j_v> for the simple types.
std::vector<Vec> cartan_pairings(char type, int n) {
    auto off = [&](std::vector<Vec>& p, int i, int j, Coord v) { p[i][j] = v; };
    std::vector<Vec> P(n, Vec(n, 0));
    for (int i = 0; i < n; ++i) P[i][i] = 2;
    switch (type) {
        case 'A':
            for (int i = 0; i + 1 < n; ++i) {
                off(P, i, i + 1, -1);
                off(P, i + 1, i, -1);
            }
            break;
        case 'B':  // alpha_n short: <alpha_{n-1}, alpha_n_v> = -2
            require(n >= 2, "B(n) requires n >= 2");
            for (int i = 0; i + 1 < n; ++i) {
                off(P, i, i + 1, -1);
                off(P, i + 1, i, -1);
            }
            P[n - 2][n - 1] = -2;
            break;
        case 'C':  // alpha_n long
            require(n >= 2, "C(n) requires n >= 2");
            for (int i = 0; i + 1 < n; ++i) {
                off(P, i, i + 1, -1);
                off(P, i + 1, i, -1);
            }
            P[n - 1][n - 2] = -2;
            break;
        case 'D':
            require(n >= 3, "D(n) requires n >= 3");
            for (int i = 0; i + 2 < n; ++i) {
                off(P, i, i + 1, -1);
                off(P, i + 1, i, -1);
            }
            off(P, n - 3, n - 1, -1);
            off(P, n - 1, n - 3, -1);
            break;
        case 'G':  // G2, alpha_1 short
            P = {{2, -1}, {-3, 2}};
            break;
        case 'F': {
            P = {{2, -1, 0, 0}, {-1, 2, -2, 0}, {0, -1, 2, -1}, {0, 0, -1, 2}};
            break;
        }
        default:
            require(false, "unknown simple type");
    }
    return P;
}

// Simply connected cover of a simple type, extended by a central Gm. The
// lattice is Z^n (+) Z in the fundamental-weight basis: simple root i has
// coordinates (P[i][*], 0) and simple coroot i is the basis vector e_i.
RootDatum build_sc_cover(char type, int n, const std::string& name) {
    std::vector<Vec> P = cartan_pairings(type, n);
    int rank = n + 1;
    struct Pair {
        Weight r;
        Coweight c;
    };
    std::vector<Pair> all;
    std::set<Weight> seen;
    std::deque<Pair> queue;
    std::vector<Weight> simple_roots;
    for (int i = 0; i < n; ++i) {
        Vec r(rank, 0);
        for (int j = 0; j < n; ++j) r[j] = P[i][j];
        Vec c = unit(rank, i);
        simple_roots.push_back(r);
        queue.push_back({r, c});
        seen.insert(r);
    }
    while (!queue.empty()) {
        Pair cur = queue.front();
        queue.pop_front();
        all.push_back(cur);
        for (int i = 0; i < n; ++i) {
            // s_i(x) = x - <x, e_i> alpha_i ; s_i(c) = c - <alpha_i, c> e_i
            Coord k = cur.r[i];
            Weight r = cur.r;
            for (int j = 0; j < n; ++j) r[j] -= k * P[i][j];
            Coord kc = 0;
            for (int j = 0; j < n; ++j) kc += P[i][j] * cur.c[j];
            Coweight c = cur.c;
            c[i] -= kc;
            if (seen.insert(r).second) queue.push_back({r, c});
        }
    }
    std::vector<Weight> roots;
    std::vector<Coweight> coroots;
    for (const auto& p : all) {
        roots.push_back(p.r);
        coroots.push_back(p.c);
    }
    std::map<Weight, Weight> fund;
    for (int i = 0; i < n; ++i) fund[simple_roots[i]] = unit(rank, i);
    return finish_datum(rank, name, roots, coroots, simple_roots, fund, "preset-override");
}

}  // namespace

RootDatum build_root_datum(const std::string& preset_raw) {
    std::string preset = strip_spaces(preset_raw);
    auto parse_arg = [&](std::size_t open) -> int {
        std::size_t close = preset.find(')', open);
        require(close != std::string::npos && close == preset.size() - 1, "malformed preset");
        int v = 0;
        for (std::size_t i = open + 1; i < close; ++i) {
            require(preset[i] >= '0' && preset[i] <= '9', "malformed preset size");
            v = v * 10 + (preset[i] - '0');
        }
        return v;
    };
    if (preset.rfind("GL(", 0) == 0) return build_gl(parse_arg(2));
    if (preset.rfind("GSp(", 0) == 0) return build_gsp(parse_arg(3));
    if (preset == "G2") return build_sc_cover('G', 2, "G2");
    if (preset == "F4") return build_sc_cover('F', 4, "F4");
    if (preset.size() > 2 && preset[1] == '(' &&
        (preset[0] == 'A' || preset[0] == 'B' || preset[0] == 'C' || preset[0] == 'D')) {
        int n = parse_arg(1);
        require(n >= 1, "preset size must be positive");
        return build_sc_cover(preset[0], n, preset.substr(0, 1) + "(" + std::to_string(n) + ")");
    }
    require(false, "unknown preset: " + preset_raw);
    return {};
}

RootDatum build_root_datum(int rank, const std::vector<Weight>& roots,
                           const std::vector<Coweight>& coroots,
                           const std::vector<int>& simple_indices, const std::string& name) {
    std::vector<Weight> simple_vals;
    for (int i : simple_indices) {
        require(i >= 0 && i < static_cast<int>(roots.size()), "simple index out of range");
        simple_vals.push_back(roots[i]);
    }
    return finish_datum(rank, name, roots, coroots, simple_vals, {}, "none");
}

Weight reflect(const RootDatum& d, int root_idx, const Weight& x) {
    require(root_idx >= 0 && root_idx < static_cast<int>(d.roots.size()), "root index out of range");
    return vec_sub(x, vec_scale(d.roots[root_idx], pairing(x, d.coroots[root_idx])));
}

Coweight reflect_coweight(const RootDatum& d, int root_idx, const Coweight& c) {
    require(root_idx >= 0 && root_idx < static_cast<int>(d.roots.size()), "root index out of range");
    return vec_sub(c, vec_scale(d.coroots[root_idx], pairing(d.roots[root_idx], c)));
}

namespace {

// Matrices of the simple reflection s on weights and coweights.
std::pair<Mat, Mat> simple_reflection_mats(const RootDatum& d, int s) {
    int idx = d.simple[s];
    Mat w(d.rank, d.rank), c(d.rank, d.rank);
    for (int j = 0; j < d.rank; ++j) {
        Vec e(d.rank, 0);
        e[j] = 1;
        Vec wi = reflect(d, idx, e);
        Vec ci = reflect_coweight(d, idx, e);
        for (int i = 0; i < d.rank; ++i) {
            w(i, j) = wi[i];
            c(i, j) = ci[i];
        }
    }
    return {w, c};
}

}  // namespace

WeylElement weyl_identity(const RootDatum& d) {
    return {Mat::identity(d.rank), Mat::identity(d.rank), {}};
}

WeylElement weyl_from_word(const RootDatum& d, const std::vector<int>& word) {
    WeylElement w = weyl_identity(d);
    for (int s : word) {
        require(s >= 0 && s < d.simple_count(), "word letter out of range");
        auto [mw, mc] = simple_reflection_mats(d, s);
        w.on_weights = mat_mul(w.on_weights, mw);
        w.on_coweights = mat_mul(w.on_coweights, mc);
        w.word.push_back(s);
    }
    return w;
}

WeylElement weyl_compose(const WeylElement& x, const WeylElement& y) {
    WeylElement r;
    r.on_weights = mat_mul(x.on_weights, y.on_weights);
    r.on_coweights = mat_mul(x.on_coweights, y.on_coweights);
    r.word = x.word;
    r.word.insert(r.word.end(), y.word.begin(), y.word.end());
    return r;
}

WeylElement weyl_inverse(const WeylElement& w) {
    WeylElement r;
    r.on_weights = mat_transpose(w.on_coweights);
    r.on_coweights = mat_transpose(w.on_weights);
    r.word.assign(w.word.rbegin(), w.word.rend());
    return r;
}

Weight weyl_apply(const WeylElement& w, const Weight& x) { return mat_apply(w.on_weights, x); }

Coweight weyl_apply_coweight(const WeylElement& w, const Coweight& c) {
    return mat_apply(w.on_coweights, c);
}

WeylGroup enumerate_weyl_group(const RootDatum& d, const Budgets& budgets) {
    int ns = d.simple_count();
    std::vector<std::pair<Mat, Mat>> gens;
    for (int s = 0; s < ns; ++s) gens.push_back(simple_reflection_mats(d, s));

    WeylGroup g;
    std::map<std::vector<Coord>, int> seen;
    g.elements.push_back(weyl_identity(d));
    seen[g.elements[0].on_weights.a] = 0;
    std::size_t frontier_begin = 0;
    while (frontier_begin < g.elements.size()) {
        std::size_t frontier_end = g.elements.size();
        for (std::size_t i = frontier_begin; i < frontier_end; ++i) {
            for (int s = 0; s < ns; ++s) {
                // Current elements are visited in lexicographic word order, so
                // first discovery assigns the lex-smallest reduced word.
                WeylElement cand;
                cand.on_weights = mat_mul(g.elements[i].on_weights, gens[s].first);
                if (seen.count(cand.on_weights.a)) continue;
                cand.on_coweights = mat_mul(g.elements[i].on_coweights, gens[s].second);
                cand.word = g.elements[i].word;
                cand.word.push_back(s);
                seen[cand.on_weights.a] = static_cast<int>(g.elements.size());
                check_budget(static_cast<std::int64_t>(g.elements.size()) <
                                 budgets.weyl_bound,
                             "Weyl group enumeration exceeds weyl_bound");
                g.elements.push_back(std::move(cand));
            }
        }
        frontier_begin = frontier_end;
    }
    for (std::size_t i = 0; i < g.elements.size(); ++i) {
        bool all_neg = true;
        for (int s : d.simple) {
            Weight img = weyl_apply(g.elements[i], d.roots[s]);
            int idx = d.root_index(img);
            ensure(idx >= 0, "Weyl element does not preserve the root set");
            if (idx < d.n_positive) {
                all_neg = false;
                break;
            }
        }
        if (all_neg) {
            g.longest = static_cast<int>(i);
            break;
        }
    }
    ensure(g.longest >= 0, "longest element not found");
    return g;
}

bool is_dominant(const RootDatum& d, const Weight& x) {
    for (int s : d.simple)
        if (pairing(x, d.coroots[s]) < 0) return false;
    return true;
}

bool dominance_leq(const RootDatum& d, const Weight& lo, const Weight& hi) {
    Vec diff = vec_sub(hi, lo);
    if (is_zero(diff)) return true;
    Mat A(d.rank, d.simple_count());
    for (int j = 0; j < d.simple_count(); ++j)
        for (int i = 0; i < d.rank; ++i) A(i, j) = d.roots[d.simple[j]][i];
    auto sol = solve_integer(A, diff);
    if (!sol) return false;
    for (Coord c : *sol)
        if (c < 0) return false;
    return true;
}

std::pair<Weight, WeylElement> dominantize(const RootDatum& d, const Weight& x) {
    Weight cur = x;
    std::vector<int> word;
    bool moved = true;
    while (moved) {
        moved = false;
        for (int s = 0; s < d.simple_count(); ++s) {
            if (pairing(cur, d.coroots[d.simple[s]]) < 0) {
                cur = reflect(d, d.simple[s], cur);
                word.insert(word.begin(), s);  // w := s_i . w
                moved = true;
                break;
            }
        }
    }
    return {cur, weyl_from_word(d, word)};
}

int root_height(const RootDatum& d, int positive_idx) {
    require(positive_idx >= 0 && positive_idx < d.n_positive, "height is defined on positive roots");
    return d.heights[positive_idx];
}

int coxeter_h(const RootDatum& d) {
    int m = 0;
    for (int h : d.heights) m = std::max(m, h);
    return 1 + m;
}

Weight two_rho(const RootDatum& d) {
    Vec r(d.rank, 0);
    for (int i = 0; i < d.n_positive; ++i) r = vec_add(r, d.roots[i]);
    return r;
}

WeylElement longest_element(const RootDatum& d) {
    // w0 is the unique w with w(2rho) antidominant; peel reflections greedily.
    Weight cur = two_rho(d);
    std::vector<int> word;
    bool moved = true;
    while (moved) {
        moved = false;
        for (int s = 0; s < d.simple_count(); ++s) {
            if (pairing(cur, d.coroots[d.simple[s]]) > 0) {
                cur = reflect(d, d.simple[s], cur);
                word.insert(word.begin(), s);
                moved = true;
                break;
            }
        }
    }
    return weyl_from_word(d, word);
}

const std::vector<Weight>& fundamental_weights(const RootDatum& d) {
    require(d.fundamental.has_value(), "derived group not simply connected: no fundamental weights");
    return *d.fundamental;
}

Weight twisting_element(const RootDatum& d) {
    const auto& fw = fundamental_weights(d);
    Vec t(d.rank, 0);
    for (const auto& lam : fw) t = vec_add(t, lam);
    return t;
}

Weight dual_twist_lambda0(const RootDatum& d) {
    const auto& fw = fundamental_weights(d);
    WeylElement w0 = longest_element(d);
    Vec out(d.rank, 0);
    for (int s = 0; s < d.simple_count(); ++s) {
        Weight m = vec_neg(weyl_apply(w0, d.roots[d.simple[s]]));
        int target = -1;
        for (int t = 0; t < d.simple_count(); ++t)
            if (d.roots[d.simple[t]] == m) target = t;
        ensure(target >= 0, "-w0 does not permute the simple roots");
        out = vec_add(out, vec_sub(vec_neg(weyl_apply(w0, fw[s])), fw[target]));
    }
    for (int i = 0; i < d.n_positive; ++i)
        ensure(pairing(out, d.coroots[i]) == 0, "lambda_0 must lie in X^0(T)");
    return out;
}

bool is_good_prime(const RootDatum& d, Coord p) {
    const auto& fw = fundamental_weights(d);
    for (const auto& lam : fw)
        for (int i = 0; i < d.n_positive; ++i)
            if (pairing(lam, d.coroots[i]) >= p) return false;
    return true;
}

RootDatum dualize(const RootDatum& d) {
    std::string name = d.name;
    const std::string suffix = "^";
    if (name.size() > 1 && name.back() == '^')
        name.pop_back();
    else
        name += suffix;
    std::vector<Weight> roots(d.coroots.begin(), d.coroots.end());
    std::vector<Coweight> coroots(d.roots.begin(), d.roots.end());
    std::vector<int> simple_idx(d.simple.begin(), d.simple.end());
    return build_root_datum(d.rank, roots, coroots, simple_idx, name);
}

}  // namespace ordpart
