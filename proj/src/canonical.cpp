#include "monad/zoo.hpp"

#include <map>
#include <stdexcept>

namespace monad {

namespace {

template <class K>
Mat<K> lin_vec(const Form<K>& f) {
    Mat<K> v(f.field(), 4, 1);
    if (f.degree() != 1) {
        if (!f.is_zero()) throw std::invalid_argument("expected a linear form");
        return v;
    }
    for (std::size_t i = 0; i < 4; ++i) v(i, 0) = f.coeff(i);
    return v;
}

template <class K>
Form<K> lin_form(const K& k, const Mat<K>& v, std::size_t col = 0) {
    Form<K> f(k, 4, 1);
    for (std::size_t i = 0; i < 4; ++i) f.coeff(i) = v(i, col);
    return f;
}

template <class K>
Mat<K> columns(const std::vector<Mat<K>>& vs) {
    Mat<K> out = vs.at(0);
    for (std::size_t i = 1; i < vs.size(); ++i) out = out.hcat(vs[i]);
    return out;
}

template <class K>
FormMatrix<K> const_map(const K& k, const Mat<K>& g, const TwistList& tw) {
    FormMatrix<K> f(k, 4, tw, tw);
    for (std::size_t i = 0; i < g.rows(); ++i)
        for (std::size_t j = 0; j < g.cols(); ++j)
            if (!k.is_zero(g(i, j))) f.set(i, j, Form<K>::constant(k, 4, g(i, j)));
    return f;
}

/* coordinates of a linear form in the basis h (columns of hb) */
template <class K>
Mat<K> in_basis(const Mat<K>& hb, const Form<K>& f) {
    auto x = solve(hb, lin_vec(f));
    if (!x) throw std::logic_error("h_0..h_3 is not a basis");
    return *x;
}

/* pairs (a,b), a <= b, in a fixed order */
std::vector<std::pair<int, int>> quad_pairs() {
    std::vector<std::pair<int, int>> p;
    for (int a = 0; a < 4; ++a)
        for (int b = a; b < 4; ++b) p.push_back({a, b});
    return p;
}

/* coordinates of a quadric in the basis h_a h_b */
template <class K>
Mat<K> in_products(const std::vector<Form<K>>& h, const Form<K>& q) {
    const K& k = q.field();
    auto pairs = quad_pairs();
    Mat<K> B(k, 10, 10), v(k, 10, 1);
    for (std::size_t c = 0; c < pairs.size(); ++c) {
        auto pr = h[pairs[c].first] * h[pairs[c].second];
        for (std::size_t i = 0; i < 10; ++i) B(i, c) = pr.coeff(i);
    }
    if (q.degree() == 2)
        for (std::size_t i = 0; i < 10; ++i) v(i, 0) = q.coeff(i);
    auto x = solve(B, v);
    if (!x) throw std::logic_error("h_0..h_3 is not a basis");
    return *x;
}

/* first standard vectors completing the given columns to a basis */
template <class K>
std::vector<Mat<K>> complete_basis(const K& k, std::vector<Mat<K>> have) {
    for (std::size_t i = 0; i < 4 && have.size() < 4; ++i) {
        Mat<K> e(k, 4, 1);
        e(i, 0) = k.one();
        auto trial = have;
        trial.push_back(e);
        if (rank(columns(trial)) == trial.size()) have = trial;
    }
    return have;
}

template <class K>
bool in_span(const std::vector<Form<K>>& gens, const Form<K>& f) {
    if (f.is_zero()) return true;
    std::vector<Mat<K>> cols;
    for (const auto& g : gens) cols.push_back(lin_vec(g));
    auto A = columns(cols);
    return rank(A.hcat(lin_vec(f))) == rank(A);
}

/* the first row of beta applied to a vector of H^0(src) */
template <class K>
Form<K> row_image(const Mat<K>& top, const Mat<K>& x) {
    return lin_form(x.field(), top * x);
}

template <class K>
CanonicalBeta<K> finish(CanonicalBeta<K> out, const FormMatrix<K>& beta, const FormMatrix<K>& G,
                        const FormMatrix<K>& F, BetaShape shape) {
    auto can = G.after(beta).after(F);
    out.beta = can;
    out.left_inv = invert_automorphism(G);
    out.right_inv = invert_automorphism(F);
    if (!(out.left_inv->after(can).after(*out.right_inv) == beta)) {
        out.failure = "recorded automorphisms do not reproduce the input";
        return out;
    }
    std::string why;
    if (!check_canonical_pattern(can, shape, &out.degenerate, &why)) {
        out.failure = "result misses the pattern: " + why;
        return out;
    }
    out.h.clear();
    std::size_t c0 = shape == BetaShape::C30 ? 1 : 2;
    for (std::size_t j = 0; j < 4; ++j) out.h.push_back(can.at(1, c0 + j));
    out.ok = true;
    return out;
}

template <class K>
CanonicalBeta<K> canon_c30(const FormMatrix<K>& beta, std::uint64_t seed, int budget) {
    const K& k = beta.field();
    CanonicalBeta<K> out;
    if (beta.src() != TwistList(9, 0) || beta.tgt() != TwistList{1, 1, 1})
        throw std::invalid_argument("c30 shape is 9O -> 3O(1)");
    Mat<K> H0 = beta.h0_map(0);
    if (rank(H0) != 9) {
        out.failure = "H^0(beta) is not injective";
        return out;
    }
    Rng root(seed);
    std::optional<Mat<K>> g;
    for (int t = 1; t <= budget && !g; ++t) {
        out.ksi_tries = t;
        Rng rng = root.fork(static_cast<std::uint64_t>(t));
        Mat<K> v(k, 3, 1);
        for (std::size_t i = 0; i < 3; ++i) v(i, 0) = k.random(rng);
        if (v.is_zero()) continue;
        /* S_1 xi inside coker H^0(beta) = H^1(E) */
        Mat<K> s1(k, 12, 4);
        for (std::size_t i = 0; i < 3; ++i)
            for (std::size_t j = 0; j < 4; ++j) s1(4 * i + j, j) = v(i, 0);
        if (rank(H0.hcat(s1)) != 12) continue;
        std::vector<Mat<K>> cols{v};
        for (std::size_t i = 0; i < 3 && cols.size() < 3; ++i) {
            Mat<K> e(k, 3, 1);
            e(i, 0) = k.one();
            auto trial = cols;
            trial.push_back(e);
            if (rank(columns(trial)) == trial.size()) cols = trial;
        }
        g = inverse(columns(cols));
    }
    if (!g) {
        out.failure = "no xi with S_1 xi = H^1(E) in " + std::to_string(budget) + " trials";
        return out;
    }
    Mat<K> gm = *g;
    for (int attempt = 0; attempt < 2; ++attempt) {
        auto b1 = const_map(k, gm, beta.tgt()).after(beta);
        Mat<K> H1 = b1.h0_map(0);
        Mat<K> top = H1.rows_range(0, 4), R = H1.rows_range(4, 12);
        Mat<K> ker = kernel_basis(R);
        if (ker.cols() != 1) {
            out.failure = "H^0 of the last two rows is not onto";
            return out;
        }
        auto h0 = row_image(top, ker);
        if (h0.is_zero()) {
            out.failure = "H^0(beta) is not injective";
            return out;
        }
        auto pre = [&](int r, const Mat<K>& h) {
            Mat<K> rhs(k, 8, 1);
            for (std::size_t i = 0; i < 4; ++i) rhs(4 * (r - 1) + i, 0) = h(i, 0);
            auto x = solve(R, rhs);
            if (!x) throw std::logic_error("H^0 of the last two rows is not onto");
            return *x;
        };
        auto h1 = row_image(top, pre(1, lin_vec(h0)));
        if (rank(lin_vec(h0).hcat(lin_vec(h1))) < 2) {
            if (attempt == 0) {
                /* swap the last two target summands and retry */
                Mat<K> sw(k, 3, 3);
                sw(0, 0) = sw(1, 2) = sw(2, 1) = k.one();
                gm = sw * gm;
                continue;
            }
            out.failure = "h_1' and h_5' both lie in k h_0: h^0(E_H) > 2 on the plane h_0 = 0";
            return out;
        }
        auto hb = complete_basis(k, {lin_vec(h0), lin_vec(h1)});
        std::vector<Mat<K>> fcols{ker};
        for (int r = 1; r <= 2; ++r)
            for (int j = 0; j < 4; ++j) fcols.push_back(pre(r, hb[j]));
        Mat<K> f = columns(fcols);
        auto b2 = b1.after(const_map(k, f, beta.src()));
        Mat<K> hm = columns(hb);
        /* row operations: h_2', h_6' free of h_1 */
        Mat<K> rop = Mat<K>::identity(k, 3);
        rop(0, 1) = k.neg(in_basis(hm, b2.at(0, 2))(1, 0));
        rop(0, 2) = k.neg(in_basis(hm, b2.at(0, 6))(1, 0));
        gm = rop * gm;
        auto b3 = const_map(k, rop, beta.tgt()).after(b2);
        /* column operations with the first column: clear h_0 */
        Mat<K> cop = Mat<K>::identity(k, 9);
        for (std::size_t j = 1; j < 9; ++j) cop(0, j) = k.neg(in_basis(hm, b3.at(0, j))(0, 0));
        f = f * cop;
        return finish(out, beta, const_map(k, gm, beta.tgt()), const_map(k, f, beta.src()), BetaShape::C30);
    }
    return out;
}

template <class K>
CanonicalBeta<K> canon_c32(const FormMatrix<K>& beta, std::uint64_t seed, int budget) {
    const K& k = beta.field();
    CanonicalBeta<K> out;
    TwistList src{0, 0, 0, 0, 0, 0, -1};
    if (beta.src() != src || beta.tgt() != TwistList{1, 1})
        throw std::invalid_argument("c32 shape is 6O + O(-1) -> 2O(1)");
    Rng root(seed);
    std::optional<Mat<K>> g;
    for (int t = 1; t <= budget && !g; ++t) {
        out.ksi_tries = t;
        Rng rng = root.fork(static_cast<std::uint64_t>(t));
        auto a0 = k.random(rng), a1 = k.random(rng);
        if (k.is_zero(a0) && k.is_zero(a1)) continue;
        Mat<K> gm(k, 2, 2);
        gm(1, 0) = a0;
        gm(1, 1) = a1;
        if (k.is_zero(a1)) gm(0, 1) = k.one();
        else gm(0, 0) = k.one();
        auto b1 = const_map(k, gm, beta.tgt()).after(beta);
        if (rank(b1.h0_map(0).rows_range(4, 8)) == 4) g = gm;
    }
    if (!g) {
        out.failure = "no projection making the second row onto in " + std::to_string(budget) + " trials";
        return out;
    }
    auto G = const_map(k, *g, beta.tgt());
    auto b1 = G.after(beta);
    Mat<K> H1 = b1.h0_map(0);
    Mat<K> top = H1.rows_range(0, 4), R = H1.rows_range(4, 8);
    Mat<K> ker = kernel_basis(R);
    auto h0 = row_image(top, ker.col(0)), h1 = row_image(top, ker.col(1));
    if (rank(lin_vec(h0).hcat(lin_vec(h1))) < 2) {
        out.failure = "H^0(beta) is not injective";
        return out;
    }
    auto hb = complete_basis(k, {lin_vec(h0), lin_vec(h1)});
    Mat<K> hm = columns(hb);
    std::vector<Form<K>> h;
    for (auto& v : hb) h.push_back(lin_form(k, v));
    std::vector<Mat<K>> fcols{ker.col(0), ker.col(1)};
    for (int j = 0; j < 4; ++j) {
        auto x = solve(R, hb[j]);
        if (!x) throw std::logic_error("second row is not onto");
        fcols.push_back(*x);
    }
    Mat<K> f6 = columns(fcols);
    FormMatrix<K> Fa(k, 4, src, src);
    for (std::size_t i = 0; i < 6; ++i)
        for (std::size_t j = 0; j < 6; ++j)
            if (!k.is_zero(f6(i, j))) Fa.set(i, j, Form<K>::constant(k, 4, f6(i, j)));
    Fa.set(6, 6, Form<K>::constant(k, 4, k.one()));
    auto b2 = b1.after(Fa);
    /* clear the quadric under the second row: q2 = sum l_j h_j */
    auto pairs = quad_pairs();
    auto split = [&](const Form<K>& q) {
        auto c = in_products(h, q);
        std::vector<Form<K>> l(4, Form<K>(k, 4, 1));
        for (std::size_t p = 0; p < pairs.size(); ++p)
            l[pairs[p].first] = l[pairs[p].first] + h[pairs[p].second].scaled(c(p, 0));
        return l;
    };
    auto Fb = identity_map(k, 4, src);
    auto l = split(b2.at(1, 6));
    for (std::size_t j = 0; j < 4; ++j) Fb.set(2 + j, 6, -l[j]);
    auto b3 = b2.after(Fb);
    /* columns 3..6 modulo the first two, then the quadric */
    auto Fc = identity_map(k, 4, src);
    for (std::size_t c = 2; c < 6; ++c) {
        auto x = in_basis(hm, b3.at(0, c));
        Fc.set(0, c, Form<K>::constant(k, 4, k.neg(x(0, 0))));
        Fc.set(1, c, Form<K>::constant(k, 4, k.neg(x(1, 0))));
    }
    auto b4 = b3.after(Fc);
    auto Fd = identity_map(k, 4, src);
    auto lq = split(b4.at(0, 6));
    Fd.set(0, 6, -lq[0]);
    Fd.set(1, 6, -lq[1]);
    auto F = Fa.after(Fb).after(Fc).after(Fd);
    return finish(out, beta, G, F, BetaShape::C32);
}

}  // namespace

template <class K>
FormMatrix<K> identity_map(const K& k, int nvars, const TwistList& tw) {
    FormMatrix<K> f(k, nvars, tw, tw);
    for (std::size_t i = 0; i < tw.size(); ++i) f.set(i, i, Form<K>::constant(k, nvars, k.one()));
    return f;
}

template <class K>
FormMatrix<K> random_automorphism(const K& k, int nvars, const TwistList& tw, Rng& rng) {
    std::map<int, std::vector<std::size_t>> cls;
    for (std::size_t i = 0; i < tw.size(); ++i) cls[tw[i]].push_back(i);
    FormMatrix<K> f(k, nvars, tw, tw);
    for (const auto& [a, idx] : cls) {
        auto g = random_invertible(k, idx.size(), rng);
        for (std::size_t i = 0; i < idx.size(); ++i)
            for (std::size_t j = 0; j < idx.size(); ++j)
                f.set(idx[i], idx[j], Form<K>::constant(k, nvars, g(i, j)));
    }
    for (std::size_t i = 0; i < tw.size(); ++i)
        for (std::size_t j = 0; j < tw.size(); ++j)
            if (tw[i] > tw[j]) {
                Form<K> e(k, nvars, tw[i] - tw[j]);
                for (std::size_t c = 0; c < e.size(); ++c) e.coeff(c) = k.random(rng);
                f.set(i, j, e);
            }
    return f;
}

template <class K>
FormMatrix<K> invert_automorphism(const FormMatrix<K>& f) {
    const K& k = f.field();
    const auto& tw = f.src();
    if (f.tgt() != tw) throw std::invalid_argument("not an endomorphism");
    for (std::size_t i = 0; i < tw.size(); ++i)
        for (std::size_t j = 0; j < tw.size(); ++j)
            if (tw[i] < tw[j] && !f.at(i, j).is_zero()) throw std::domain_error("not an automorphism");
    std::map<int, std::vector<std::size_t>> cls;
    for (std::size_t i = 0; i < tw.size(); ++i) cls[tw[i]].push_back(i);
    FormMatrix<K> d(k, f.nvars(), tw, tw), dinv(k, f.nvars(), tw, tw);
    for (const auto& [a, idx] : cls) {
        Mat<K> g(k, idx.size(), idx.size());
        for (std::size_t i = 0; i < idx.size(); ++i)
            for (std::size_t j = 0; j < idx.size(); ++j) {
                const auto& e = f.at(idx[i], idx[j]);
                if (!e.is_zero()) g(i, j) = e.coeff(0);
                d.set(idx[i], idx[j], e);
            }
        auto gi = inverse(g);
        for (std::size_t i = 0; i < idx.size(); ++i)
            for (std::size_t j = 0; j < idx.size(); ++j)
                if (!k.is_zero(gi(i, j))) dinv.set(idx[i], idx[j], Form<K>::constant(k, f.nvars(), gi(i, j)));
    }
    /* f = d (1 + n), n nilpotent */
    auto n = dinv.after(f + d.scaled(k.neg(k.one())));
    auto minus_n = n.scaled(k.neg(k.one()));
    auto term = identity_map(k, f.nvars(), tw);
    auto sum = term;
    for (std::size_t s = 0; s <= cls.size(); ++s) {
        term = minus_n.after(term);
        if (term.is_zero()) break;
        sum = sum + term;
    }
    return sum.after(dinv);
}

template <class K>
bool check_canonical_pattern(const FormMatrix<K>& beta, BetaShape shape, bool* degenerate, std::string* why) {
    auto fail = [&](const std::string& s) {
        if (why) *why = s;
        return false;
    };
    bool c30 = shape == BetaShape::C30;
    if (c30 && (beta.src() != TwistList(9, 0) || beta.tgt() != TwistList{1, 1, 1})) return fail("wrong shape");
    if (!c30 && (beta.src() != TwistList{0, 0, 0, 0, 0, 0, -1} || beta.tgt() != TwistList{1, 1}))
        return fail("wrong shape");
    std::size_t hr = 1, hc = c30 ? 1 : 2;
    std::vector<Form<K>> h;
    for (std::size_t j = 0; j < 4; ++j) h.push_back(beta.at(hr, hc + j));
    std::vector<Mat<K>> hv;
    for (auto& f : h) hv.push_back(lin_vec(f));
    if (rank(columns(hv)) != 4) return fail("h_0..h_3 are not a basis");
    auto zero_except = [&](std::size_t r, const std::vector<std::size_t>& keep) {
        for (std::size_t c = 0; c < beta.cols(); ++c) {
            bool kept = false;
            for (auto x : keep) kept |= x == c;
            if (!kept && !beta.at(r, c).is_zero()) return false;
        }
        return true;
    };
    if (!(beta.at(0, 0) == h[0])) return fail("(0,0) entry differs from h_0");
    if (c30) {
        if (!zero_except(1, {1, 2, 3, 4})) return fail("row 1 has extra entries");
        if (!zero_except(2, {5, 6, 7, 8})) return fail("row 2 has extra entries");
        for (std::size_t j = 0; j < 4; ++j)
            if (!(beta.at(2, 5 + j) == h[j])) return fail("row 2 does not repeat h_0..h_3");
        if (!(beta.at(0, 1) == h[0 + 1])) return fail("(0,1) entry differs from h_1");
        for (std::size_t c : {2, 6})
            if (!in_span({h[2], h[3]}, beta.at(0, c))) return fail("h_" + std::to_string(c) + "' outside k h_2 + k h_3");
        for (std::size_t c : {3, 4, 5, 7, 8})
            if (!in_span({h[1], h[2], h[3]}, beta.at(0, c)))
                return fail("h_" + std::to_string(c) + "' outside k h_1 + k h_2 + k h_3");
        if (degenerate)
            *degenerate = beta.at(0, 2).is_zero() && beta.at(0, 6).is_zero() && in_span({h[1]}, beta.at(0, 5));
        return true;
    }
    if (!zero_except(1, {2, 3, 4, 5})) return fail("row 1 has extra entries");
    if (!(beta.at(0, 1) == h[1])) return fail("(0,1) entry differs from h_1");
    for (std::size_t c = 2; c < 6; ++c)
        if (!in_span({h[2], h[3]}, beta.at(0, c))) return fail("h_" + std::to_string(c) + "' outside k h_2 + k h_3");
    auto q = in_products(h, beta.at(0, 6));
    auto pairs = quad_pairs();
    for (std::size_t p = 0; p < pairs.size(); ++p)
        if (pairs[p].first < 2 && !beta.field().is_zero(q(p, 0))) return fail("q outside k h_2^2 + k h_2 h_3 + k h_3^2");
    if (degenerate) *degenerate = beta.at(0, 2).is_zero() && beta.at(0, 3).is_zero();
    return true;
}

template <class K>
CanonicalBeta<K> canonicalize_beta(const FormMatrix<K>& beta, BetaShape shape, std::uint64_t seed, int budget) {
    return shape == BetaShape::C30 ? canon_c30(beta, seed, budget) : canon_c32(beta, seed, budget);
}

#define MONAD_INST(K)                                                                                  \
    template FormMatrix<K> identity_map(const K&, int, const TwistList&);                             \
    template FormMatrix<K> random_automorphism(const K&, int, const TwistList&, Rng&);                \
    template FormMatrix<K> invert_automorphism(const FormMatrix<K>&);                                  \
    template bool check_canonical_pattern(const FormMatrix<K>&, BetaShape, bool*, std::string*);       \
    template CanonicalBeta<K> canonicalize_beta(const FormMatrix<K>&, BetaShape, std::uint64_t, int);

MONAD_INST(Rationals)
MONAD_INST(PrimeField)

}  // namespace monad
