#include "monad/zoo.hpp"

#include <stdexcept>

namespace monad {

namespace {

template <class K>
struct Vars {
    const K& k;
    Form<K> x(int i) const { return Form<K>::var(k, 4, i); }
    Form<K> c(long long v) const { return Form<K>::constant(k, 4, k.from_int(v)); }
    Form<K> zero() const { return Form<K>(k, 4, -1); }
};

template <class K>
FormMatrix<K> from_rows(const K& k, const TwistList& src, const TwistList& tgt,
                        const std::vector<std::vector<Form<K>>>& rows) {
    FormMatrix<K> m(k, 4, src, tgt);
    for (std::size_t i = 0; i < rows.size(); ++i)
        for (std::size_t j = 0; j < rows[i].size(); ++j) m.set(i, j, rows[i][j]);
    return m;
}

template <class K>
Form<K> random_form(const K& k, int nvars, int deg, Rng& rng) {
    Form<K> f(k, nvars, deg);
    for (std::size_t i = 0; i < f.size(); ++i) f.coeff(i) = k.random(rng);
    return f;
}

template <class K>
FormMatrix<K> random_map(const K& k, const TwistList& src, const TwistList& tgt, Rng& rng) {
    FormMatrix<K> m(k, 4, src, tgt);
    for (std::size_t i = 0; i < tgt.size(); ++i)
        for (std::size_t j = 0; j < src.size(); ++j)
            if (tgt[i] - src[j] >= 0) m.set(i, j, random_form(k, 4, tgt[i] - src[j], rng));
    return m;
}

template <class K>
typename K::Elem param(const K& k, const FamilyParams& fp, std::size_t i, long long dflt) {
    return i < fp.params.size() ? k.from_q(fp.params[i]) : k.from_int(dflt);
}

template <class K>
FormMatrix<K> random_combination(const AlphaSpace<K>& sp, const K& k, const TwistList& src, const TwistList& tgt,
                                 Rng& rng) {
    FormMatrix<K> a(k, 4, src, tgt);
    for (const auto& b : sp.basis) a = a + b.scaled(k.random(rng));
    return a;
}

}  // namespace

std::vector<std::string> family_names() {
    return {"O",          "trivial3",   "nullcorrelation", "c36_schwarzenberger", "c32", "c30_min", "c32_moduli",
            "c36_random", "c32_random", "c30_min_random",  "c30_max",             "c34"};
}

ChernData declared_chern(const std::string& f) {
    if (f == "O") return {3, 1, 0, 0, 0};
    if (f == "trivial3") return {3, 3, 0, 0, 0};
    if (f == "nullcorrelation") return {3, 2, 0, 1, 0};
    if (f == "c36_schwarzenberger" || f == "c36_random") return {3, 3, 0, 3, 6};
    if (f == "c32" || f == "c32_moduli" || f == "c32_random") return {3, 3, 0, 3, 2};
    if (f == "c30_min" || f == "c30_min_random" || f == "c30_max") return {3, 3, 0, 3, 0};
    if (f == "c34") return {3, 3, 0, 3, 4};
    throw std::invalid_argument("unknown family: " + f);
}

template <class K>
FormMatrix<K> pencil_normal_form(const K& k, int which) {
    Vars<K> v{k};
    auto X = [&](int i) { return v.x(i); };
    auto O = v.zero();
    std::vector<std::vector<Form<K>>> r;
    switch (which) {
        case 1: r = {{X(0), X(1), X(2)}, {O, X(0), X(1)}}; break;
        case 2: r = {{X(0), X(1), O}, {O, X(0), X(2)}}; break;
        case 3: r = {{X(0), O, X(2)}, {O, X(1), X(2)}}; break;
        case 4: r = {{X(0), X(1), X(2)}, {O, X(0), X(3)}}; break;
        case 5: r = {{X(0), O, X(2)}, {O, X(1), X(3)}}; break;
        case 6: r = {{X(0), X(1), X(2)}, {O, X(2), X(3)}}; break;
        case 7: r = {{X(0), X(1), X(2)}, {X(1), X(2), X(3)}}; break;
        default: throw std::invalid_argument("pencil normal form must be 1..7");
    }
    return from_rows(k, {0, 0, 0}, {1, 1}, r);
}

template <class K>
FormMatrix<K> column_from_sections(const K& k, int nvars, const TwistList& tw, int l, const Mat<K>& v,
                                   std::size_t col) {
    FormMatrix<K> f(k, nvars, {-l}, tw);
    std::size_t off = 0;
    for (std::size_t i = 0; i < tw.size(); ++i) {
        int d = tw[i] + l;
        Form<K> g(k, nvars, d);
        for (std::size_t c = 0; c < g.size(); ++c) g.coeff(c) = v(off + c, col);
        off += g.size();
        f.set(i, 0, g);
    }
    if (off != v.rows()) throw std::invalid_argument("section vector has the wrong length");
    return f;
}

template <class K>
AlphaSpace<K> solve_left_differential(const FormMatrix<K>& beta, const TwistList& left) {
    const K& k = beta.field();
    AlphaSpace<K> sp;
    for (std::size_t j = 0; j < left.size(); ++j) {
        int l = -left[j];
        Mat<K> h = beta.h0_map(l);
        Mat<K> ker = kernel_basis(h);
        sp.dim += ker.cols();
        for (std::size_t c = 0; c < ker.cols(); ++c) {
            auto colmap = column_from_sections(k, beta.nvars(), beta.src(), l, ker, c);
            FormMatrix<K> a(k, beta.nvars(), left, beta.src());
            for (std::size_t i = 0; i < beta.cols(); ++i) a.set(i, j, colmap.at(i, 0));
            sp.basis.push_back(a);
        }
    }
    return sp;
}

template <class K>
std::string monad_defect(const Complex<K>& m) {
    if (!compose_check(m)) return "differentials do not compose to zero";
    auto cert = certify_bundle(m);
    if (!cert.ok) return cert.reason;
    auto h0 = hypercoh(m, 0)[0];
    if (!h0.exact() || h0.lo != 0) return "h^0(E) = " + h0.str();
    auto h0d = hypercoh(dualize(m), 0)[0];
    if (!h0d.exact() || h0d.lo != 0) return "h^0(E^dual) = " + h0d.str();
    return "";
}

template <class K>
RandomInstance<K> random_instance(const K& k, const std::string& shape, std::uint64_t seed, int param,
                                  int budget) {
    RandomInstance<K> out;
    Rng root(seed);
    for (int t = 1; t <= budget; ++t) {
        out.tries = t;
        Rng rng = root.fork(static_cast<std::uint64_t>(t));
        std::optional<Complex<K>> m;
        if (shape == "c36") {
            auto a = random_map(k, {-2, -2, -2}, {-1, -1, -1, -1, -1, -1}, rng);
            m = resolution(a, 3);
        } else if (shape == "c32" || shape == "c30_min" || shape == "c30_max") {
            TwistList A, B, C;
            if (shape == "c32") A = {-2}, B = {0, 0, 0, 0, 0, 0}, C = {1, 1};
            if (shape == "c30_min") A = {-1, -1, -1}, B = TwistList(9, 0), C = {1, 1, 1};
            if (shape == "c30_max") A = {-2}, B = {1, 0, 0, 0, -1}, C = {2};
            auto b = random_map(k, B, C, rng);
            auto sp = solve_left_differential(b, A);
            auto a = random_combination(sp, k, A, B, rng);
            m = make_monad(a, b, 3);
        } else if (shape == "c34") {
            std::vector<typename K::Elem> x(4);
            bool nz = false;
            for (auto& c : x) {
                c = k.random(rng);
                nz |= !k.is_zero(c);
            }
            if (!nz) {
                out.failure = "zero point";
                continue;
            }
            Mat<K> xr(k, 1, 4);
            for (int i = 0; i < 4; ++i) xr(0, i) = x[i];
            Mat<K> lin = kernel_basis(xr) * random_invertible(k, 3, rng);
            FormMatrix<K> beta1(k, 4, {0, 0, 0}, {1});
            for (int i = 0; i < 3; ++i) beta1.set(0, i, column_from_sections(k, 4, {1}, 0, lin, i).at(0, 0));
            auto alpha2 = pencil_normal_form(k, param).transpose().twisted(-1);
            /* unknowns: alpha1 (3x2 quadrics, entry (i,j) at block 2i+j), beta2 (3 quadrics) */
            const std::size_t q = 10, cub = 20;
            Mat<K> sys(k, 2 * cub, 9 * q);
            for (std::size_t j = 0; j < 2; ++j)
                for (std::size_t i = 0; i < 3; ++i) {
                    sys.set_block(j * cub, (2 * i + j) * q, mult_matrix(beta1.at(0, i), 2));
                    sys.set_block(j * cub, (6 + i) * q, mult_matrix(alpha2.at(i, j), 2));
                }
            Mat<K> ker = kernel_basis(sys);
            Mat<K> coef(k, ker.cols(), 1);
            for (std::size_t c = 0; c < ker.cols(); ++c) coef(c, 0) = k.random(rng);
            Mat<K> sol = ker * coef;
            FormMatrix<K> alpha(k, 4, {-2, -2}, {0, 0, 0, -1, -1, -1});
            FormMatrix<K> beta(k, 4, {0, 0, 0, -1, -1, -1}, {1});
            auto piece = [&](std::size_t blk) {
                Form<K> f(k, 4, 2);
                for (std::size_t c = 0; c < q; ++c) f.coeff(c) = sol(blk * q + c, 0);
                return f;
            };
            for (std::size_t i = 0; i < 3; ++i) {
                for (std::size_t j = 0; j < 2; ++j) {
                    alpha.set(i, j, piece(2 * i + j));
                    alpha.set(3 + i, j, alpha2.at(i, j));
                }
                beta.set(0, i, beta1.at(0, i));
                beta.set(0, 3 + i, piece(6 + i));
            }
            m = make_monad(alpha, beta, 3);
            out.special_point = x;
        } else {
            throw std::invalid_argument("unknown random shape: " + shape);
        }
        std::string why = monad_defect(*m);
        if (why.empty()) {
            out.m = m;
            out.failure.clear();
            return out;
        }
        out.failure = why;
    }
    return out;
}

template <class K>
Complex<K> build(const K& k, const FamilyParams& fp) {
    Vars<K> v{k};
    auto X = [&](int i) { return v.x(i); };
    auto O = v.zero();
    const auto& f = fp.family;
    if (f == "O") return single_term(k, 3, {0});
    if (f == "trivial3") return single_term(k, 3, {0, 0, 0});
    if (f == "nullcorrelation") {
        auto a = from_rows(k, {-1}, {0, 0, 0, 0}, {{X(0)}, {X(1)}, {X(2)}, {X(3)}});
        auto b = from_rows(k, {0, 0, 0, 0}, {1}, {{X(1), -X(0), X(3), -X(2)}});
        return make_monad(a, b, 3);
    }
    if (f == "c36_schwarzenberger") {
        FormMatrix<K> a(k, 4, {-2, -2, -2}, TwistList(6, -1));
        for (int i = 0; i < 6; ++i)
            for (int j = 0; j < 3; ++j)
                if (i - j >= 0 && i - j <= 3) a.set(i, j, X(i - j));
        return resolution(a, 3);
    }
    if (f == "c32") {
        auto a1 = param(k, fp, 0, 1), a3 = param(k, fp, 1, 0), b1 = param(k, fp, 2, 0), b3 = param(k, fp, 3, 1);
        if (k.is_zero(k.sub(k.mul(a1, b3), k.mul(a3, b1))))
            throw std::invalid_argument("c32 needs a1*b3 - a3*b1 != 0");
        auto alpha = from_rows(k, {-2}, TwistList(6, 0),
                               {{X(2) * X(2)}, {X(3) * X(3)}, {-(X(0) * X(2))}, {-(X(1) * X(3))}, {X(0) * X(0)},
                                {X(1) * X(1)}});
        auto beta = from_rows(
            k, TwistList(6, 0), {1, 1},
            {{X(0), X(1).scaled(a1), X(2), X(3).scaled(a1) + X(1).scaled(a3), O, X(3).scaled(a3)},
             {O, X(1).scaled(b1), X(0), X(3).scaled(b1) + X(1).scaled(b3), X(2), X(3).scaled(b3)}});
        return make_monad(alpha, beta, 3);
    }
    if (f == "c30_min") {
        auto t = param(k, fp, 0, 1);
        auto beta = from_rows(k, TwistList(9, 0), {1, 1, 1},
                              {{X(0), X(1), O, O, X(2), X(3).scaled(t), X(2).scaled(t), X(3), O},
                               {O, X(0), X(1), X(2), X(3), O, O, O, O},
                               {O, O, O, O, O, X(0), X(1), X(2), X(3)}});
        auto alpha_dual = from_rows(
            k, TwistList(9, 0), {1, 1, 1},
            {{X(2), X(3), O, X(3).scaled(t), -X(0) - X(2).scaled(t), O, X(2), -X(1), O},
             {O, X(2), X(3), -X(0), -X(1), O, O, O, O},
             {-X(3), O, O, O, O, -X(2), X(3), X(0), -X(1)}});
        return make_monad(alpha_dual.transpose(), beta, 3);
    }
    if (f == "c32_moduli") {
        auto t = param(k, fp, 0, 1);
        auto beta = from_rows(k, {0, 0, 0, 0, 0, 0, -1}, {1, 1},
                              {{X(0), X(1), X(2).scaled(t), X(3).scaled(t), O, X(2), X(3) * X(3)},
                               {O, O, X(0), X(1), X(2), X(3), O}});
        auto alpha_t = from_rows(
            k, {0, 0, 0, 0, 0, 0, 1}, {1, 2},
            {{X(2), O, X(3), -X(2), X(1), -X(0), O},
             {X(3) * X(3) + (X(1) * X(3)).scaled(t), -(X(2) * X(2)) - (X(1) * X(2)).scaled(t), X(1) * X(1),
              -(X(0) * X(1)), -(X(1) * X(3)), X(1) * X(2), -X(0)}});
        return make_monad(alpha_t.transpose(), beta, 3);
    }
    std::string shape;
    int prm = 7;
    if (f == "c36_random") shape = "c36";
    if (f == "c32_random") shape = "c32";
    if (f == "c30_min_random") shape = "c30_min";
    if (f == "c30_max") shape = "c30_max";
    if (f == "c34") {
        shape = "c34";
        if (!fp.params.empty()) prm = static_cast<int>(fp.params[0].get_num().get_si());
    }
    if (shape.empty()) throw std::invalid_argument("unknown family: " + f);
    auto r = random_instance(k, shape, fp.seed, prm);
    if (!r.m) throw std::runtime_error(f + ": no instance after " + std::to_string(r.tries) + " tries (" + r.failure + ")");
    return *r.m;
}

#define MONAD_INST(K)                                                                                  \
    template Complex<K> build(const K&, const FamilyParams&);                                         \
    template FormMatrix<K> pencil_normal_form(const K&, int);                                         \
    template AlphaSpace<K> solve_left_differential(const FormMatrix<K>&, const TwistList&);           \
    template FormMatrix<K> column_from_sections(const K&, int, const TwistList&, int, const Mat<K>&,  \
                                                std::size_t);                                         \
    template RandomInstance<K> random_instance(const K&, const std::string&, std::uint64_t, int, int); \
    template std::string monad_defect(const Complex<K>&);

MONAD_INST(Rationals)
MONAD_INST(PrimeField)

}  // namespace monad
