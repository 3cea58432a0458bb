#include "monad/complex.hpp"

#include <algorithm>
#include <stdexcept>

namespace monad {

template <class K>
FormMatrix<K>::FormMatrix(const K& k, int nvars, TwistList src, TwistList tgt)
    : k_(k), nvars_(nvars), src_(std::move(src)), tgt_(std::move(tgt)) {
    e_.reserve(src_.size() * tgt_.size());
    for (int t : tgt_)
        for (int s : src_) e_.emplace_back(k_, nvars_, t - s);
}

template <class K>
void FormMatrix<K>::set(std::size_t i, std::size_t j, const Form<K>& f) {
    int want = tgt_[i] - src_[j];
    auto& slot = e_[i * src_.size() + j];
    if (f.is_zero()) {
        slot = Form<K>(k_, nvars_, want);
        return;
    }
    if (f.degree() != want || f.nvars() != nvars_)
        throw std::invalid_argument("entry (" + std::to_string(i) + "," + std::to_string(j) + ") must have degree " +
                                    std::to_string(want) + ", got " + std::to_string(f.degree()));
    slot = f;
}

template <class K>
bool FormMatrix<K>::is_zero() const {
    return std::all_of(e_.begin(), e_.end(), [](const Form<K>& f) { return f.is_zero(); });
}

template <class K>
bool FormMatrix<K>::operator==(const FormMatrix& o) const {
    if (src_ != o.src_ || tgt_ != o.tgt_) return false;
    for (std::size_t i = 0; i < e_.size(); ++i)
        if (!(e_[i] == o.e_[i])) return false;
    return true;
}

template <class K>
FormMatrix<K> FormMatrix<K>::after(const FormMatrix& f) const {
    if (f.tgt_ != src_) throw std::invalid_argument("composition: twist lists do not match");
    FormMatrix r(k_, nvars_, f.src_, tgt_);
    for (std::size_t i = 0; i < rows(); ++i)
        for (std::size_t j = 0; j < f.cols(); ++j) {
            Form<K> acc(k_, nvars_, tgt_[i] - f.src_[j]);
            for (std::size_t l = 0; l < cols(); ++l) {
                const auto& a = at(i, l);
                const auto& b = f.at(l, j);
                if (a.degree() < 0 || b.degree() < 0 || a.is_zero() || b.is_zero()) continue;
                acc = acc + a * b;
            }
            r.e_[i * r.cols() + j] = acc;
        }
    return r;
}

template <class K>
FormMatrix<K> FormMatrix<K>::operator+(const FormMatrix& o) const {
    if (src_ != o.src_ || tgt_ != o.tgt_) throw std::invalid_argument("sum of maps with different shapes");
    FormMatrix r(*this);
    for (std::size_t i = 0; i < e_.size(); ++i) r.e_[i] = e_[i] + o.e_[i];
    return r;
}

template <class K>
FormMatrix<K> FormMatrix<K>::scaled(const E& s) const {
    FormMatrix r(*this);
    for (auto& f : r.e_) f = f.scaled(s);
    return r;
}

template <class K>
FormMatrix<K> FormMatrix<K>::transpose() const {
    TwistList s, t;
    for (int x : tgt_) s.push_back(-x);
    for (int x : src_) t.push_back(-x);
    FormMatrix r(k_, nvars_, s, t);
    for (std::size_t i = 0; i < rows(); ++i)
        for (std::size_t j = 0; j < cols(); ++j) r.e_[j * r.cols() + i] = at(i, j);
    return r;
}

template <class K>
FormMatrix<K> FormMatrix<K>::twisted(int l) const {
    TwistList s = src_, t = tgt_;
    for (auto& x : s) x += l;
    for (auto& x : t) x += l;
    FormMatrix r(k_, nvars_, s, t);
    r.e_ = e_;
    return r;
}

template <class K>
FormMatrix<K> FormMatrix<K>::restricted(const LinearSubspace<K>& sub) const {
    FormMatrix r(k_, sub.dim() + 1, src_, tgt_);
    for (std::size_t i = 0; i < e_.size(); ++i) r.e_[i] = substitute(e_[i], sub);
    return r;
}

template <class K>
Mat<K> FormMatrix<K>::eval(const std::vector<E>& x) const {
    Mat<K> m(k_, rows(), cols());
    for (std::size_t i = 0; i < rows(); ++i)
        for (std::size_t j = 0; j < cols(); ++j) m(i, j) = at(i, j).eval(x);
    return m;
}

template <class K>
Mat<K> FormMatrix<K>::h0_map(int l) const {
    int n = nvars_ - 1;
    std::vector<std::size_t> ro(rows() + 1, 0), co(cols() + 1, 0);
    for (std::size_t i = 0; i < rows(); ++i) ro[i + 1] = ro[i] + static_cast<std::size_t>(sdim(n, tgt_[i] + l));
    for (std::size_t j = 0; j < cols(); ++j) co[j + 1] = co[j] + static_cast<std::size_t>(sdim(n, src_[j] + l));
    Mat<K> m(k_, ro.back(), co.back());
    for (std::size_t i = 0; i < rows(); ++i)
        for (std::size_t j = 0; j < cols(); ++j) {
            if (ro[i + 1] == ro[i] || co[j + 1] == co[j] || at(i, j).is_zero()) continue;
            m.set_block(ro[i], co[j], mult_matrix(at(i, j), src_[j] + l));
        }
    return m;
}

template <class K>
Mat<K> FormMatrix<K>::hn_map(int l) const {
    int n = nvars_ - 1;
    std::vector<std::size_t> ro(rows() + 1, 0), co(cols() + 1, 0);
    for (std::size_t i = 0; i < rows(); ++i) ro[i + 1] = ro[i] + static_cast<std::size_t>(hn_dim(n, tgt_[i] + l));
    for (std::size_t j = 0; j < cols(); ++j) co[j + 1] = co[j] + static_cast<std::size_t>(hn_dim(n, src_[j] + l));
    Mat<K> m(k_, ro.back(), co.back());
    for (std::size_t i = 0; i < rows(); ++i)
        for (std::size_t j = 0; j < cols(); ++j) {
            if (ro[i + 1] == ro[i] || co[j + 1] == co[j] || at(i, j).is_zero()) continue;
            m.set_block(ro[i], co[j], mult_matrix(at(i, j), -tgt_[i] - l - n - 1).transpose());
        }
    return m;
}

template <class K>
TwistList Complex<K>::term(int p) const {
    if (p < pmin || p > pmax()) return {};
    return terms[p - pmin];
}

template <class K>
const FormMatrix<K>* Complex<K>::diff(int p) const {
    if (p < pmin || p + 1 > pmax()) return nullptr;
    return &diffs[p - pmin];
}

template <class K>
void Complex<K>::validate() const {
    if (n < 1) throw std::invalid_argument("ambient dimension must be positive");
    std::size_t want = terms.empty() ? 0 : terms.size() - 1;
    if (diffs.size() != want) throw std::invalid_argument("differential count does not match term count");
    for (std::size_t i = 0; i < diffs.size(); ++i) {
        if (diffs[i].src() != terms[i] || diffs[i].tgt() != terms[i + 1])
            throw std::invalid_argument("differential " + std::to_string(i) + " does not match its terms");
        if (diffs[i].nvars() != n + 1) throw std::invalid_argument("differential has the wrong number of variables");
    }
}

template <class K>
Complex<K> single_term(const K& k, int n, const TwistList& t) {
    Complex<K> c(k, n);
    c.terms = {t};
    return c;
}

template <class K>
Complex<K> resolution(const FormMatrix<K>& alpha, int n) {
    Complex<K> c(alpha.field(), n);
    c.pmin = -1;
    c.terms = {alpha.src(), alpha.tgt()};
    c.diffs = {alpha};
    c.validate();
    return c;
}

template <class K>
Complex<K> make_monad(const FormMatrix<K>& alpha, const FormMatrix<K>& beta, int n) {
    Complex<K> c(alpha.field(), n);
    c.pmin = -1;
    c.terms = {alpha.src(), alpha.tgt(), beta.tgt()};
    c.diffs = {alpha, beta};
    c.validate();
    return c;
}

template <class K>
bool compose_check(const Complex<K>& m) {
    m.validate();
    for (std::size_t i = 0; i + 1 < m.diffs.size(); ++i)
        if (!m.diffs[i + 1].after(m.diffs[i]).is_zero()) return false;
    return true;
}

namespace {

template <class K>
bool exact_at_point(const Complex<K>& m, const std::vector<typename K::Elem>& x) {
    std::vector<std::size_t> rk(m.diffs.size());
    for (std::size_t i = 0; i < m.diffs.size(); ++i) rk[i] = rank(m.diffs[i].eval(x));
    for (int p = m.pmin; p <= m.pmax(); ++p) {
        if (p == m.middle) continue;
        std::size_t i = static_cast<std::size_t>(p - m.pmin);
        std::size_t in = i > 0 ? rk[i - 1] : 0;
        std::size_t out = i < rk.size() ? rk[i] : 0;
        if (in + out != m.terms[i].size()) return false;
    }
    return true;
}

template <class K>
std::vector<std::vector<typename K::Elem>> scan_points(const K& k, int n, const FiberMode& mode);

template <>
std::vector<std::vector<Rationals::Elem>> scan_points(const Rationals& k, int n, const FiberMode& mode) {
    if (mode.kind == FiberMode::Kind::ExhaustiveFp)
        throw std::invalid_argument("exhaustive scan needs a prime field");
    Rng rng(mode.seed);
    std::vector<std::vector<Rationals::Elem>> pts;
    while (pts.size() < mode.count) {
        std::vector<Rationals::Elem> x(n + 1);
        bool nz = false;
        for (auto& v : x) {
            v = k.random(rng);
            nz |= !k.is_zero(v);
        }
        if (nz) pts.push_back(std::move(x));
    }
    return pts;
}

template <>
std::vector<std::vector<PrimeField::Elem>> scan_points(const PrimeField& k, int n, const FiberMode& mode) {
    if (mode.kind == FiberMode::Kind::ExhaustiveFp) return projective_points(k.p(), n);
    Rng rng(mode.seed);
    std::vector<std::vector<PrimeField::Elem>> pts;
    while (pts.size() < mode.count) {
        std::vector<PrimeField::Elem> x(n + 1);
        bool nz = false;
        for (auto& v : x) {
            v = k.random(rng);
            nz |= v != 0;
        }
        if (nz) pts.push_back(std::move(x));
    }
    return pts;
}

}  // namespace

template <class K>
FiberReport<K> fiberwise_check(const Complex<K>& m, const FiberMode& mode) {
    m.validate();
    FiberReport<K> rep;
    for (const auto& x : scan_points(m.k, m.n, mode)) {
        ++rep.checked;
        if (!exact_at_point(m, x)) {
            rep.ok = false;
            if (rep.witnesses.size() < mode.max_witnesses) rep.witnesses.push_back(x);
        }
    }
    return rep;
}

template <class K>
bool is_onto_everywhere(const FormMatrix<K>& phi, int n, int extra_degrees, int* degree_used) {
    if (phi.rows() == 0) {
        if (degree_used) *degree_used = 0;
        return true;
    }
    int d0 = -*std::min_element(phi.tgt().begin(), phi.tgt().end());
    for (int d = d0; d <= d0 + extra_degrees; ++d) {
        long long need = 0, have = 0;
        for (int c : phi.tgt()) need += sdim(n, c + d);
        for (int b : phi.src()) have += sdim(n, b + d);
        if (have < need) continue;
        if (rank(phi.h0_map(d)) == static_cast<std::size_t>(need)) {
            if (degree_used) *degree_used = d;
            return true;
        }
    }
    return false;
}

template <class K>
BundleCertificate certify_bundle(const Complex<K>& m, int extra_degrees) {
    m.validate();
    BundleCertificate c;
    for (int p = m.pmin; p <= m.pmax(); ++p)
        if ((p < m.middle - 1 || p > m.middle + 1) && !m.term(p).empty()) {
            c.reason = "certificate covers only terms adjacent to the middle";
            return c;
        }
    if (const auto* a = m.diff(m.middle - 1); a && !a->src().empty()) {
        if (!is_onto_everywhere(a->transpose(), m.n, extra_degrees, &c.left_degree)) {
            c.reason = "left map not shown injective at every point";
            return c;
        }
    }
    if (const auto* b = m.diff(m.middle); b && !b->tgt().empty()) {
        if (!is_onto_everywhere(*b, m.n, extra_degrees, &c.right_degree)) {
            c.reason = "right map not shown surjective at every point";
            return c;
        }
    }
    c.ok = true;
    return c;
}

template <class K>
Complex<K> dualize(const Complex<K>& m) {
    m.validate();
    Complex<K> d(m.k, m.n);
    d.middle = m.middle;
    d.pmin = 2 * m.middle - m.pmax();
    for (int i = static_cast<int>(m.terms.size()) - 1; i >= 0; --i) {
        TwistList t;
        for (int a : m.terms[i]) t.push_back(-a);
        d.terms.push_back(t);
    }
    for (int i = static_cast<int>(m.diffs.size()) - 1; i >= 0; --i) d.diffs.push_back(m.diffs[i].transpose());
    d.validate();
    return d;
}

template <class K>
Complex<K> twist(const Complex<K>& m, int l) {
    Complex<K> t(m);
    for (auto& term : t.terms)
        for (auto& a : term) a += l;
    for (auto& d : t.diffs) d = d.twisted(l);
    return t;
}

template <class K>
Complex<K> restrict_to(const Complex<K>& m, const LinearSubspace<K>& sub) {
    if (sub.ambient() != m.n) throw std::invalid_argument("subspace lives in another ambient space");
    Complex<K> r(m.k, sub.dim());
    r.pmin = m.pmin;
    r.middle = m.middle;
    r.terms = m.terms;
    for (const auto& d : m.diffs) r.diffs.push_back(d.restricted(sub));
    return r;
}

template <class K>
Complex<K> tensor_total(const Complex<K>& a, const Complex<K>& b) {
    a.validate();
    b.validate();
    if (a.n != b.n) throw std::invalid_argument("tensor of complexes on different spaces");
    const K& k = a.k;
    int nv = a.n + 1;
    Complex<K> t(k, a.n);
    t.pmin = a.pmin + b.pmin;
    t.middle = a.middle + b.middle;
    int tmax = a.pmax() + b.pmax();
    /* block layout of each total term: (p, q) with p increasing */
    struct Block {
        int p, q;
        std::size_t off;
    };
    std::vector<std::vector<Block>> layout;
    for (int s = t.pmin; s <= tmax; ++s) {
        TwistList term;
        std::vector<Block> blocks;
        for (int p = a.pmin; p <= a.pmax(); ++p) {
            int q = s - p;
            if (q < b.pmin || q > b.pmax()) continue;
            blocks.push_back({p, q, term.size()});
            for (int x : a.term(p))
                for (int y : b.term(q)) term.push_back(x + y);
        }
        t.terms.push_back(term);
        layout.push_back(blocks);
    }
    for (int s = t.pmin; s < tmax; ++s) {
        const auto& src = layout[s - t.pmin];
        const auto& dst = layout[s + 1 - t.pmin];
        FormMatrix<K> d(k, nv, t.terms[s - t.pmin], t.terms[s + 1 - t.pmin]);
        for (const auto& sb : src) {
            auto ta = a.term(sb.p);
            auto tb = b.term(sb.q);
            for (const auto& db : dst) {
                if (db.p == sb.p + 1 && db.q == sb.q) {
                    const auto& da = *a.diff(sb.p);
                    std::size_t nb = tb.size();
                    for (std::size_t i = 0; i < ta.size(); ++i)
                        for (std::size_t i2 = 0; i2 < da.rows(); ++i2)
                            for (std::size_t j = 0; j < nb; ++j)
                                d.set(db.off + i2 * nb + j, sb.off + i * nb + j, da.at(i2, i));
                } else if (db.p == sb.p && db.q == sb.q + 1) {
                    const auto& dbm = *b.diff(sb.q);
                    bool odd = ((sb.p % 2) + 2) % 2 == 1;
                    std::size_t nb = tb.size(), nb2 = dbm.rows();
                    for (std::size_t i = 0; i < ta.size(); ++i)
                        for (std::size_t j = 0; j < nb; ++j)
                            for (std::size_t j2 = 0; j2 < nb2; ++j2) {
                                auto f = dbm.at(j2, j);
                                d.set(db.off + i * nb2 + j2, sb.off + i * nb + j, odd ? -f : f);
                            }
                }
            }
        }
        t.diffs.push_back(d);
    }
    t.validate();
    return t;
}

template <class K>
int complex_rank(const Complex<K>& m) {
    int r = 0;
    for (int p = m.pmin; p <= m.pmax(); ++p) {
        int sz = static_cast<int>(m.term(p).size());
        r += ((p - m.middle) % 2 == 0) ? sz : -sz;
    }
    return r;
}

Complex<PrimeField> reduce_mod(const Complex<Rationals>& m, std::uint32_t p) {
    PrimeField k(p);
    Complex<PrimeField> r(k, m.n);
    r.pmin = m.pmin;
    r.middle = m.middle;
    r.terms = m.terms;
    for (const auto& d : m.diffs) {
        FormMatrix<PrimeField> fm(k, d.nvars(), d.src(), d.tgt());
        for (std::size_t i = 0; i < d.rows(); ++i)
            for (std::size_t j = 0; j < d.cols(); ++j) {
                const auto& f = d.at(i, j);
                Form<PrimeField> g(k, f.nvars(), f.degree());
                for (std::size_t c = 0; c < f.size(); ++c) g.coeff(c) = k.from_q(f.coeff(c));
                fm.set(i, j, g);
            }
        r.diffs.push_back(fm);
    }
    return r;
}

#define MONAD_INST(K)                                                                   \
    template class FormMatrix<K>;                                                      \
    template struct Complex<K>;                                                        \
    template Complex<K> single_term(const K&, int, const TwistList&);                  \
    template Complex<K> resolution(const FormMatrix<K>&, int);                         \
    template Complex<K> make_monad(const FormMatrix<K>&, const FormMatrix<K>&, int);   \
    template bool compose_check(const Complex<K>&);                                    \
    template FiberReport<K> fiberwise_check(const Complex<K>&, const FiberMode&);      \
    template bool is_onto_everywhere(const FormMatrix<K>&, int, int, int*);            \
    template BundleCertificate certify_bundle(const Complex<K>&, int);                 \
    template Complex<K> dualize(const Complex<K>&);                                    \
    template Complex<K> twist(const Complex<K>&, int);                                 \
    template Complex<K> restrict_to(const Complex<K>&, const LinearSubspace<K>&);      \
    template Complex<K> tensor_total(const Complex<K>&, const Complex<K>&);             \
    template int complex_rank(const Complex<K>&);

MONAD_INST(Rationals)
MONAD_INST(PrimeField)

}  // namespace monad
