#include "monad/p1split.hpp"

#include "monad/zoo.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace monad {

std::string Splitting::str() const {
    std::ostringstream os;
    os << "(";
    for (std::size_t i = 0; i < parts.size(); ++i) os << (i ? "," : "") << parts[i];
    os << ")";
    return os.str();
}

long long h1_of(const Splitting& s) {
    long long h = 0;
    for (int a : s.parts) h += std::max(0, -a - 1);
    return h;
}

namespace {

int sum(const TwistList& t) { return std::accumulate(t.begin(), t.end(), 0); }

/* append one column O(-t) -> tw given by a section vector */
template <class K>
FormMatrix<K> add_generator(const FormMatrix<K>& g, const FormMatrix<K>& col) {
    TwistList src = g.src();
    src.push_back(col.src()[0]);
    FormMatrix<K> out(g.field(), g.nvars(), src, g.tgt());
    for (std::size_t i = 0; i < g.rows(); ++i) {
        for (std::size_t j = 0; j < g.cols(); ++j) out.set(i, j, g.at(i, j));
        out.set(i, g.cols(), col.at(i, 0));
    }
    return out;
}

}  // namespace

template <class K>
FreeBasis<K> kernel_free_basis(const FormMatrix<K>& beta) {
    const K& k = beta.field();
    FreeBasis<K> fb;
    if (beta.nvars() != 2) throw std::invalid_argument("kernel_free_basis works on P^1");
    const auto& B = beta.src();
    const auto& C = beta.tgt();
    long long r = static_cast<long long>(B.size()) - static_cast<long long>(C.size());
    if (r < 0) {
        fb.failure = "source smaller than target";
        return fb;
    }
    FormMatrix<K> G(k, 2, {}, B);
    if (r > 0) {
        int maxb = *std::max_element(B.begin(), B.end());
        int lo = -maxb;
        long long hi = -(sum(B) - sum(C) - (r - 1) * static_cast<long long>(maxb));
        for (long long t = lo; t <= hi && static_cast<long long>(G.cols()) < r; ++t) {
            int ti = static_cast<int>(t);
            Mat<K> ker = kernel_basis(beta.h0_map(ti));
            if (ker.cols() == 0) continue;
            Mat<K> old = G.cols() ? G.h0_map(ti) : Mat<K>(k, ker.rows(), 0);
            for (auto j : independent_mod(old, ker)) {
                G = add_generator(G, column_from_sections(k, 2, B, ti, ker, j));
                if (static_cast<long long>(G.cols()) == r) break;
            }
        }
    }
    if (static_cast<long long>(G.cols()) < r) {
        fb.failure = "degree window exhausted: map is not onto at some point";
        return fb;
    }
    fb.twists = G.src();
    if (sum(fb.twists) != sum(B) - sum(C)) {
        fb.failure = "generator degrees do not add up: map is not onto at some point";
        return fb;
    }
    fb.gens = G;
    fb.ok = true;
    return fb;
}

template <class K>
long long h0_on_line(const FormMatrix<K>& psi, int t) {
    if (psi.cols() == 0) {
        long long s = 0;
        for (int a : psi.tgt()) s += sdim(1, a + t);
        return s;
    }
    auto v = hypercoh(resolution(psi, 1), t)[0];
    if (!v.exact()) throw std::logic_error("two-term complex on P^1 gave an inexact h^0");
    return v.lo;
}

template <class K>
SplitResult<K> splitting_type(const Complex<K>& m) {
    m.validate();
    SplitResult<K> res;
    if (m.n != 1) throw std::invalid_argument("splitting_type needs a complex on P^1");
    if (m.middle != 0 || m.pmin < -1 || m.pmax() > 1)
        throw std::invalid_argument("splitting_type needs positions within -1..1 and middle 0");
    const K& k = m.k;
    TwistList A = m.term(-1), B = m.term(0), C = m.term(1);
    std::optional<FormMatrix<K>> psi;
    if (!C.empty()) {
        auto fb = kernel_free_basis(*m.diff(0));
        if (!fb.ok) {
            res.failure = fb.failure;
            return res;
        }
        FormMatrix<K> p(k, 2, A, fb.twists);
        const auto& G = *fb.gens;
        for (std::size_t j = 0; j < A.size(); ++j) {
            int l = -A[j];
            FormMatrix<K> aj(k, 2, {A[j]}, B);
            for (std::size_t i = 0; i < B.size(); ++i) aj.set(i, 0, m.diff(-1)->at(i, j));
            auto x = solve(G.h0_map(l), aj.h0_map(l));
            if (!x) {
                res.failure = "left map does not land in the kernel";
                return res;
            }
            auto col = column_from_sections(k, 2, fb.twists, l, *x);
            for (std::size_t i = 0; i < fb.twists.size(); ++i) p.set(i, j, col.at(i, 0));
        }
        psi = p;
    } else if (!A.empty()) {
        psi = *m.diff(-1);
    } else {
        psi = FormMatrix<K>(k, 2, {}, B);
    }
    const auto& P = *psi;
    long long r = static_cast<long long>(P.rows()) - static_cast<long long>(P.cols());
    if (r <= 0) {
        res.failure = "presented sheaf has rank <= 0";
        return res;
    }
    if (P.rows() == 0) return res;
    long long c1 = sum(P.tgt()) - sum(P.src());
    int mink = *std::min_element(P.tgt().begin(), P.tgt().end());
    long long maxpart = c1 - (r - 1) * mink;
    int tlo = static_cast<int>(-maxpart - 1), thi = -mink;
    std::vector<long long> h;
    for (int t = tlo; t <= thi; ++t) h.push_back(h0_on_line(P, t));
    if (h[0] != 0) {
        res.failure = "h^0 nonzero below every possible part at t=" + std::to_string(tlo) + ": torsion present";
        return res;
    }
    std::vector<int> parts;
    long long prev = 0;
    for (int t = tlo + 1; t <= thi; ++t) {
        long long d = h[t - tlo] - h[t - tlo - 1];
        if (d < prev) {
            res.failure = "h^0 differences decrease at t=" + std::to_string(t) + ": not a bundle";
            return res;
        }
        parts.insert(parts.end(), d - prev, -t);
        prev = d;
    }
    if (static_cast<long long>(parts.size()) != r) {
        res.failure = "found " + std::to_string(parts.size()) + " parts for rank " + std::to_string(r);
        return res;
    }
    if (std::accumulate(parts.begin(), parts.end(), 0LL) != c1) {
        res.failure = "parts do not sum to c1";
        return res;
    }
    std::sort(parts.rbegin(), parts.rend());
    for (int t = tlo; t <= thi; ++t) {
        long long e = 0;
        for (int a : parts) e += sdim(1, a + t);
        if (e != h[t - tlo]) {
            res.failure = "h^0 not reproduced at t=" + std::to_string(t);
            return res;
        }
    }
    res.split.parts = parts;
    res.ok = true;
    return res;
}

template <class K>
SplitResult<K> split_on_line(const Complex<K>& m, const std::vector<typename K::Elem>& p0,
                             const std::vector<typename K::Elem>& p1) {
    auto L = LinearSubspace<K>::from_points({p0, p1}, m.k);
    if (L.dim() != 1) throw std::invalid_argument("points do not span a line");
    return splitting_type(restrict_to(m, L));
}

#define MONAD_INST(K)                                                                     \
    template FreeBasis<K> kernel_free_basis(const FormMatrix<K>&);                       \
    template long long h0_on_line(const FormMatrix<K>&, int);                            \
    template SplitResult<K> splitting_type(const Complex<K>&);                           \
    template SplitResult<K> split_on_line(const Complex<K>&, const std::vector<K::Elem>&, \
                                          const std::vector<K::Elem>&);

MONAD_INST(Rationals)
MONAD_INST(PrimeField)

}  // namespace monad
