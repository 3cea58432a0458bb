#include "monad/cohomology.hpp"

#include <algorithm>
#include <map>
#include <sstream>
#include <stdexcept>

namespace monad {

std::string CohValue::str() const {
    if (exact()) return std::to_string(lo);
    return "[" + std::to_string(lo) + "," + std::to_string(hi) + "]";
}

template <class K>
std::vector<CohValue> hypercoh(const Complex<K>& m, int l) {
    m.validate();
    const int n = m.n;
    const int lo = m.pmin, hi = m.pmax();
    std::map<int, long long> e0, en;
    {
        std::map<int, long long> a0, an, r0, rn;
        for (int p = lo; p <= hi; ++p) {
            for (int t : m.term(p)) {
                a0[p] += sdim(n, t + l);
                an[p] += hn_dim(n, t + l);
            }
            if (const auto* d = m.diff(p)) {
                r0[p] = static_cast<long long>(rank(d->h0_map(l)));
                rn[p] = static_cast<long long>(rank(d->hn_map(l)));
            }
        }
        for (int p = lo; p <= hi; ++p) {
            e0[p] = a0[p] - r0[p] - r0[p - 1];
            en[p] = an[p] - rn[p] - rn[p - 1];
        }
    }
    auto E0 = [&](int p) { auto it = e0.find(p); return it == e0.end() ? 0LL : it->second; };
    auto En = [&](int p) { auto it = en.find(p); return it == en.end() ? 0LL : it->second; };
    std::vector<CohValue> out(n + 1);
    for (int i = 0; i <= n; ++i) {
        int j = i + m.middle;
        long long h = E0(j) + En(j - n);
        /* d_{n+1}: E^{p,n} -> E^{p+n+1,0}, into row 0 at j and out of row n at j-n */
        long long in = std::min(En(j - n - 1), E0(j));
        long long out_ = std::min(En(j - n), E0(j + 1));
        out[i] = {h - in - out_, h};
    }
    return out;
}

long long CohTable::h(int i, int l) const {
    const auto& v = at(i, l);
    if (!v.exact())
        throw std::domain_error("h^" + std::to_string(i) + "(E(" + std::to_string(l) + ")) is only known as " +
                                v.str());
    return v.lo;
}

bool CohTable::exact(int l) const {
    const auto& c = cols.at(l - lo);
    return std::all_of(c.begin(), c.end(), [](const CohValue& v) { return v.exact(); });
}

std::string CohTable::str() const {
    std::ostringstream os;
    os << "l";
    for (int i = 0; i <= n; ++i) os << "\th" << i;
    os << "\tflag\n";
    for (int l = lo; l <= hi; ++l) {
        os << l;
        for (int i = 0; i <= n; ++i) os << "\t" << at(i, l).str();
        os << "\t" << (exact(l) ? "exact" : "inexact") << "\n";
    }
    return os.str();
}

template <class K>
CohTable coh_table(const Complex<K>& m, int lo, int hi) {
    CohTable t;
    t.n = m.n;
    t.lo = lo;
    t.hi = hi;
    for (int l = lo; l <= hi; ++l) t.cols.push_back(hypercoh(m, l));
    return t;
}

namespace {

mpq_class fact(int k) {
    mpq_class f = 1;
    for (int i = 2; i <= k; ++i) f *= i;
    return f;
}

mpq_class ipow(const mpq_class& x, int k) {
    mpq_class r = 1;
    for (int i = 0; i < k; ++i) r *= x;
    return r;
}

long long to_int(const mpq_class& q, const char* what) {
    if (q.get_den() != 1) throw std::domain_error(std::string(what) + " is not an integer: " + q.get_str());
    return q.get_num().get_si();
}

std::vector<mpq_class> ch_of(const ChernData& c) {
    mpq_class c1 = static_cast<long>(c.c1), c2 = static_cast<long>(c.c2), c3 = static_cast<long>(c.c3);
    return {mpq_class(static_cast<long>(c.rank)), c1, (c1 * c1 - 2 * c2) / 2, (c1 * c1 * c1 - 3 * c1 * c2 + 3 * c3) / 6};
}

/* coefficients of (x / (1 - e^{-x}))^{n+1} up to x^n */
std::vector<mpq_class> todd(int n) {
    std::vector<mpq_class> g(n + 1);  /* (1 - e^{-x}) / x */
    for (int k = 0; k <= n; ++k) g[k] = mpq_class(k % 2 ? -1 : 1) / fact(k + 1);
    std::vector<mpq_class> inv(n + 1);
    inv[0] = 1;
    for (int k = 1; k <= n; ++k) {
        mpq_class s = 0;
        for (int j = 1; j <= k; ++j) s += g[j] * inv[k - j];
        inv[k] = -s;
    }
    std::vector<mpq_class> t(n + 1);
    t[0] = 1;
    for (int e = 0; e <= n; ++e) {
        std::vector<mpq_class> r(n + 1);
        for (int a = 0; a <= n; ++a)
            for (int b = 0; a + b <= n; ++b) r[a + b] += t[a] * inv[b];
        t = r;
    }
    return t;
}

}  // namespace

std::string ChernData::str() const {
    std::ostringstream os;
    os << "rank=" << rank << " c1=" << c1 << " c2=" << c2 << " c3=" << c3;
    return os.str();
}

template <class K>
ChernData chern(const Complex<K>& m) {
    if (m.n > 3) throw std::invalid_argument("Chern data implemented for n <= 3");
    std::vector<mpq_class> ch(4);
    for (int p = m.pmin; p <= m.pmax(); ++p) {
        int sgn = (p - m.middle) % 2 == 0 ? 1 : -1;
        for (int t : m.term(p))
            for (int k = 0; k <= 3; ++k) ch[k] += sgn * ipow(mpq_class(t), k) / fact(k);
    }
    ChernData c;
    c.n = m.n;
    c.rank = to_int(ch[0], "rank");
    mpq_class c1 = ch[1];
    mpq_class c2 = (c1 * c1 - 2 * ch[2]) / 2;
    mpq_class c3 = 2 * ch[3] - c1 * c1 * c1 / 3 + c1 * c2;
    c.c1 = to_int(c1, "c1");
    c.c2 = m.n >= 2 ? to_int(c2, "c2") : 0;
    c.c3 = m.n >= 3 ? to_int(c3, "c3") : 0;
    return c;
}

long long euler_char(const ChernData& c, int l) {
    if (c.n < 1 || c.n > 3) throw std::invalid_argument("euler_char implemented for 1 <= n <= 3");
    auto ch = ch_of(c);
    ch.resize(c.n + 1);
    std::vector<mpq_class> tw(c.n + 1);
    for (int k = 0; k <= c.n; ++k)
        for (int j = 0; j <= k; ++j) tw[k] += ch[j] * ipow(mpq_class(l), k - j) / fact(k - j);
    auto td = todd(c.n);
    mpq_class chi = 0;
    for (int k = 0; k <= c.n; ++k) chi += tw[k] * td[c.n - k];
    return to_int(chi, "Euler characteristic");
}

template <class K>
Mat<K> GradedModuleSlice<K>::by_form(const std::vector<typename K::Elem>& h, int l) const {
    const auto& k = lifts.at(l - lo).field();
    Mat<K> r(k, dim(l + 1), dim(l));
    for (std::size_t i = 0; i < h.size(); ++i)
        if (!k.is_zero(h[i])) r = r + x(static_cast<int>(i), l).scaled(h[i]);
    return r;
}

template <class K>
Mat<K> GradedModuleSlice<K>::coords(int l, const Mat<K>& v) const {
    const auto& Q = quot.at(l - lo);
    const auto& L = lifts.at(l - lo);
    if (L.cols() == 0) return Mat<K>(v.field(), 0, v.cols());
    auto x = solve(Q.hcat(L), v);
    if (!x) throw std::domain_error("vector outside the represented subquotient");
    return x->rows_range(Q.cols(), Q.cols() + L.cols());
}

template <class K>
GradedModuleSlice<K> graded_module(const Complex<K>& m, int q, int lo, int hi) {
    m.validate();
    if (m.n != 3 || m.middle != 0 || m.pmin < -1 || m.pmax() > 1)
        throw std::invalid_argument("graded module needs a complex on P^3 in positions -1..1 with middle 0");
    if (q != 1 && q != 2) throw std::invalid_argument("graded module degree must be 1 or 2");
    const K& k = m.k;
    GradedModuleSlice<K> s;
    s.q = q;
    s.lo = lo;
    s.hi = hi;
    TwistList tw = m.term(q == 1 ? 1 : -1);
    const FormMatrix<K>* d = m.diff(q == 1 ? 0 : -1);
    TwistList tw1 = tw;
    for (auto& a : tw1) a += 1;
    for (int l = lo; l <= hi; ++l) {
        long long amb = 0;
        for (int a : tw) amb += q == 1 ? sdim(3, a + l) : hn_dim(3, a + l);
        auto N = static_cast<std::size_t>(amb);
        auto I = Mat<K>::identity(k, N);
        if (q == 1) {
            Mat<K> img = (d && N) ? column_basis(d->h0_map(l)) : Mat<K>(k, N, 0);
            s.span.push_back(I);
            s.quot.push_back(img);
            s.lifts.push_back(I.select_cols(independent_mod(img, I)));
        } else {
            Mat<K> ker = (d && d->rows() && N) ? kernel_basis(d->hn_map(l)) : I;
            s.span.push_back(ker);
            s.quot.push_back(Mat<K>(k, N, 0));
            s.lifts.push_back(ker);
        }
    }
    for (int l = lo; l < hi; ++l) {
        std::vector<Mat<K>> ml;
        for (int i = 0; i < 4; ++i) {
            FormMatrix<K> xi(k, 4, tw, tw1);
            for (std::size_t r = 0; r < tw.size(); ++r) xi.set(r, r, Form<K>::var(k, 4, i));
            Mat<K> up = q == 1 ? xi.h0_map(l) : xi.hn_map(l);
            const auto& L = s.lifts[l - lo];
            Mat<K> img = L.cols() ? up * L : Mat<K>(k, up.rows(), 0);
            ml.push_back(s.coords(l + 1, img));
        }
        s.mult.push_back(ml);
    }
    return s;
}

int spectrum_window_lo(const ChernData& c) { return static_cast<int>(-c.c2 - 3); }
int spectrum_window_hi(const ChernData& c) { return static_cast<int>(std::max<long long>(c.c2, 0)); }

long long spectrum_h1(const std::vector<int>& k, int l) {
    long long s = 0;
    for (int x : k) s += std::max(0, x + l + 2);
    return s;
}

long long spectrum_h2(const std::vector<int>& k, int l) {
    long long s = 0;
    for (int x : k) s += std::max(0, -x - l - 2);
    return s;
}

namespace {

void fill_flags(SpectrumData& s, const ChernData& c) {
    auto& k = s.k;
    std::sort(k.begin(), k.end());
    std::size_t m = k.size();
    s.connected = true;
    for (std::size_t i = 1; i < m; ++i)
        if (k[i] - k[i - 1] > 1) s.connected = false;
    long long sum = 0;
    for (int x : k) sum += x;
    s.sum_matches_c3 = -2 * sum == c.c3;
    bool has0 = std::find(k.begin(), k.end(), 0) != k.end();
    bool top = m >= 3 && k[m - 3] == -1 && k[m - 2] == -1 && k[m - 1] == -1;
    bool bot = m >= 3 && k[0] == 1 && k[1] == 1 && k[2] == 1;
    s.zero_or_triple = has0 || top || bot;
    s.strict_runs_ok = true;
    for (std::size_t i = 1; i + 1 < m; ++i)
        if (k[i - 1] < k[i] && k[i] < k[i + 1] && k[i + 1] <= 0)
            for (std::size_t j = 1; j <= i; ++j)
                if (k[j - 1] >= k[j]) s.strict_runs_ok = false;
    s.in_allowed_list = true;
    if (c.c2 == 2)
        s.in_allowed_list = k == std::vector<int>{-1, 0} || k == std::vector<int>{0, 0} || k == std::vector<int>{0, 1};
    else if (c.c2 == 3 && !has0)
        s.in_allowed_list = k == std::vector<int>{-1, -1, -1} || k == std::vector<int>{1, 1, 1};
    s.found = true;
}

}  // namespace

std::string SpectrumData::str() const {
    std::ostringstream os;
    if (!found) return "no spectrum: " + failure;
    os << "(";
    for (std::size_t i = 0; i < k.size(); ++i) os << (i ? "," : "") << k[i];
    os << ") connected=" << connected << " sum_c3=" << sum_matches_c3 << " zero_or_triple=" << zero_or_triple
       << " strict_runs=" << strict_runs_ok << " allowed=" << in_allowed_list;
    return os.str();
}

SpectrumData spectrum(const CohTable& t, const ChernData& c) {
    SpectrumData s;
    long long m = c.c2;
    int lo = spectrum_window_lo(c), hi = spectrum_window_hi(c);
    if (t.lo > lo || t.hi < hi) {
        s.failure = "table window must cover [" + std::to_string(lo) + "," + std::to_string(hi) + "]";
        return s;
    }
    if (m < 0) {
        s.failure = "negative c2";
        return s;
    }
    try {
        auto h1 = [&](int l) { return t.h(1, l); };
        auto h2 = [&](int l) { return t.h(2, l); };
        /* #{k >= j} for j >= 1 and #{k <= j} for j <= -1 */
        std::vector<long long> ge(m + 2, 0), le(m + 2, 0);
        for (int j = 1; j <= m + 1; ++j) ge[j] = h1(-j - 1) - h1(-j - 2);
        for (int j = 1; j <= m + 1; ++j) le[j] = h2(j - 3) - h2(j - 2);
        if (ge[m + 1] != 0 || le[m + 1] != 0) {
            s.failure = "|k_i| exceeds c2";
            return s;
        }
        std::vector<int> k;
        for (int j = 1; j <= m; ++j) {
            long long cnt = ge[j] - ge[j + 1];
            if (cnt < 0) {
                s.failure = "h^1 differences are not monotone";
                return s;
            }
            k.insert(k.end(), cnt, j);
            long long cn = le[j] - le[j + 1];
            if (cn < 0) {
                s.failure = "h^2 differences are not monotone";
                return s;
            }
            k.insert(k.end(), cn, -j);
        }
        long long zeros = m - static_cast<long long>(k.size());
        if (zeros < 0) {
            s.failure = "more nonzero entries than c2";
            return s;
        }
        k.insert(k.end(), zeros, 0);
        for (int l = lo; l <= -1; ++l)
            if (spectrum_h1(k, l) != h1(l)) {
                s.failure = "h^1 row not reproduced at l=" + std::to_string(l);
                return s;
            }
        for (int l = -3; l <= hi; ++l)
            if (spectrum_h2(k, l) != h2(l)) {
                s.failure = "h^2 row not reproduced at l=" + std::to_string(l);
                return s;
            }
        s.k = k;
    } catch (const std::domain_error& e) {
        s.failure = e.what();
        return s;
    }
    fill_flags(s, c);
    return s;
}

long long PlaneSpectrum::n_at(int i) const {
    int j = -1 - i;
    return j >= 0 && j < static_cast<int>(n.size()) ? n[j] : 0;
}

long long PlaneSpectrum::q_at(int i) const {
    int j = i + 2;
    return j >= 0 && j < static_cast<int>(q.size()) ? q[j] : 0;
}

template <class K>
bool plane_semistable(const Complex<K>& m, const std::vector<typename K::Elem>& h) {
    auto H = LinearSubspace<K>::plane(h, m.k);
    auto r = restrict_to(m, H);
    auto a = hypercoh(r, -1)[0];
    auto b = hypercoh(dualize(r), -1)[0];
    return a.exact() && b.exact() && a.lo == 0 && b.lo == 0;
}

template <class K>
PlaneSpectrum spectrum_via_plane(const Complex<K>& m, const std::vector<typename K::Elem>& h) {
    PlaneSpectrum ps;
    auto c = chern(m);
    ps.semistable = plane_semistable(m, h);
    if (!ps.semistable) {
        ps.spec.failure = "restriction to the plane is not semistable";
        return ps;
    }
    int c2 = static_cast<int>(c.c2);
    auto g1 = graded_module(m, 1, -c2 - 3, -1);
    auto g2 = graded_module(m, 2, -3, c2);
    for (int i = -1; i >= -c2 - 2; --i) {
        long long d = static_cast<long long>(g1.dim(i));
        long long r = static_cast<long long>(rank(g1.by_form(h, i - 1)));
        ps.n.push_back(d - r);
    }
    for (int i = -2; i <= c2; ++i) {
        long long d = static_cast<long long>(g2.dim(i - 1));
        long long r = static_cast<long long>(rank(g2.by_form(h, i - 1)));
        ps.q.push_back(d - r);
    }
    ps.rank_matches = ps.n_at(-1) + ps.q_at(-1) == c.c2;
    ps.sub_validators = ps.n_at(-1) >= ps.n_at(-2);
    for (int i = 2; i <= c2 + 1; ++i)
        if (ps.n_at(-i - 1) > 0 && !(ps.n_at(-i) > ps.n_at(-i - 1))) ps.sub_validators = false;
    ps.quot_validators = ps.q_at(-2) >= ps.q_at(-1);
    for (int j = -1; j < c2; ++j)
        if (ps.q_at(j + 1) > 0 && !(ps.q_at(j) > ps.q_at(j + 1))) ps.quot_validators = false;
    std::vector<int> k;
    for (int i = 1; i <= c2 + 1; ++i) {
        long long cnt = ps.n_at(-i) - ps.n_at(-i - 1);
        if (cnt < 0) {
            ps.spec.failure = "n_i not monotone";
            return ps;
        }
        k.insert(k.end(), cnt, i - 1);
    }
    for (int i = -1; i <= c2; ++i) {
        long long cnt = ps.q_at(i) - ps.q_at(i + 1);
        if (cnt < 0) {
            ps.spec.failure = "q_i not monotone";
            return ps;
        }
        k.insert(k.end(), cnt, -i - 2);
    }
    ps.spec.k = k;
    fill_flags(ps.spec, c);
    if (static_cast<long long>(k.size()) != c.c2) ps.spec.failure = "rank of K differs from c2";
    return ps;
}

#define MONAD_INST(K)                                                                          \
    template std::vector<CohValue> hypercoh(const Complex<K>&, int);                          \
    template CohTable coh_table(const Complex<K>&, int, int);                                 \
    template ChernData chern(const Complex<K>&);                                              \
    template struct GradedModuleSlice<K>;                                                     \
    template GradedModuleSlice<K> graded_module(const Complex<K>&, int, int, int);            \
    template bool plane_semistable(const Complex<K>&, const std::vector<K::Elem>&);           \
    template PlaneSpectrum spectrum_via_plane(const Complex<K>&, const std::vector<K::Elem>&);

MONAD_INST(Rationals)
MONAD_INST(PrimeField)

}  // namespace monad
