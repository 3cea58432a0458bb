#include "monad/scanners.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdio>
#include <exception>
#include <mutex>
#include <set>
#include <sstream>
#include <stdexcept>
#include <thread>
#include <tuple>
#include <type_traits>

namespace monad {

std::string StabilityResult::str() const {
    std::ostringstream os;
    switch (verdict) {
        case Verdict::Stable: os << "stable"; break;
        case Verdict::Unstable: os << "unstable"; break;
        case Verdict::Unsupported: os << "unsupported"; break;
    }
    os << "\th0=" << h0 << "\th0_dual=" << h0_dual;
    if (!reason.empty()) os << "\t" << reason;
    return os.str();
}

namespace {
std::atomic<unsigned> g_threads{1};
}  // namespace

void set_scan_threads(unsigned n) { g_threads = std::max(1u, n); }
unsigned scan_threads() { return g_threads; }

std::string ScanReport::tsv() const {
    std::ostringstream os;
    os << "# " << universe << "\n";
    os << "key";
    for (const auto& c : columns) os << "\t" << c;
    os << "\n";
    for (const auto& r : records) {
        os << r.key;
        for (const auto& v : r.values) os << "\t" << v;
        os << "\n";
    }
    for (const auto& [k, v] : summary) os << "# " << k << "\t" << v << "\n";
    return os.str();
}

const std::string& ScanReport::value(std::size_t rec, const std::string& col) const {
    for (std::size_t i = 0; i < columns.size(); ++i)
        if (columns[i] == col) return records.at(rec).values.at(i);
    throw std::out_of_range("no column " + col);
}

namespace {

/* out[i] = fn(i), spread over the scan threads; order of completion is irrelevant */
template <class T, class Fn>
std::vector<T> per_item(std::size_t n, Fn fn) {
    std::vector<T> out(n);
    unsigned t = std::min<std::size_t>(std::max(1u, g_threads.load()), std::max<std::size_t>(n, 1));
    if (t <= 1) {
        for (std::size_t i = 0; i < n; ++i) out[i] = fn(i);
        return out;
    }
    std::atomic<std::size_t> next{0};
    std::exception_ptr err;
    std::mutex err_mu;
    auto work = [&] {
        for (std::size_t i; (i = next++) < n;) {
            try {
                out[i] = fn(i);
            } catch (...) {
                std::lock_guard<std::mutex> lock(err_mu);
                if (!err) err = std::current_exception();
            }
        }
    };
    std::vector<std::thread> pool;
    for (unsigned j = 0; j < t; ++j) pool.emplace_back(work);
    for (auto& th : pool) th.join();
    if (err) std::rethrow_exception(err);
    return out;
}

void sort_records(ScanReport& r) {
    std::stable_sort(r.records.begin(), r.records.end(),
                     [](const ScanRecord& a, const ScanRecord& b) { return a.key < b.key; });
}

template <class K>
std::vector<typename K::Elem> normalized(const K& k, std::vector<typename K::Elem> v) {
    for (const auto& x : v)
        if (!k.is_zero(x)) {
            auto s = k.inv(x);
            for (auto& y : v) y = k.mul(y, s);
            break;
        }
    return v;
}

template <class K>
bool all_zero(const K& k, const std::vector<typename K::Elem>& v) {
    for (const auto& x : v)
        if (!k.is_zero(x)) return false;
    return true;
}

template <class K>
std::vector<std::vector<typename K::Elem>> all_points(const K& k, int n) {
    if constexpr (std::is_same_v<K, PrimeField>) {
        std::vector<std::vector<typename K::Elem>> out;
        for (const auto& p : projective_points(k.p(), n)) out.emplace_back(p.begin(), p.end());
        return out;
    } else {
        (void)k;
        (void)n;
        throw std::invalid_argument("exhaustive enumeration needs a finite field");
    }
}

template <class K>
std::vector<typename K::Elem> random_point(const K& k, int n, Rng& rng) {
    std::vector<typename K::Elem> v(static_cast<std::size_t>(n + 1));
    for (auto& x : v) x = k.random(rng);
    return v;
}

template <class K>
long long h0_exact(const Complex<K>& m, int l) {
    auto v = hypercoh(m, l)[0];
    if (!v.exact()) throw std::logic_error("inexact h^0 on a restriction: " + v.str());
    return v.lo;
}

/* binary forms c_0 T0^d + c_1 T0^{d-1} T1 + ... + c_d T1^d */
template <class K>
struct Bin {
    std::vector<typename K::Elem> c;
};

template <class K>
Bin<K> bin_mul(const K& k, const Bin<K>& a, const Bin<K>& b) {
    Bin<K> r{std::vector<typename K::Elem>(a.c.size() + b.c.size() - 1, k.zero())};
    for (std::size_t i = 0; i < a.c.size(); ++i)
        for (std::size_t j = 0; j < b.c.size(); ++j) k.axpy(r.c[i + j], a.c[i], b.c[j]);
    return r;
}

template <class K>
Bin<K> bin_add(const K& k, const Bin<K>& a, const Bin<K>& b, bool minus = false) {
    Bin<K> r = a;
    for (std::size_t i = 0; i < b.c.size(); ++i) r.c[i] = minus ? k.sub(r.c[i], b.c[i]) : k.add(r.c[i], b.c[i]);
    return r;
}

template <class K>
bool bin_zero(const K& k, const Bin<K>& a) {
    return all_zero(k, a.c);
}

/* univariate polys, low degree first, no trailing zeros */
template <class K>
using Poly = std::vector<typename K::Elem>;

template <class K>
void trim(const K& k, Poly<K>& p) {
    while (!p.empty() && k.is_zero(p.back())) p.pop_back();
}

template <class K>
Poly<K> poly_mod(const K& k, Poly<K> a, const Poly<K>& b) {
    trim(k, a);
    auto lead = k.inv(b.back());
    while (a.size() >= b.size()) {
        auto q = k.mul(a.back(), lead);
        std::size_t sh = a.size() - b.size();
        for (std::size_t i = 0; i < b.size(); ++i) a[sh + i] = k.sub(a[sh + i], k.mul(q, b[i]));
        trim(k, a);
    }
    return a;
}

template <class K>
Poly<K> poly_gcd(const K& k, Poly<K> a, Poly<K> b) {
    trim(k, a);
    trim(k, b);
    while (!b.empty()) {
        auto r = poly_mod(k, a, b);
        a = b;
        b = r;
    }
    return a;
}

template <class E>
int deg(const std::vector<E>& p) {
    return static_cast<int>(p.size()) - 1;
}

/* gcd of binary forms: T0^m times a univariate part in t = T1/T0 */
template <class K>
struct BinGcd {
    bool any = false;
    int m_inf = 0;
    Poly<K> f;
    int degree() const { return m_inf + std::max(0, static_cast<int>(f.size()) - 1); }
};

template <class K>
BinGcd<K> bin_gcd(const K& k, const std::vector<Bin<K>>& forms) {
    BinGcd<K> g;
    for (const auto& b : forms) {
        if (bin_zero(k, b)) continue;
        int d = static_cast<int>(b.c.size()) - 1;
        int m = 0;
        while (k.is_zero(b.c[static_cast<std::size_t>(d - m)])) ++m;
        Poly<K> f(b.c.begin(), b.c.end());
        trim(k, f);
        if (!g.any) {
            g.any = true;
            g.m_inf = m;
            g.f = f;
        } else {
            g.m_inf = std::min(g.m_inf, m);
            g.f = poly_gcd(k, g.f, f);
        }
    }
    if (g.any) {
        auto s = k.inv(g.f.back());
        for (auto& x : g.f) x = k.mul(x, s);
    }
    return g;
}

}  // namespace

template <class K>
std::string point_key(const K& k, const std::vector<typename K::Elem>& v) {
    std::string s;
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i) s += ",";
        s += k.str(v[i]);
    }
    return s;
}

template <class K>
StabilityResult stability_check(const Complex<K>& m) {
    StabilityResult r;
    auto c = chern(m);
    if (c.rank != 3 || c.c1 != 0) {
        r.reason = "needs rank 3 and c1 = 0, got " + c.str();
        return r;
    }
    auto a = hypercoh(m, 0)[0], b = hypercoh(dualize(m), 0)[0];
    if (!a.exact() || !b.exact()) {
        r.reason = "h^0 not determined: " + a.str() + " " + b.str();
        return r;
    }
    r.h0 = a.lo;
    r.h0_dual = b.lo;
    r.verdict = (a.lo == 0 && b.lo == 0) ? Verdict::Stable : Verdict::Unstable;
    return r;
}

template <class K>
std::vector<std::vector<typename K::Elem>> plane_set(const K& k, const SampleSpec& s) {
    if (s.exhaustive) return all_points(k, 3);
    std::vector<std::vector<typename K::Elem>> out;
    std::set<std::string> seen;
    Rng rng(s.seed);
    for (std::size_t tries = 0; out.size() < s.count && tries < 50 * s.count + 100; ++tries) {
        auto v = random_point(k, 3, rng);
        if (all_zero(k, v)) continue;
        v = normalized(k, v);
        if (seen.insert(point_key(k, v)).second) out.push_back(v);
    }
    return out;
}

template <class K>
std::vector<typename K::Elem> pluecker(const LinearSubspace<K>& line) {
    const K& k = line.param.field();
    std::vector<typename K::Elem> p;
    for (int i = 0; i < 4; ++i)
        for (int j = i + 1; j < 4; ++j)
            p.push_back(k.sub(k.mul(line.param(0, i), line.param(1, j)), k.mul(line.param(0, j), line.param(1, i))));
    return normalized(k, p);
}

template <class K>
std::vector<LinearSubspace<K>> line_set(const K& k, const SampleSpec& s) {
    std::vector<LinearSubspace<K>> out;
    std::set<std::string> seen;
    auto add = [&](const std::vector<typename K::Elem>& a, const std::vector<typename K::Elem>& b) {
        Mat<K> ab(k, 2, 4);
        for (std::size_t j = 0; j < 4; ++j) ab(0, j) = a[j], ab(1, j) = b[j];
        if (rank(ab) != 2) return;
        auto L = LinearSubspace<K>::from_points({a, b}, k);
        if (seen.insert(point_key(k, pluecker(L))).second) out.push_back(L);
    };
    if (s.exhaustive) {
        auto pts = all_points(k, 3);
        for (std::size_t i = 0; i < pts.size(); ++i)
            for (std::size_t j = i + 1; j < pts.size(); ++j) add(pts[i], pts[j]);
        return out;
    }
    Rng rng(s.seed);
    for (std::size_t tries = 0; out.size() < s.count && tries < 50 * s.count + 100; ++tries) {
        auto a = random_point(k, 3, rng);
        auto b = random_point(k, 3, rng);
        add(a, b);
    }
    return out;
}

template <class K>
long long restricted_h0(const Complex<K>& m, const LinearSubspace<K>& sub, int l) {
    return h0_exact(restrict_to(m, sub), l);
}

namespace {

template <class K>
int order_on(const Complex<K>& dual_restricted) {
    int r = 0;
    while (r < 64 && h0_exact(dual_restricted, -(r + 1)) > 0) ++r;
    return r;
}

}  // namespace

template <class K>
int unstable_plane_order(const Complex<K>& m, const std::vector<typename K::Elem>& h) {
    return order_on(dualize(restrict_to(m, LinearSubspace<K>::plane(h, m.k))));
}

template <class K>
std::vector<std::vector<typename K::Elem>> unstable_plane_candidates(const Complex<K>& m, int r) {
    auto md = dualize(m);
    std::vector<std::vector<typename K::Elem>> out;
    if (h0_exact(md, -r) != 0) return out;
    auto g = graded_module(md, 1, -r - 1, -r);
    if (g.dim(-r - 1) != 1) return out;
    const K& k = m.k;
    Mat<K> a(k, g.dim(-r), 4);
    for (int i = 0; i < 4; ++i) a.set_block(0, static_cast<std::size_t>(i), g.x(i, -r - 1));
    auto ker = kernel_basis(a);
    for (std::size_t c = 0; c < ker.cols(); ++c) {
        std::vector<typename K::Elem> h(4);
        for (std::size_t i = 0; i < 4; ++i) h[i] = ker(i, c);
        out.push_back(normalized(k, h));
    }
    return out;
}

template <class K>
ScanReport restriction_stability_sample(const Complex<K>& m, const std::vector<std::vector<typename K::Elem>>& planes,
                                        const std::string& universe) {
    const K& k = m.k;
    ScanReport rep;
    rep.universe = universe;
    rep.columns = {"h0_EH", "h0_EHdual", "unstable_order"};
    long long pos = 0, posd = 0, unst = 0, maxh = 0;
    int maxo = 0;
    auto res = per_item<std::tuple<long long, long long, int>>(planes.size(), [&](std::size_t i) {
        auto r = restrict_to(m, LinearSubspace<K>::plane(planes[i], k));
        auto rd = dualize(r);
        return std::make_tuple(h0_exact(r, 0), h0_exact(rd, 0), order_on(rd));
    });
    for (std::size_t i = 0; i < planes.size(); ++i) {
        const auto& h = planes[i];
        auto [a, b, o] = res[i];
        pos += a > 0;
        posd += b > 0;
        unst += o > 0;
        maxh = std::max(maxh, a);
        maxo = std::max(maxo, o);
        rep.records.push_back({point_key(k, normalized(k, h)), {std::to_string(a), std::to_string(b), std::to_string(o)}});
    }
    sort_records(rep);
    rep.summary["planes"] = std::to_string(planes.size());
    rep.summary["h0_EH_positive"] = std::to_string(pos);
    rep.summary["h0_EHdual_positive"] = std::to_string(posd);
    rep.summary["max_h0_EH"] = std::to_string(maxh);
    rep.summary["unstable_planes"] = std::to_string(unst);
    rep.summary["max_unstable_order"] = std::to_string(maxo);
    return rep;
}

template <class K>
Mat<K> MuData<K>::at(const std::vector<typename K::Elem>& h) const {
    if (M.empty()) throw std::logic_error("empty mu data");
    Mat<K> s(M[0].field(), rows, d);
    for (std::size_t i = 0; i < 4; ++i) s = s + M[i].scaled(h.at(i));
    return s;
}

template <class K>
std::size_t MuData<K>::corank(const std::vector<typename K::Elem>& h) const {
    if (d == 0) return 0;
    return d - rank(at(h));
}

template <class K>
MuData<K> mu_build(const Complex<K>& m, Side side) {
    auto mm = side == Side::Dual ? dualize(m) : m;
    auto g = graded_module(mm, 1, -1, 0);
    MuData<K> mu;
    mu.d = g.dim(-1);
    mu.rows = g.dim(0);
    for (int i = 0; i < 4; ++i) mu.M.push_back(g.x(i, -1));
    return mu;
}

template <class K>
ScanReport mu_corank_scan(const MuData<K>& mu, const std::vector<std::vector<typename K::Elem>>& planes,
                          const std::string& universe) {
    ScanReport rep;
    rep.universe = universe;
    rep.columns = {"corank"};
    std::map<std::size_t, long long> hist;
    auto cs = per_item<std::size_t>(mu.M.empty() ? 0 : planes.size(), [&](std::size_t i) { return mu.corank(planes[i]); });
    for (std::size_t i = 0; i < cs.size(); ++i) {
        const auto& h = planes[i];
        auto c = cs[i];
        ++hist[c];
        rep.records.push_back({point_key(mu.M[0].field(), h), {std::to_string(c)}});
    }
    sort_records(rep);
    rep.summary["d"] = std::to_string(mu.d);
    for (const auto& [c, n] : hist) rep.summary["corank=" + std::to_string(c)] = std::to_string(n);
    return rep;
}

template <class K>
std::optional<int> kernel_degree(const MuData<K>& mu) {
    if (mu.d == 0 || mu.M.empty()) return std::nullopt;
    const K& k = mu.M[0].field();
    for (int s = 1; s <= 3; ++s) {
        const auto& src = monomial_basis(3, s - 1);
        const auto& tgt = monomial_basis(3, s);
        Mat<K> sys(k, mu.rows * tgt.size(), mu.d * src.size());
        for (std::size_t b = 0; b < src.size(); ++b)
            for (int i = 0; i < 4; ++i) {
                Exps e = src[b];
                ++e[static_cast<std::size_t>(i)];
                std::size_t c = monomial_index(e);
                for (std::size_t r = 0; r < mu.rows; ++r)
                    for (std::size_t j = 0; j < mu.d; ++j)
                        k.axpy(sys(r * tgt.size() + c, j * src.size() + b), mu.M[static_cast<std::size_t>(i)](r, j),
                               k.one());
            }
        if (rank(sys) < sys.cols()) return -s;
    }
    return std::nullopt;
}

template <class K>
ScanReport jumping_line_scan(const Complex<K>& m, const std::vector<LinearSubspace<K>>& lines,
                             const std::string& universe) {
    const K& k = m.k;
    ScanReport rep;
    rep.universe = universe;
    rep.columns = {"split_dual", "h1_dual"};
    auto md = dualize(m);
    std::map<std::string, long long> types;
    long long jumping = 0;
    auto splits = per_item<SplitResult<K>>(lines.size(), [&](std::size_t i) { return splitting_type(restrict_to(md, lines[i])); });
    for (std::size_t i = 0; i < lines.size(); ++i) {
        const auto& L = lines[i];
        const auto& s = splits[i];
        std::string t = s.ok ? s.split.str() : "fail:" + s.failure;
        long long h1 = s.ok ? h1_of(s.split) : -1;
        ++types[t];
        jumping += h1 >= 1;
        rep.records.push_back({point_key(k, pluecker(L)), {t, std::to_string(h1)}});
    }
    sort_records(rep);
    rep.summary["lines"] = std::to_string(lines.size());
    rep.summary["jumping"] = std::to_string(jumping);
    std::string generic;
    long long best = -1;
    for (const auto& [t, n] : types) {
        rep.summary["type " + t] = std::to_string(n);
        if (n > best) best = n, generic = t;
    }
    rep.summary["generic_type"] = generic;
    if constexpr (std::is_same_v<K, PrimeField>) {
        if (jumping > 0) {
            /* F_p-points of a d-dimensional family grow like p^d */
            char buf[32];
            std::snprintf(buf, sizeof buf, "%.2f", std::log(static_cast<double>(jumping)) / std::log(double(k.p())));
            rep.summary["jumping_dim_estimate"] = buf;
        }
    }
    return rep;
}

BilinearCriterion bilinear_criteria(long long a, long long b, long long c) {
    BilinearCriterion r;
    r.h2_rm4 = a;
    r.h2_rm3 = b;
    r.h2_rm2 = c;
    r.applicable = c == 0;
    r.fires = r.applicable && a <= b + 2;
    return r;
}

BilinearCriterion bilinear_criteria(const CohTable& t, int r) {
    return bilinear_criteria(t.h(2, r - 4), t.h(2, r - 3), t.h(2, r - 2));
}

std::string PencilClass::str() const {
    std::ostringstream os;
    os << "rank2_everywhere=" << (rank2_everywhere ? "yes" : "no") << "\tgeneric_rank=" << (generic_rank3 ? 3 : 2)
       << "\ttorsion_length=" << torsion_length << "\tmultiplicities=(";
    for (std::size_t i = 0; i < multiplicities.size(); ++i) os << (i ? "," : "") << multiplicities[i];
    os << ")\tfp_points=" << fp_points << "\tcandidates=";
    if (candidates.empty()) os << "none";
    for (std::size_t i = 0; i < candidates.size(); ++i) os << (i ? "," : "") << candidates[i];
    if (!note.empty()) os << "\t" << note;
    return os.str();
}

template <class K>
PencilClass pencil_classify(const FormMatrix<K>& phi) {
    const K& k = phi.field();
    if (phi.rows() != 2 || phi.cols() != 3 || phi.src() != TwistList{0, 0, 0} || phi.tgt() != TwistList{1, 1})
        throw std::invalid_argument("pencil_classify needs a 2x3 matrix of linear forms 3O -> 2O(1)");
    auto nv = static_cast<std::size_t>(phi.nvars());
    /* psi[j][c] = T0 coef(X_j, phi[0][c]) + T1 coef(X_j, phi[1][c]) */
    std::vector<std::vector<Bin<K>>> psi(nv, std::vector<Bin<K>>(3));
    for (std::size_t j = 0; j < nv; ++j)
        for (std::size_t c = 0; c < 3; ++c) {
            psi[j][c].c.assign(2, k.zero());
            for (std::size_t r = 0; r < 2; ++r)
                if (!phi.at(r, c).is_zero()) psi[j][c].c[r] = phi.at(r, c).coeff(j);
        }
    std::vector<Bin<K>> m2, m3;
    for (std::size_t a = 0; a < nv; ++a)
        for (std::size_t b = a + 1; b < nv; ++b)
            for (std::size_t c = 0; c < 3; ++c)
                for (std::size_t d = c + 1; d < 3; ++d)
                    m2.push_back(bin_add(k, bin_mul(k, psi[a][c], psi[b][d]), bin_mul(k, psi[a][d], psi[b][c]), true));
    for (std::size_t a = 0; a < nv; ++a)
        for (std::size_t b = a + 1; b < nv; ++b)
            for (std::size_t e = b + 1; e < nv; ++e) {
                const auto& A = psi[a];
                const auto& B = psi[b];
                const auto& C = psi[e];
                auto minor = [&](std::size_t x, std::size_t y) {
                    return bin_add(k, bin_mul(k, B[x], C[y]), bin_mul(k, B[y], C[x]), true);
                };
                auto t0 = bin_mul(k, A[0], minor(1, 2));
                auto t1 = bin_mul(k, A[1], minor(0, 2));
                auto t2 = bin_mul(k, A[2], minor(0, 1));
                m3.push_back(bin_add(k, bin_add(k, t0, t1, true), t2));
            }
    PencilClass pc;
    auto g2 = bin_gcd(k, m2);
    pc.rank2_everywhere = g2.any && g2.degree() == 0;
    auto g3 = bin_gcd(k, m3);
    pc.generic_rank3 = g3.any;
    if (!pc.rank2_everywhere) {
        pc.note = "rank <= 1 somewhere on P^1: invalid for a c3=4 monad";
        return pc;
    }
    if (!pc.generic_rank3) {
        pc.note = "generically rank 2: cokernel is a line bundle, excluded case";
        return pc;
    }
    pc.torsion_length = g3.degree();
    int df = deg(g3.f);
    bool closure_ok = true;
    if constexpr (std::is_same_v<K, PrimeField>) closure_ok = k.p() > 3;
    if constexpr (std::is_same_v<K, PrimeField>) {
        int cnt = g3.m_inf > 0 ? 1 : 0;
        for (std::uint32_t t = 0; t < k.p(); ++t) {
            typename K::Elem v = k.zero(), pw = k.one();
            for (const auto& c : g3.f) {
                k.axpy(v, c, pw);
                pw = k.mul(pw, t);
            }
            cnt += k.is_zero(v);
        }
        pc.fp_points = cnt;
    }
    auto by_length = [&]() -> std::vector<int> {
        switch (pc.torsion_length) {
            case 3: return {1, 2, 3};
            case 2: return {4, 5};
            case 1: return {6};
            default: return {7};
        }
    };
    if (!closure_ok) {
        pc.candidates = by_length();
        pc.note = "characteristic <= 3: multiplicities not resolved";
        return pc;
    }
    Poly<K> deriv;
    for (std::size_t i = 1; i < g3.f.size(); ++i) deriv.push_back(k.mul(k.from_int(static_cast<long long>(i)), g3.f[i]));
    trim(k, deriv);
    int distinct = df <= 0 ? 0 : df - (deriv.empty() ? df : deg(poly_gcd(k, g3.f, deriv)));
    std::vector<int> parts;
    if (df == 3) parts = distinct == 1 ? std::vector<int>{3} : distinct == 2 ? std::vector<int>{2, 1} : std::vector<int>{1, 1, 1};
    if (df == 2) parts = distinct == 1 ? std::vector<int>{2} : std::vector<int>{1, 1};
    if (df == 1) parts = {1};
    if (g3.m_inf > 0) parts.push_back(g3.m_inf);
    std::sort(parts.rbegin(), parts.rend());
    pc.multiplicities = parts;
    static const std::map<std::vector<int>, int> table{{{3}, 1},    {{2, 1}, 2}, {{1, 1, 1}, 3}, {{2}, 4},
                                                       {{1, 1}, 5}, {{1}, 6},    {{}, 7}};
    auto it = table.find(parts);
    if (it == table.end()) {
        pc.note = "torsion longer than 3";
        return pc;
    }
    pc.candidates = {it->second};
    return pc;
}

#define MONAD_INST(K)                                                                                              \
    template std::string point_key(const K&, const std::vector<K::Elem>&);                                         \
    template StabilityResult stability_check(const Complex<K>&);                                                   \
    template std::vector<std::vector<K::Elem>> plane_set(const K&, const SampleSpec&);                             \
    template std::vector<K::Elem> pluecker(const LinearSubspace<K>&);                                              \
    template std::vector<LinearSubspace<K>> line_set(const K&, const SampleSpec&);                                 \
    template long long restricted_h0(const Complex<K>&, const LinearSubspace<K>&, int);                            \
    template std::vector<std::vector<K::Elem>> unstable_plane_candidates(const Complex<K>&, int);                  \
    template int unstable_plane_order(const Complex<K>&, const std::vector<K::Elem>&);                             \
    template ScanReport restriction_stability_sample(const Complex<K>&, const std::vector<std::vector<K::Elem>>&, \
                                                     const std::string&);                                          \
    template struct MuData<K>;                                                                                     \
    template MuData<K> mu_build(const Complex<K>&, Side);                                                          \
    template ScanReport mu_corank_scan(const MuData<K>&, const std::vector<std::vector<K::Elem>>&,                 \
                                       const std::string&);                                                        \
    template std::optional<int> kernel_degree(const MuData<K>&);                                                   \
    template ScanReport jumping_line_scan(const Complex<K>&, const std::vector<LinearSubspace<K>>&,                 \
                                          const std::string&);                                                     \
    template PencilClass pencil_classify(const FormMatrix<K>&);

MONAD_INST(Rationals)
MONAD_INST(PrimeField)

}  // namespace monad
