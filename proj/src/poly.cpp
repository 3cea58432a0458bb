#include "monad/poly.hpp"

#include <map>
#include <memory>
#include <mutex>
#include <sstream>
#include <stdexcept>

namespace monad {

long long binom(long long n, long long k) {
    if (k < 0 || n < 0 || k > n) return 0;
    if (k > n - k) k = n - k;
    long long r = 1;
    for (long long i = 1; i <= k; ++i) r = r * (n - k + i) / i;
    return r;
}

long long sdim(int n, int d) { return d < 0 ? 0 : binom(d + n, n); }

long long hn_dim(int n, int a) { return sdim(n, -a - n - 1); }

namespace {

void fill_basis(int pos, int left, Exps& cur, std::vector<Exps>& out) {
    int last = static_cast<int>(cur.size()) - 1;
    if (pos == last) {
        cur[pos] = left;
        out.push_back(cur);
        return;
    }
    for (int v = left; v >= 0; --v) {
        cur[pos] = v;
        fill_basis(pos + 1, left - v, cur, out);
    }
}

}  // namespace

const std::vector<Exps>& monomial_basis(int n, int d) {
    static std::mutex mu;
    static std::map<std::pair<int, int>, std::unique_ptr<std::vector<Exps>>> cache;
    if (d < 0) {
        static const std::vector<Exps> empty;
        return empty;
    }
    std::lock_guard<std::mutex> lock(mu);
    auto& slot = cache[{n, d}];
    if (!slot) {
        slot = std::make_unique<std::vector<Exps>>();
        Exps cur(n + 1, 0);
        fill_basis(0, d, cur, *slot);
    }
    return *slot;
}

std::size_t monomial_index(const Exps& e) {
    int n = static_cast<int>(e.size()) - 1;
    int r = 0;
    for (int x : e) r += x;
    long long idx = 0;
    for (int i = 0; i < n; ++i) {
        for (int v = e[i] + 1; v <= r; ++v) idx += binom(r - v + n - i - 1, n - i - 1);
        r -= e[i];
    }
    return static_cast<std::size_t>(idx);
}

template <class K>
Form<K>::Form(const K& k, int nvars, int degree)
    : k_(k), nvars_(nvars), deg_(degree), c_(static_cast<std::size_t>(sdim(nvars - 1, degree)), k.zero()) {}

template <class K>
Form<K> Form<K>::var(const K& k, int nvars, int i) {
    Form f(k, nvars, 1);
    f.c_[i] = k.one();
    return f;
}

template <class K>
Form<K> Form<K>::constant(const K& k, int nvars, const E& c) {
    Form f(k, nvars, 0);
    f.c_[0] = c;
    return f;
}

template <class K>
Form<K> Form<K>::from_terms(const K& k, int nvars, int degree, const std::vector<std::pair<E, Exps>>& terms) {
    Form f(k, nvars, degree);
    for (const auto& [c, e] : terms) {
        int d = 0;
        for (int x : e) d += x;
        if (static_cast<int>(e.size()) != nvars || d != degree)
            throw std::invalid_argument("term does not match form degree");
        auto& slot = f.c_[monomial_index(e)];
        slot = k.add(slot, c);
    }
    return f;
}

template <class K>
typename K::Elem Form<K>::coeff_of(const Exps& e) const {
    return c_[monomial_index(e)];
}

template <class K>
bool Form<K>::is_zero() const {
    for (const auto& x : c_)
        if (!k_.is_zero(x)) return false;
    return true;
}

template <class K>
bool Form<K>::operator==(const Form& o) const {
    if (is_zero() && o.is_zero()) return true;
    if (deg_ != o.deg_ || nvars_ != o.nvars_) return false;
    for (std::size_t i = 0; i < c_.size(); ++i)
        if (!k_.eq(c_[i], o.c_[i])) return false;
    return true;
}

template <class K>
Form<K> Form<K>::operator+(const Form& o) const {
    if (deg_ != o.deg_) {
        if (o.is_zero()) return *this;
        if (is_zero()) return o;
        throw std::invalid_argument("sum of forms of different degrees");
    }
    Form r(*this);
    for (std::size_t i = 0; i < c_.size(); ++i) r.c_[i] = k_.add(c_[i], o.c_[i]);
    return r;
}

template <class K>
Form<K> Form<K>::operator-() const {
    Form r(*this);
    for (auto& x : r.c_) x = k_.neg(x);
    return r;
}

template <class K>
Form<K> Form<K>::operator-(const Form& o) const {
    return *this + (-o);
}

template <class K>
Form<K> Form<K>::operator*(const Form& o) const {
    Form r(k_, nvars_, deg_ < 0 || o.deg_ < 0 ? -1 : deg_ + o.deg_);
    if (r.deg_ < 0) return r;
    const auto& ba = monomial_basis(nvars_ - 1, deg_);
    const auto& bb = monomial_basis(nvars_ - 1, o.deg_);
    Exps e(nvars_);
    for (std::size_t i = 0; i < c_.size(); ++i) {
        if (k_.is_zero(c_[i])) continue;
        for (std::size_t j = 0; j < o.c_.size(); ++j) {
            if (k_.is_zero(o.c_[j])) continue;
            for (int v = 0; v < nvars_; ++v) e[v] = ba[i][v] + bb[j][v];
            k_.axpy(r.c_[monomial_index(e)], c_[i], o.c_[j]);
        }
    }
    return r;
}

template <class K>
Form<K> Form<K>::scaled(const E& s) const {
    Form r(*this);
    for (auto& x : r.c_) x = k_.mul(x, s);
    return r;
}

template <class K>
typename K::Elem Form<K>::eval(const std::vector<E>& x) const {
    E acc = k_.zero();
    if (deg_ < 0) return acc;
    const auto& b = monomial_basis(nvars_ - 1, deg_);
    for (std::size_t i = 0; i < c_.size(); ++i) {
        if (k_.is_zero(c_[i])) continue;
        E t = c_[i];
        for (int v = 0; v < nvars_; ++v)
            for (int q = 0; q < b[i][v]; ++q) t = k_.mul(t, x[v]);
        acc = k_.add(acc, t);
    }
    return acc;
}

template <class K>
std::vector<std::pair<typename K::Elem, Exps>> Form<K>::terms() const {
    std::vector<std::pair<E, Exps>> out;
    if (deg_ < 0) return out;
    const auto& b = monomial_basis(nvars_ - 1, deg_);
    for (std::size_t i = 0; i < c_.size(); ++i)
        if (!k_.is_zero(c_[i])) out.emplace_back(c_[i], b[i]);
    return out;
}

template <class K>
std::string Form<K>::str() const {
    auto ts = terms();
    if (ts.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [c, e] : ts) {
        mpq_class q = k_.to_q(c);
        bool mono = false;
        for (int x : e) mono |= x > 0;
        if (!first) os << (sgn(q) < 0 ? " - " : " + ");
        else if (sgn(q) < 0) os << "-";
        mpq_class a = abs(q);
        if (a != 1 || !mono) os << a.get_str() << (mono ? "*" : "");
        bool firstv = true;
        for (int v = 0; v < nvars_; ++v) {
            if (e[v] == 0) continue;
            os << (firstv ? "" : "*") << "X" << v;
            if (e[v] > 1) os << "^" << e[v];
            firstv = false;
        }
        first = false;
    }
    return os.str();
}

template <class K>
Mat<K> mult_matrix(const Form<K>& f, int d) {
    const K& k = f.field();
    int n = f.nvars() - 1;
    int e = f.degree();
    std::size_t rows = static_cast<std::size_t>(sdim(n, d + e));
    std::size_t cols = static_cast<std::size_t>(sdim(n, d));
    Mat<K> m(k, rows, cols);
    if (e < 0 || d < 0) return m;
    const auto& bd = monomial_basis(n, d);
    auto ts = f.terms();
    Exps ex(n + 1);
    for (std::size_t j = 0; j < cols; ++j)
        for (const auto& [c, u] : ts) {
            for (int v = 0; v <= n; ++v) ex[v] = u[v] + bd[j][v];
            auto& slot = m(monomial_index(ex), j);
            slot = k.add(slot, c);
        }
    return m;
}

template <class K>
LinearSubspace<K> LinearSubspace<K>::from_points(const std::vector<std::vector<typename K::Elem>>& pts, const K& k) {
    if (pts.empty()) throw std::invalid_argument("subspace needs at least one point");
    Mat<K> p(k, pts.size(), pts[0].size());
    for (std::size_t i = 0; i < pts.size(); ++i)
        for (std::size_t j = 0; j < pts[i].size(); ++j) p(i, j) = pts[i][j];
    if (rank(p) != pts.size()) throw std::invalid_argument("subspace points are dependent");
    return {p};
}

template <class K>
LinearSubspace<K> LinearSubspace<K>::from_equations(const Mat<K>& eqs) {
    auto ker = kernel_basis(eqs);
    if (ker.cols() == 0) throw std::invalid_argument("equations cut out the empty set");
    return {ker.transpose()};
}

template <class K>
LinearSubspace<K> LinearSubspace<K>::plane(const std::vector<typename K::Elem>& h, const K& k) {
    Mat<K> eq(k, 1, h.size());
    for (std::size_t j = 0; j < h.size(); ++j) eq(0, j) = h[j];
    if (eq.is_zero()) throw std::invalid_argument("zero linear form");
    return from_equations(eq);
}

template <class K>
Mat<K> LinearSubspace<K>::equations() const {
    return kernel_basis(param).transpose();
}

template <class K>
bool LinearSubspace<K>::contains(const std::vector<typename K::Elem>& x) const {
    Mat<K> pt(param.field(), 1, x.size());
    for (std::size_t j = 0; j < x.size(); ++j) pt(0, j) = x[j];
    return rank(param.vcat(pt)) == param.rows();
}

template <class K>
Form<K> substitute(const Form<K>& f, const LinearSubspace<K>& sub) {
    const K& k = f.field();
    int nv = f.nvars();
    if (nv != static_cast<int>(sub.param.cols())) throw std::invalid_argument("substitute: variable count mismatch");
    int mv = static_cast<int>(sub.param.rows());
    Form<K> out(k, mv, f.degree());
    if (f.degree() < 0) return out;
    /* powers of the restricted coordinates */
    std::vector<std::vector<Form<K>>> pw(nv);
    for (int j = 0; j < nv; ++j) {
        Form<K> lj(k, mv, 1);
        for (int i = 0; i < mv; ++i) lj.coeff(i) = sub.param(i, j);
        pw[j].push_back(Form<K>::constant(k, mv, k.one()));
        for (int q = 1; q <= f.degree(); ++q) pw[j].push_back(pw[j].back() * lj);
    }
    for (const auto& [c, e] : f.terms()) {
        Form<K> t = Form<K>::constant(k, mv, c);
        for (int j = 0; j < nv; ++j)
            if (e[j]) t = t * pw[j][e[j]];
        out = out + t;
    }
    return out;
}

template <class K>
std::vector<typename K::Elem> row_vec(const Mat<K>& m, std::size_t i) {
    std::vector<typename K::Elem> v(m.cols());
    for (std::size_t j = 0; j < m.cols(); ++j) v[j] = m(i, j);
    return v;
}

std::vector<std::vector<std::uint32_t>> projective_points(std::uint32_t p, int n) {
    /* first nonzero coordinate equal to 1 */
    std::vector<std::vector<std::uint32_t>> out;
    for (int lead = 0; lead <= n; ++lead) {
        int free = n - lead;
        std::uint64_t count = 1;
        for (int i = 0; i < free; ++i) count *= p;
        for (std::uint64_t c = 0; c < count; ++c) {
            std::vector<std::uint32_t> x(n + 1, 0);
            x[lead] = 1;
            std::uint64_t r = c;
            for (int i = n; i > lead; --i) {
                x[i] = static_cast<std::uint32_t>(r % p);
                r /= p;
            }
            out.push_back(std::move(x));
        }
    }
    return out;
}

#define MONAD_INST(K)                                                        \
    template class Form<K>;                                                 \
    template struct LinearSubspace<K>;                                      \
    template Mat<K> mult_matrix(const Form<K>&, int);                       \
    template Form<K> substitute(const Form<K>&, const LinearSubspace<K>&);  \
    template std::vector<typename K::Elem> row_vec(const Mat<K>&, std::size_t);

MONAD_INST(Rationals)
MONAD_INST(PrimeField)

}  // namespace monad
