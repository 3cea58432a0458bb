#include "monad/mat.hpp"

#include <sstream>
#include <stdexcept>
#include <utility>

namespace monad {

template <class K>
Mat<K> Mat<K>::operator*(const Mat& b) const {
    if (c_ != b.r_) throw std::invalid_argument("matrix product shape mismatch");
    Mat out(k_, r_, b.c_);
    for (std::size_t i = 0; i < r_; ++i)
        for (std::size_t l = 0; l < c_; ++l) {
            const E& x = (*this)(i, l);
            if (k_.is_zero(x)) continue;
            for (std::size_t j = 0; j < b.c_; ++j) k_.axpy(out(i, j), x, b(l, j));
        }
    return out;
}

template <class K>
Mat<K> Mat<K>::operator+(const Mat& b) const {
    if (r_ != b.r_ || c_ != b.c_) throw std::invalid_argument("matrix sum shape mismatch");
    Mat out(*this);
    for (std::size_t i = 0; i < a_.size(); ++i) out.a_[i] = k_.add(a_[i], b.a_[i]);
    return out;
}

template <class K>
Mat<K> Mat<K>::operator-(const Mat& b) const {
    if (r_ != b.r_ || c_ != b.c_) throw std::invalid_argument("matrix difference shape mismatch");
    Mat out(*this);
    for (std::size_t i = 0; i < a_.size(); ++i) out.a_[i] = k_.sub(a_[i], b.a_[i]);
    return out;
}

template <class K>
Mat<K> Mat<K>::scaled(const E& s) const {
    Mat out(*this);
    for (auto& x : out.a_) x = k_.mul(x, s);
    return out;
}

template <class K>
Mat<K> Mat<K>::cols_range(std::size_t j0, std::size_t j1) const {
    Mat out(k_, r_, j1 - j0);
    for (std::size_t i = 0; i < r_; ++i)
        for (std::size_t j = j0; j < j1; ++j) out(i, j - j0) = (*this)(i, j);
    return out;
}

template <class K>
Mat<K> Mat<K>::rows_range(std::size_t i0, std::size_t i1) const {
    Mat out(k_, i1 - i0, c_);
    for (std::size_t i = i0; i < i1; ++i)
        for (std::size_t j = 0; j < c_; ++j) out(i - i0, j) = (*this)(i, j);
    return out;
}

template <class K>
Mat<K> Mat<K>::select_cols(const std::vector<std::size_t>& js) const {
    Mat out(k_, r_, js.size());
    for (std::size_t i = 0; i < r_; ++i)
        for (std::size_t j = 0; j < js.size(); ++j) out(i, j) = (*this)(i, js[j]);
    return out;
}

template <class K>
Mat<K> Mat<K>::hcat(const Mat& b) const {
    if (r_ != b.r_ && c_ != 0 && b.c_ != 0) throw std::invalid_argument("hcat shape mismatch");
    std::size_t r = c_ == 0 ? b.r_ : r_;
    Mat out(k_, r, c_ + b.c_);
    if (c_) out.set_block(0, 0, *this);
    if (b.c_) out.set_block(0, c_, b);
    return out;
}

template <class K>
Mat<K> Mat<K>::vcat(const Mat& b) const {
    if (c_ != b.c_ && r_ != 0 && b.r_ != 0) throw std::invalid_argument("vcat shape mismatch");
    std::size_t c = r_ == 0 ? b.c_ : c_;
    Mat out(k_, r_ + b.r_, c);
    if (r_) out.set_block(0, 0, *this);
    if (b.r_) out.set_block(r_, 0, b);
    return out;
}

template <class K>
void Mat<K>::set_block(std::size_t i0, std::size_t j0, const Mat& b) {
    for (std::size_t i = 0; i < b.r_; ++i)
        for (std::size_t j = 0; j < b.c_; ++j) (*this)(i0 + i, j0 + j) = b(i, j);
}

template <class K>
std::string Mat<K>::str() const {
    std::ostringstream os;
    for (std::size_t i = 0; i < r_; ++i) {
        for (std::size_t j = 0; j < c_; ++j) os << (j ? " " : "") << k_.str((*this)(i, j));
        os << "\n";
    }
    return os.str();
}

template <class K>
Echelon<K> rref(Mat<K> m) {
    const K& k = m.field();
    std::vector<std::size_t> piv;
    std::size_t r = 0;
    for (std::size_t j = 0; j < m.cols() && r < m.rows(); ++j) {
        std::size_t i = r;
        while (i < m.rows() && k.is_zero(m(i, j))) ++i;
        if (i == m.rows()) continue;
        if (i != r)
            for (std::size_t c = 0; c < m.cols(); ++c) std::swap(m(i, c), m(r, c));
        auto s = k.inv(m(r, j));
        for (std::size_t c = j; c < m.cols(); ++c) m(r, c) = k.mul(m(r, c), s);
        for (std::size_t i2 = 0; i2 < m.rows(); ++i2) {
            if (i2 == r || k.is_zero(m(i2, j))) continue;
            auto f = k.neg(m(i2, j));
            for (std::size_t c = j; c < m.cols(); ++c) k.axpy(m(i2, c), f, m(r, c));
        }
        piv.push_back(j);
        ++r;
    }
    return {std::move(m), std::move(piv)};
}

template <class K>
std::size_t rank(const Mat<K>& m0) {
    /* forward elimination only */
    if (m0.rows() == 0 || m0.cols() == 0) return 0;
    Mat<K> m = m0.rows() > m0.cols() ? m0.transpose() : m0;
    const K& k = m.field();
    std::size_t r = 0;
    for (std::size_t j = 0; j < m.cols() && r < m.rows(); ++j) {
        std::size_t i = r;
        while (i < m.rows() && k.is_zero(m(i, j))) ++i;
        if (i == m.rows()) continue;
        if (i != r)
            for (std::size_t c = j; c < m.cols(); ++c) std::swap(m(i, c), m(r, c));
        auto s = k.inv(m(r, j));
        for (std::size_t i2 = r + 1; i2 < m.rows(); ++i2) {
            if (k.is_zero(m(i2, j))) continue;
            auto f = k.neg(k.mul(m(i2, j), s));
            for (std::size_t c = j; c < m.cols(); ++c) k.axpy(m(i2, c), f, m(r, c));
        }
        ++r;
    }
    return r;
}

template <class K>
Mat<K> kernel_basis(const Mat<K>& m) {
    const K& k = m.field();
    auto e = rref(m);
    std::vector<bool> is_piv(m.cols(), false);
    for (auto j : e.pivots) is_piv[j] = true;
    std::size_t nfree = m.cols() - e.pivots.size();
    Mat<K> ker(k, m.cols(), nfree);
    std::size_t c = 0;
    for (std::size_t j = 0; j < m.cols(); ++j) {
        if (is_piv[j]) continue;
        ker(j, c) = k.one();
        for (std::size_t r = 0; r < e.pivots.size(); ++r) ker(e.pivots[r], c) = k.neg(e.m(r, j));
        ++c;
    }
    return ker;
}

template <class K>
Mat<K> left_kernel_basis(const Mat<K>& m) {
    return kernel_basis(m.transpose()).transpose();
}

template <class K>
std::optional<Mat<K>> solve(const Mat<K>& m, const Mat<K>& rhs) {
    if (rhs.rows() != m.rows()) throw std::invalid_argument("solve: row count mismatch");
    const K& k = m.field();
    auto e = rref(m.hcat(rhs));
    std::size_t n = m.cols();
    Mat<K> x(k, n, rhs.cols());
    for (std::size_t r = 0; r < e.pivots.size(); ++r) {
        if (e.pivots[r] >= n) return std::nullopt;
        for (std::size_t j = 0; j < rhs.cols(); ++j) x(e.pivots[r], j) = e.m(r, n + j);
    }
    return x;
}

template <class K>
Mat<K> column_basis(const Mat<K>& m) {
    return m.select_cols(rref(m).pivots);
}

template <class K>
std::vector<std::size_t> independent_mod(const Mat<K>& span, const Mat<K>& m) {
    Mat<K> big = span.cols() ? span.hcat(m) : m;
    auto e = rref(big);
    std::vector<std::size_t> out;
    for (auto j : e.pivots)
        if (j >= span.cols()) out.push_back(j - span.cols());
    return out;
}

template <class K>
Mat<K> inverse(const Mat<K>& m) {
    if (m.rows() != m.cols()) throw std::invalid_argument("inverse of non-square matrix");
    auto x = solve(m, Mat<K>::identity(m.field(), m.rows()));
    if (!x || rank(m) != m.rows()) throw std::domain_error("matrix is singular");
    return *x;
}

template <class K>
Mat<K> random_mat(const K& k, std::size_t r, std::size_t c, Rng& rng) {
    Mat<K> m(k, r, c);
    for (std::size_t i = 0; i < r; ++i)
        for (std::size_t j = 0; j < c; ++j) m(i, j) = k.random(rng);
    return m;
}

template <class K>
Mat<K> random_invertible(const K& k, std::size_t n, Rng& rng) {
    for (;;) {
        auto m = random_mat(k, n, n, rng);
        if (rank(m) == n) return m;
    }
}

#define MONAD_INST(K)                                                                  \
    template class Mat<K>;                                                            \
    template Echelon<K> rref(Mat<K>);                                                 \
    template std::size_t rank(const Mat<K>&);                                         \
    template Mat<K> kernel_basis(const Mat<K>&);                                      \
    template Mat<K> left_kernel_basis(const Mat<K>&);                                 \
    template std::optional<Mat<K>> solve(const Mat<K>&, const Mat<K>&);               \
    template Mat<K> column_basis(const Mat<K>&);                                      \
    template std::vector<std::size_t> independent_mod(const Mat<K>&, const Mat<K>&);  \
    template Mat<K> inverse(const Mat<K>&);                                           \
    template Mat<K> random_mat(const K&, std::size_t, std::size_t, Rng&);             \
    template Mat<K> random_invertible(const K&, std::size_t, Rng&);

MONAD_INST(Rationals)
MONAD_INST(PrimeField)

}  // namespace monad
