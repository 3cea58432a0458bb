#pragma once

#include "monad/field.hpp"

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

namespace monad {

/* dense row-major matrix over a field */
template <class K>
class Mat {
public:
    using E = typename K::Elem;

    explicit Mat(const K& k, std::size_t r = 0, std::size_t c = 0) : k_(k), r_(r), c_(c), a_(r * c, k.zero()) {}

    static Mat identity(const K& k, std::size_t n) {
        Mat m(k, n, n);
        for (std::size_t i = 0; i < n; ++i) m(i, i) = k.one();
        return m;
    }

    const K& field() const { return k_; }
    std::size_t rows() const { return r_; }
    std::size_t cols() const { return c_; }
    E& operator()(std::size_t i, std::size_t j) { return a_[i * c_ + j]; }
    const E& operator()(std::size_t i, std::size_t j) const { return a_[i * c_ + j]; }
    const std::vector<E>& data() const { return a_; }

    bool is_zero() const {
        for (const auto& x : a_)
            if (!k_.is_zero(x)) return false;
        return true;
    }
    bool operator==(const Mat& o) const {
        if (r_ != o.r_ || c_ != o.c_) return false;
        for (std::size_t i = 0; i < a_.size(); ++i)
            if (!k_.eq(a_[i], o.a_[i])) return false;
        return true;
    }

    Mat transpose() const {
        Mat t(k_, c_, r_);
        for (std::size_t i = 0; i < r_; ++i)
            for (std::size_t j = 0; j < c_; ++j) t(j, i) = (*this)(i, j);
        return t;
    }

    Mat operator*(const Mat& b) const;
    Mat operator+(const Mat& b) const;
    Mat operator-(const Mat& b) const;
    Mat scaled(const E& s) const;

    Mat col(std::size_t j) const { return cols_range(j, j + 1); }
    Mat cols_range(std::size_t j0, std::size_t j1) const;
    Mat rows_range(std::size_t i0, std::size_t i1) const;
    Mat select_cols(const std::vector<std::size_t>& js) const;
    /* [this | b] and [this ; b] */
    Mat hcat(const Mat& b) const;
    Mat vcat(const Mat& b) const;
    void set_block(std::size_t i0, std::size_t j0, const Mat& b);

    std::string str() const;

private:
    K k_;
    std::size_t r_, c_;
    std::vector<E> a_;
};

template <class K>
struct Echelon {
    Mat<K> m;                          /* reduced row echelon form */
    std::vector<std::size_t> pivots;   /* pivot column of each nonzero row */
};

/* reduced row echelon form; pivot = first nonzero entry scanning columns left
   to right and rows top to bottom */
template <class K>
Echelon<K> rref(Mat<K> m);

template <class K>
std::size_t rank(const Mat<K>& m);

/* columns form a basis of the right kernel; basis vectors are the standard
   ones attached to the free columns of rref */
template <class K>
Mat<K> kernel_basis(const Mat<K>& m);

/* rows span {y : y m = 0} */
template <class K>
Mat<K> left_kernel_basis(const Mat<K>& m);

/* X with m X = rhs, or nullopt when inconsistent; free variables set to 0 */
template <class K>
std::optional<Mat<K>> solve(const Mat<K>& m, const Mat<K>& rhs);

/* basis of the column space, chosen among the columns of m */
template <class K>
Mat<K> column_basis(const Mat<K>& m);

/* columns of m appended to a basis of the column space of `span`: returns
   the indices of columns of m independent modulo span and earlier picks */
template <class K>
std::vector<std::size_t> independent_mod(const Mat<K>& span, const Mat<K>& m);

template <class K>
Mat<K> inverse(const Mat<K>& m);

/* a random invertible matrix (rejection sampled) */
template <class K>
Mat<K> random_invertible(const K& k, std::size_t n, Rng& rng);

template <class K>
Mat<K> random_mat(const K& k, std::size_t r, std::size_t c, Rng& rng);

}  // namespace monad
