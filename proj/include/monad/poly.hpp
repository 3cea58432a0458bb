#pragma once

#include "monad/mat.hpp"

#include <string>
#include <utility>
#include <vector>

namespace monad {

using Exps = std::vector<int>;

long long binom(long long n, long long k);

/* dim S_d for S = k[X_0..X_n]; 0 for d < 0 */
long long sdim(int n, int d);

/* graded-lex basis of S_d: lexicographically decreasing exponent vectors.
   Returned reference is stable for the process lifetime. */
const std::vector<Exps>& monomial_basis(int n, int d);

/* position of e in monomial_basis(n, |e|), n = e.size() - 1 */
std::size_t monomial_index(const Exps& e);

/* h^n(O_{P^n}(a)) = dim S_{-a-n-1}; the space is handled as the coordinate
   dual of S_{-a-n-1} */
long long hn_dim(int n, int a);

template <class K>
class Form {
public:
    using E = typename K::Elem;

    /* degree < 0 is the zero form of that (impossible) degree */
    Form(const K& k, int nvars, int degree);

    static Form var(const K& k, int nvars, int i);
    static Form constant(const K& k, int nvars, const E& c);
    static Form from_terms(const K& k, int nvars, int degree, const std::vector<std::pair<E, Exps>>& terms);

    const K& field() const { return k_; }
    int nvars() const { return nvars_; }
    int degree() const { return deg_; }
    std::size_t size() const { return c_.size(); }
    const E& coeff(std::size_t i) const { return c_[i]; }
    E& coeff(std::size_t i) { return c_[i]; }
    const std::vector<E>& coeffs() const { return c_; }
    E coeff_of(const Exps& e) const;

    bool is_zero() const;
    bool operator==(const Form& o) const;

    Form operator+(const Form& o) const;
    Form operator-(const Form& o) const;
    Form operator-() const;
    Form operator*(const Form& o) const;
    Form scaled(const E& s) const;

    E eval(const std::vector<E>& x) const;
    std::vector<std::pair<E, Exps>> terms() const;
    std::string str() const;

private:
    K k_;
    int nvars_, deg_;
    std::vector<E> c_;
};

/* S_d -> S_{d+e}: column j holds f times the j-th monomial */
template <class K>
Mat<K> mult_matrix(const Form<K>& f, int d);

/* (m+1) x (n+1) matrix whose rows span the subspace; X_j restricts to
   sum_i y_i param(i, j) */
template <class K>
struct LinearSubspace {
    Mat<K> param;

    int ambient() const { return static_cast<int>(param.cols()) - 1; }
    int dim() const { return static_cast<int>(param.rows()) - 1; }

    static LinearSubspace from_points(const std::vector<std::vector<typename K::Elem>>& pts, const K& k);
    /* common zeros of the given linear equations (rows) */
    static LinearSubspace from_equations(const Mat<K>& eqs);
    static LinearSubspace plane(const std::vector<typename K::Elem>& h, const K& k);
    /* the equations (rows) cutting out the subspace */
    Mat<K> equations() const;
    bool contains(const std::vector<typename K::Elem>& x) const;
};

template <class K>
Form<K> substitute(const Form<K>& f, const LinearSubspace<K>& sub);

/* evaluation point as a vector */
template <class K>
std::vector<typename K::Elem> row_vec(const Mat<K>& m, std::size_t i);

/* all points of P^n(F_p), first nonzero coordinate 1 */
std::vector<std::vector<std::uint32_t>> projective_points(std::uint32_t p, int n);

}  // namespace monad
