#pragma once

#include "monad/poly.hpp"

#include <optional>
#include <string>
#include <vector>

namespace monad {

/* (a_1, ..., a_r) stands for O(a_1) + ... + O(a_r) */
using TwistList = std::vector<int>;

/* map of line-bundle sums; entry (i, j) has degree tgt[i] - src[j] */
template <class K>
class FormMatrix {
public:
    using E = typename K::Elem;

    FormMatrix(const K& k, int nvars, TwistList src, TwistList tgt);

    const K& field() const { return k_; }
    int nvars() const { return nvars_; }
    const TwistList& src() const { return src_; }
    const TwistList& tgt() const { return tgt_; }
    std::size_t rows() const { return tgt_.size(); }
    std::size_t cols() const { return src_.size(); }

    const Form<K>& at(std::size_t i, std::size_t j) const { return e_[i * src_.size() + j]; }
    /* throws when f has the wrong degree */
    void set(std::size_t i, std::size_t j, const Form<K>& f);

    bool is_zero() const;
    bool operator==(const FormMatrix& o) const;

    /* composition this o f */
    FormMatrix after(const FormMatrix& f) const;
    FormMatrix operator+(const FormMatrix& o) const;
    FormMatrix scaled(const E& s) const;
    /* dual map: O(-tgt) -> O(-src) */
    FormMatrix transpose() const;
    FormMatrix twisted(int l) const;
    FormMatrix restricted(const LinearSubspace<K>& sub) const;

    Mat<K> eval(const std::vector<E>& x) const;
    /* H^0(src(l)) -> H^0(tgt(l)) in monomial coordinates */
    Mat<K> h0_map(int l) const;
    /* H^n(src(l)) -> H^n(tgt(l)) in Serre-dual coordinates */
    Mat<K> hn_map(int l) const;

private:
    K k_;
    int nvars_;
    TwistList src_, tgt_;
    std::vector<Form<K>> e_;
};

/* bounded complex of line-bundle sums; terms[i] sits at position pmin + i,
   the presented sheaf at position `middle` */
template <class K>
struct Complex {
    K k;
    int n = 3;
    int pmin = 0;
    int middle = 0;
    std::vector<TwistList> terms;
    std::vector<FormMatrix<K>> diffs;  /* diffs[i]: terms[i] -> terms[i+1] */

    Complex(const K& k_, int n_) : k(k_), n(n_) {}

    int pmax() const { return pmin + static_cast<int>(terms.size()) - 1; }
    /* empty outside the range */
    TwistList term(int p) const;
    /* map p -> p+1 or nullptr */
    const FormMatrix<K>* diff(int p) const;
    /* structural check: shapes agree and entries have their forced degree */
    void validate() const;
};

template <class K>
Complex<K> single_term(const K& k, int n, const TwistList& t);

/* A -> B presenting coker (middle at B) */
template <class K>
Complex<K> resolution(const FormMatrix<K>& alpha, int n);

/* A -> B -> C with the middle at B; either end may be empty */
template <class K>
Complex<K> make_monad(const FormMatrix<K>& alpha, const FormMatrix<K>& beta, int n);

template <class K>
bool compose_check(const Complex<K>& m);

template <class K>
struct FiberReport {
    bool ok = true;
    std::size_t checked = 0;
    std::vector<std::vector<typename K::Elem>> witnesses;
};

struct FiberMode {
    enum class Kind { ExhaustiveFp, Sample } kind = Kind::Sample;
    std::size_t count = 100;
    std::uint64_t seed = 0;
    std::size_t max_witnesses = 16;
};

/* exactness of the evaluated complex away from the middle at each point */
template <class K>
FiberReport<K> fiberwise_check(const Complex<K>& m, const FiberMode& mode);

/* certificate over the algebraic closure for complexes with at most one term
   on each side of the middle: a map phi: B -> C is onto at every point iff
   H^0(phi(d)) is onto for some d with C(d) globally generated; injectivity
   of alpha is surjectivity of its dual. */
struct BundleCertificate {
    bool ok = false;
    int left_degree = 0;
    int right_degree = 0;
    std::string reason;
};

template <class K>
BundleCertificate certify_bundle(const Complex<K>& m, int extra_degrees = 6);

template <class K>
bool is_onto_everywhere(const FormMatrix<K>& phi, int n, int extra_degrees, int* degree_used = nullptr);

template <class K>
Complex<K> dualize(const Complex<K>& m);

template <class K>
Complex<K> twist(const Complex<K>& m, int l);

template <class K>
Complex<K> restrict_to(const Complex<K>& m, const LinearSubspace<K>& sub);

template <class K>
Complex<K> tensor_total(const Complex<K>& a, const Complex<K>& b);

/* rank of the presented sheaf and c_1-style twist sums */
template <class K>
int complex_rank(const Complex<K>& m);

/* reduce an integral complex over Q mod p */
Complex<PrimeField> reduce_mod(const Complex<Rationals>& m, std::uint32_t p);

}  // namespace monad
