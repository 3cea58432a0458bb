#pragma once

#include "monad/complex.hpp"

#include <optional>
#include <string>
#include <vector>

namespace monad {

/* dimension known up to the one unresolved higher differential */
struct CohValue {
    long long lo = 0, hi = 0;
    bool exact() const { return lo == hi; }
    std::string str() const;
};

/* h^i(E(l)) for i = 0..n, E the sheaf presented at the middle */
template <class K>
std::vector<CohValue> hypercoh(const Complex<K>& m, int l);

struct CohTable {
    int n = 3;
    int lo = 0, hi = -1;
    std::vector<std::vector<CohValue>> cols;  /* cols[l - lo][i] */

    const CohValue& at(int i, int l) const { return cols.at(l - lo).at(i); }
    long long h(int i, int l) const;  /* throws unless exact */
    bool exact(int l) const;
    std::string str() const;
};

template <class K>
CohTable coh_table(const Complex<K>& m, int lo, int hi);

struct ChernData {
    int n = 3;
    long long rank = 0, c1 = 0, c2 = 0, c3 = 0;

    bool operator==(const ChernData&) const = default;
    std::string str() const;
};

template <class K>
ChernData chern(const Complex<K>& m);

/* HRR on P^n, n <= 3; throws std::domain_error on a non-integral value */
long long euler_char(const ChernData& c, int l);

/* H^q(E(l)) for l in [lo, hi] as subquotients of coordinate spaces:
   q = 1 uses coker H^0(beta(l)), q = 2 uses ker H^3(alpha(l)) in Serre-dual
   coordinates. Requires a complex on P^3 in positions -1..1, middle 0. */
template <class K>
struct GradedModuleSlice {
    int q = 1;
    int lo = 0, hi = -1;
    std::vector<Mat<K>> span;   /* per degree: subspace of the ambient (columns) */
    std::vector<Mat<K>> lifts;  /* per degree: basis of span modulo quot */
    std::vector<Mat<K>> quot;   /* per degree: the subspace divided out */
    std::vector<std::vector<Mat<K>>> mult;  /* mult[l - lo][i]: degree l -> l+1 */

    std::size_t dim(int l) const { return lifts.at(l - lo).cols(); }
    const Mat<K>& x(int i, int l) const { return mult.at(l - lo).at(i); }
    /* sum h_i X_i: degree l -> l+1 */
    Mat<K> by_form(const std::vector<typename K::Elem>& h, int l) const;
    /* coordinates of ambient vectors lying in span */
    Mat<K> coords(int l, const Mat<K>& v) const;
};

template <class K>
GradedModuleSlice<K> graded_module(const Complex<K>& m, int q, int lo, int hi);

struct SpectrumData {
    bool found = false;
    std::vector<int> k;  /* k_1 <= ... <= k_m */
    bool connected = false;
    bool sum_matches_c3 = false;
    bool zero_or_triple = false;
    bool strict_runs_ok = false;
    bool in_allowed_list = false;
    std::string failure;

    std::string str() const;
};

/* needs exact h^1 on [-c2-3, -1] and h^2 on [-3, c2] */
SpectrumData spectrum(const CohTable& t, const ChernData& c);

int spectrum_window_lo(const ChernData& c);
int spectrum_window_hi(const ChernData& c);

/* h^1(E(l)) and h^2(E(l)) predicted by a spectrum */
long long spectrum_h1(const std::vector<int>& k, int l);
long long spectrum_h2(const std::vector<int>& k, int l);

struct PlaneSpectrum {
    bool semistable = false;
    SpectrumData spec;
    std::vector<long long> n;  /* n[i] = n_{-1-i}, i = 0.. */
    std::vector<long long> q;  /* q[i] = q_{i-2}, i = 0.. */
    bool rank_matches = false;  /* n_{-1} + q_{-1} = c2 */
    bool sub_validators = false;
    bool quot_validators = false;

    long long n_at(int i) const;
    long long q_at(int i) const;
};

template <class K>
PlaneSpectrum spectrum_via_plane(const Complex<K>& m, const std::vector<typename K::Elem>& h);

/* h^0(F(-1)) = h^0(F^dual(-1)) = 0 for the restriction F of a rank 3, c1 = 0 sheaf */
template <class K>
bool plane_semistable(const Complex<K>& m, const std::vector<typename K::Elem>& h);

}  // namespace monad
