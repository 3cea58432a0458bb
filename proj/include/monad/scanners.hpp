#pragma once

#include "monad/p1split.hpp"

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace monad {

enum class Verdict { Stable, Unstable, Unsupported };

struct StabilityResult {
    Verdict verdict = Verdict::Unsupported;
    long long h0 = 0, h0_dual = 0;  /* the witnesses */
    std::string reason;
    std::string str() const;
};

/* rank 3, c1 = 0: stable iff h^0(E) = h^0(E^dual) = 0 */
template <class K>
StabilityResult stability_check(const Complex<K>& m);

/* worker threads for per-object scans (default 1); reports do not depend on it */
void set_scan_threads(unsigned n);
unsigned scan_threads();

/* which planes or lines to visit */
struct SampleSpec {
    bool exhaustive = false;  /* all of them over F_p */
    std::size_t count = 50;
    std::uint64_t seed = 0;
};

struct ScanRecord {
    std::string key;
    std::vector<std::string> values;
};

struct ScanReport {
    std::string universe;
    std::vector<std::string> columns;
    std::vector<ScanRecord> records;  /* sorted by key */
    std::map<std::string, std::string> summary;

    std::string tsv() const;
    const std::string& value(std::size_t rec, const std::string& col) const;
};

/* plane equations, normalised (first nonzero coordinate 1), deduplicated */
template <class K>
std::vector<std::vector<typename K::Elem>> plane_set(const K& k, const SampleSpec& s);

/* lines as pairs of spanning points, deduplicated by Pluecker coordinates */
template <class K>
std::vector<LinearSubspace<K>> line_set(const K& k, const SampleSpec& s);

template <class K>
std::string point_key(const K& k, const std::vector<typename K::Elem>& v);

template <class K>
std::vector<typename K::Elem> pluecker(const LinearSubspace<K>& line);

/* h^0 of the restriction to a linear subspace, twisted by l; throws if inexact */
template <class K>
long long restricted_h0(const Complex<K>& m, const LinearSubspace<K>& sub, int l);

/* max r >= 1 with h^0(E_H^dual(-r)) > 0, else 0 */
template <class K>
int unstable_plane_order(const Complex<K>& m, const std::vector<typename K::Elem>& h);

/* when h^0(E^dual(-r)) = 0 and h^1(E^dual(-r-1)) = 1 with generator xi, the
   planes h with h xi = 0 are exactly those with h^0(E_H^dual(-r)) > 0;
   returns a basis of that linear space of equations (empty if dim != 1) */
template <class K>
std::vector<std::vector<typename K::Elem>> unstable_plane_candidates(const Complex<K>& m, int r);

/* per plane: h0_EH, h0_EHdual, unstable_order */
template <class K>
ScanReport restriction_stability_sample(const Complex<K>& m, const std::vector<std::vector<typename K::Elem>>& planes,
                                        const std::string& universe = "");

enum class Side { E, Dual };

/* multiplication H^1(E'(-1)) x S_1 -> H^1(E') */
template <class K>
struct MuData {
    std::size_t d = 0;     /* dim H^1(E'(-1)) */
    std::size_t rows = 0;  /* dim H^1(E') */
    std::vector<Mat<K>> M;

    /* M(h) = sum h_i M_i */
    Mat<K> at(const std::vector<typename K::Elem>& h) const;
    std::size_t corank(const std::vector<typename K::Elem>& h) const;
};

template <class K>
MuData<K> mu_build(const Complex<K>& m, Side side);

template <class K>
ScanReport mu_corank_scan(const MuData<K>& mu, const std::vector<std::vector<typename K::Elem>>& planes,
                          const std::string& universe = "");

/* Ker mu = O(a): a = -s for the least s in 1..3 admitting a nonzero
   v in S_{s-1}^d with M(y) v(y) = 0; nullopt when none */
template <class K>
std::optional<int> kernel_degree(const MuData<K>& mu);

/* per line: splitting type of E_L^dual and its h^1 */
template <class K>
ScanReport jumping_line_scan(const Complex<K>& m, const std::vector<LinearSubspace<K>>& lines,
                             const std::string& universe = "");

struct BilinearCriterion {
    bool applicable = false;  /* h^2(E(r-2)) = 0 */
    bool fires = false;       /* and h^2(E(r-4)) <= h^2(E(r-3)) + 2 */
    long long h2_rm4 = 0, h2_rm3 = 0, h2_rm2 = 0;
};

BilinearCriterion bilinear_criteria(const CohTable& t, int r);
BilinearCriterion bilinear_criteria(long long h2_rm4, long long h2_rm3, long long h2_rm2);

/* 2x3 matrix of linear forms 3O -> 2O(1) viewed as psi on P^1 */
struct PencilClass {
    bool rank2_everywhere = false;        /* rank >= 2 at every point of P^1 */
    bool generic_rank3 = false;
    int torsion_length = 0;     /* degree of the gcd of the 3x3 minors */
    std::vector<int> multiplicities;  /* of the torsion points, over the closure */
    int fp_points = -1;         /* rank-drop points rational over F_p */
    std::vector<int> candidates;      /* normal forms 1..7 */
    std::string note;
    std::string str() const;
};

template <class K>
PencilClass pencil_classify(const FormMatrix<K>& phi);

}  // namespace monad
