#pragma once

#include "monad/cohomology.hpp"

#include <optional>
#include <string>
#include <vector>

namespace monad {

struct FamilyParams {
    std::string family;
    std::vector<mpq_class> params;
    std::uint64_t seed = 0;
};

std::vector<std::string> family_names();

/* (rank, c1, c2, c3) a family is supposed to produce */
ChernData declared_chern(const std::string& family);

template <class K>
Complex<K> build(const K& k, const FamilyParams& fp);

/* 2x3 matrix 3O -> 2O(1), cases 1..7 */
template <class K>
FormMatrix<K> pencil_normal_form(const K& k, int which);

template <class K>
struct AlphaSpace {
    std::size_t dim = 0;
    std::vector<FormMatrix<K>> basis;
};

/* all alpha: left -> src(beta) with beta o alpha = 0 */
template <class K>
AlphaSpace<K> solve_left_differential(const FormMatrix<K>& beta, const TwistList& left);

/* column vector of H^0(tw(l)) as a one-column map O(-l) -> tw */
template <class K>
FormMatrix<K> column_from_sections(const K& k, int nvars, const TwistList& tw, int l, const Mat<K>& v,
                                   std::size_t col = 0);

template <class K>
struct RandomInstance {
    std::optional<Complex<K>> m;
    int tries = 0;
    std::string failure;
    std::vector<typename K::Elem> special_point;  /* c34: common zero of beta_1 */
};

/* shapes: c36, c32, c30_min, c30_max, c34 (param: normal form, default 7) */
template <class K>
RandomInstance<K> random_instance(const K& k, const std::string& shape, std::uint64_t seed, int param = 7,
                                  int budget = 200);

/* h^0(E) = h^0(E^dual) = 0 plus a bundle certificate */
template <class K>
std::string monad_defect(const Complex<K>& m);

/* automorphisms of a line-bundle sum: block-triangular by twist */
template <class K>
FormMatrix<K> identity_map(const K& k, int nvars, const TwistList& tw);

template <class K>
FormMatrix<K> random_automorphism(const K& k, int nvars, const TwistList& tw, Rng& rng);

/* throws std::domain_error when the constant blocks are singular */
template <class K>
FormMatrix<K> invert_automorphism(const FormMatrix<K>& f);

enum class BetaShape { C30, C32 };

template <class K>
struct CanonicalBeta {
    bool ok = false;
    std::string failure;
    std::optional<FormMatrix<K>> beta;  /* canonical form */
    std::optional<FormMatrix<K>> left_inv;  /* input = left_inv o beta o right_inv */
    std::optional<FormMatrix<K>> right_inv;
    std::vector<Form<K>> h;   /* h_0..h_3 */
    bool degenerate = false;  /* the h^1(E(1)) = 1 stratum */
    int ksi_tries = 0;
};

template <class K>
CanonicalBeta<K> canonicalize_beta(const FormMatrix<K>& beta, BetaShape shape, std::uint64_t seed, int budget = 200);

/* pattern of the canonical form; sets *degenerate when given */
template <class K>
bool check_canonical_pattern(const FormMatrix<K>& beta, BetaShape shape, bool* degenerate = nullptr,
                             std::string* why = nullptr);

}  // namespace monad
