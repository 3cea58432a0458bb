#pragma once

#include "monad/cohomology.hpp"

#include <optional>
#include <string>
#include <vector>

namespace monad {

struct Splitting {
    std::vector<int> parts;  /* a_1 >= ... >= a_r */
    std::string str() const;
    bool operator==(const Splitting&) const = default;
};

/* kernel of beta on P^1 as a free module: G: sum O(k_i) -> src(beta) */
template <class K>
struct FreeBasis {
    bool ok = false;
    std::string failure;
    std::vector<int> twists;  /* k_i */
    std::optional<FormMatrix<K>> gens;
};

template <class K>
FreeBasis<K> kernel_free_basis(const FormMatrix<K>& beta);

/* E(t) on P^1 presented by a 2-term complex A -> B (middle at B) */
template <class K>
long long h0_on_line(const FormMatrix<K>& psi, int t);

template <class K>
struct SplitResult {
    bool ok = false;
    std::string failure;
    Splitting split;
};

/* complex on P^1 presenting a bundle (positions within -1..1, middle 0) */
template <class K>
SplitResult<K> splitting_type(const Complex<K>& m);

/* restriction to the line through two points, then splitting */
template <class K>
SplitResult<K> split_on_line(const Complex<K>& m, const std::vector<typename K::Elem>& p0,
                             const std::vector<typename K::Elem>& p1);

/* h^1(O_L(a)) summed over parts */
long long h1_of(const Splitting& s);

}  // namespace monad
