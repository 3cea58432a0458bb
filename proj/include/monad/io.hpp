#pragma once

#include "monad/complex.hpp"

#include <istream>
#include <stdexcept>
#include <string>
#include <vector>

namespace monad {

/* Text format, one directive per line, '#' starts a comment:

     monad
     n 3
     field fp:101
     middle 0
     term -1 -2
     term 0 0 0 0 0 0 0
     term 1 1 1
     entry -1 0 0 1*0,0,2,0 -1*1,0,1,0
     end

   `entry p i j` lists the nonzero terms of row i, column j of the map
   leaving position p, as coefficient*exponents in graded-lex order. */

struct ParseError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct MonadEntry {
    int pos = 0;
    std::size_t row = 0, col = 0;
    std::vector<std::pair<mpq_class, Exps>> terms;
};

struct MonadDoc {
    int n = 3;
    FieldSpec field;
    int pmin = 0;
    int middle = 0;
    std::vector<TwistList> terms;
    std::vector<MonadEntry> entries;
};

MonadDoc parse_monad(std::istream& in);
MonadDoc parse_monad_string(const std::string& s);

/* throws ParseError when a coefficient is not defined over k */
template <class K>
Complex<K> to_complex(const K& k, const MonadDoc& d);

template <class K>
MonadDoc to_doc(const Complex<K>& m);

std::string print_doc(const MonadDoc& d);

template <class K>
std::string print_monad(const Complex<K>& m) {
    return print_doc(to_doc(m));
}

/* a single map as entry lines at position 0 */
template <class K>
std::string print_map(const FormMatrix<K>& f);

}  // namespace monad
