#include "monad/io.hpp"

#include <algorithm>
#include <sstream>
#include <tuple>

namespace monad {

namespace {

std::vector<std::string> split_ws(const std::string& s) {
    std::istringstream is(s);
    std::vector<std::string> out;
    std::string w;
    while (is >> w) out.push_back(w);
    return out;
}

int to_int(const std::string& s, std::size_t line) {
    try {
        std::size_t used = 0;
        int v = std::stoi(s, &used);
        if (used != s.size()) throw std::invalid_argument(s);
        return v;
    } catch (const std::exception&) {
        throw ParseError("line " + std::to_string(line) + ": not an integer: " + s);
    }
}

mpq_class to_rational(const std::string& s, std::size_t line) {
    mpq_class q;
    std::string t = s;
    if (!t.empty() && t[0] == '+') t = t.substr(1);
    if (t.empty() || q.set_str(t, 10) != 0 || t.find_first_not_of("-0123456789/") != std::string::npos)
        throw ParseError("line " + std::to_string(line) + ": not a rational number: " + s);
    if (q.get_den() == 0) throw ParseError("line " + std::to_string(line) + ": zero denominator");
    q.canonicalize();
    return q;
}

void write_entry_terms(std::ostringstream& os, const std::vector<std::pair<mpq_class, Exps>>& ts) {
    for (const auto& [c, e] : ts) {
        os << " " << c.get_str() << "*";
        for (std::size_t i = 0; i < e.size(); ++i) os << (i ? "," : "") << e[i];
    }
}

template <class K>
std::vector<std::pair<mpq_class, Exps>> form_terms(const Form<K>& f) {
    std::vector<std::pair<mpq_class, Exps>> out;
    for (const auto& [c, e] : f.terms()) out.emplace_back(f.field().to_q(c), e);
    return out;
}

}  // namespace

MonadDoc parse_monad(std::istream& in) {
    MonadDoc d;
    std::string raw;
    std::size_t ln = 0;
    bool begun = false, ended = false, have_n = false, have_field = false, have_middle = false;
    int next_pos = 0;
    while (std::getline(in, raw)) {
        ++ln;
        auto hash = raw.find('#');
        auto w = split_ws(hash == std::string::npos ? raw : raw.substr(0, hash));
        if (w.empty()) continue;
        if (ended) throw ParseError("line " + std::to_string(ln) + ": content after end");
        if (!begun) {
            if (w[0] != "monad" || w.size() != 1) throw ParseError("line " + std::to_string(ln) + ": expected 'monad'");
            begun = true;
            continue;
        }
        const auto& key = w[0];
        if (key == "n") {
            if (w.size() != 2) throw ParseError("line " + std::to_string(ln) + ": n takes one value");
            d.n = to_int(w[1], ln);
            if (d.n < 1 || d.n > 3) throw ParseError("line " + std::to_string(ln) + ": n must be 1, 2 or 3");
            have_n = true;
        } else if (key == "field") {
            if (w.size() != 2) throw ParseError("line " + std::to_string(ln) + ": field takes one value");
            try {
                d.field = FieldSpec::parse(w[1]);
            } catch (const std::exception& e) {
                throw ParseError("line " + std::to_string(ln) + ": " + e.what());
            }
            have_field = true;
        } else if (key == "middle") {
            if (w.size() != 2) throw ParseError("line " + std::to_string(ln) + ": middle takes one value");
            d.middle = to_int(w[1], ln);
            have_middle = true;
        } else if (key == "term") {
            if (w.size() < 2) throw ParseError("line " + std::to_string(ln) + ": term needs a position");
            int p = to_int(w[1], ln);
            if (d.terms.empty()) d.pmin = p;
            else if (p != next_pos) throw ParseError("line " + std::to_string(ln) + ": term positions must be consecutive");
            next_pos = p + 1;
            TwistList t;
            for (std::size_t i = 2; i < w.size(); ++i) t.push_back(to_int(w[i], ln));
            d.terms.push_back(t);
        } else if (key == "entry") {
            if (w.size() < 4) throw ParseError("line " + std::to_string(ln) + ": entry needs position, row and column");
            MonadEntry e;
            e.pos = to_int(w[1], ln);
            int r = to_int(w[2], ln), c = to_int(w[3], ln);
            if (r < 0 || c < 0) throw ParseError("line " + std::to_string(ln) + ": negative index");
            e.row = static_cast<std::size_t>(r);
            e.col = static_cast<std::size_t>(c);
            for (std::size_t i = 4; i < w.size(); ++i) {
                auto star = w[i].find('*');
                if (star == std::string::npos) throw ParseError("line " + std::to_string(ln) + ": term needs coef*exponents");
                mpq_class q = to_rational(w[i].substr(0, star), ln);
                Exps ex;
                std::stringstream es(w[i].substr(star + 1));
                std::string part;
                while (std::getline(es, part, ',')) {
                    int v = to_int(part, ln);
                    if (v < 0) throw ParseError("line " + std::to_string(ln) + ": negative exponent");
                    ex.push_back(v);
                }
                e.terms.emplace_back(q, ex);
            }
            d.entries.push_back(e);
        } else if (key == "end") {
            ended = true;
        } else {
            throw ParseError("line " + std::to_string(ln) + ": unknown directive '" + key + "'");
        }
    }
    if (!begun) throw ParseError("empty input");
    if (!ended) throw ParseError("missing 'end'");
    if (!have_n || !have_field || !have_middle) throw ParseError("n, field and middle are required");
    if (d.terms.empty()) throw ParseError("no terms");
    if (d.middle < d.pmin || d.middle >= d.pmin + static_cast<int>(d.terms.size()))
        throw ParseError("middle outside the term range");
    return d;
}

MonadDoc parse_monad_string(const std::string& s) {
    std::istringstream is(s);
    return parse_monad(is);
}

template <class K>
Complex<K> to_complex(const K& k, const MonadDoc& d) {
    Complex<K> m(k, d.n);
    m.pmin = d.pmin;
    m.middle = d.middle;
    m.terms = d.terms;
    for (std::size_t i = 0; i + 1 < d.terms.size(); ++i) m.diffs.emplace_back(k, d.n + 1, d.terms[i], d.terms[i + 1]);
    for (const auto& e : d.entries) {
        int idx = e.pos - d.pmin;
        if (idx < 0 || idx + 1 >= static_cast<int>(d.terms.size()))
            throw ParseError("entry at position " + std::to_string(e.pos) + " has no map");
        auto& f = m.diffs[static_cast<std::size_t>(idx)];
        if (e.row >= f.rows() || e.col >= f.cols())
            throw ParseError("entry index out of range at position " + std::to_string(e.pos));
        int degree = f.tgt()[e.row] - f.src()[e.col];
        std::vector<std::pair<typename K::Elem, Exps>> ts;
        for (const auto& [q, ex] : e.terms) {
            if (static_cast<int>(ex.size()) != d.n + 1)
                throw ParseError("exponent vector of length " + std::to_string(ex.size()) + " on P^" + std::to_string(d.n));
            int s = 0;
            for (int x : ex) s += x;
            if (s != degree)
                throw ParseError("entry (" + std::to_string(e.row) + "," + std::to_string(e.col) + ") at position " +
                                 std::to_string(e.pos) + " must have degree " + std::to_string(degree));
            typename K::Elem c;
            try {
                c = k.from_q(q);
            } catch (const std::exception& ex2) {
                throw ParseError(std::string("coefficient not defined over the field: ") + ex2.what());
            }
            ts.emplace_back(c, ex);
        }
        if (ts.empty()) continue;
        f.set(e.row, e.col, Form<K>::from_terms(k, d.n + 1, degree, ts));
    }
    try {
        m.validate();
    } catch (const std::exception& ex) {
        throw ParseError(std::string("invalid complex: ") + ex.what());
    }
    return m;
}

template <class K>
MonadDoc to_doc(const Complex<K>& m) {
    MonadDoc d;
    d.n = m.n;
    d.field = m.k.spec();
    d.pmin = m.pmin;
    d.middle = m.middle;
    d.terms = m.terms;
    for (std::size_t i = 0; i < m.diffs.size(); ++i) {
        const auto& f = m.diffs[i];
        for (std::size_t r = 0; r < f.rows(); ++r)
            for (std::size_t c = 0; c < f.cols(); ++c) {
                auto ts = form_terms(f.at(r, c));
                if (ts.empty()) continue;
                d.entries.push_back({m.pmin + static_cast<int>(i), r, c, ts});
            }
    }
    return d;
}

std::string print_doc(const MonadDoc& d) {
    std::ostringstream os;
    os << "monad\n";
    os << "n " << d.n << "\n";
    os << "field " << d.field.str() << "\n";
    os << "middle " << d.middle << "\n";
    for (std::size_t i = 0; i < d.terms.size(); ++i) {
        os << "term " << d.pmin + static_cast<int>(i);
        for (int t : d.terms[i]) os << " " << t;
        os << "\n";
    }
    auto es = d.entries;
    std::stable_sort(es.begin(), es.end(), [](const MonadEntry& a, const MonadEntry& b) {
        return std::tie(a.pos, a.row, a.col) < std::tie(b.pos, b.row, b.col);
    });
    for (const auto& e : es) {
        if (e.terms.empty()) continue;
        os << "entry " << e.pos << " " << e.row << " " << e.col;
        write_entry_terms(os, e.terms);
        os << "\n";
    }
    os << "end\n";
    return os.str();
}

template <class K>
std::string print_map(const FormMatrix<K>& f) {
    std::ostringstream os;
    for (std::size_t r = 0; r < f.rows(); ++r)
        for (std::size_t c = 0; c < f.cols(); ++c) {
            auto ts = form_terms(f.at(r, c));
            if (ts.empty()) continue;
            os << "entry 0 " << r << " " << c;
            write_entry_terms(os, ts);
            os << "\n";
        }
    return os.str();
}

#define MONAD_INST(K)                                          \
    template Complex<K> to_complex(const K&, const MonadDoc&); \
    template MonadDoc to_doc(const Complex<K>&);               \
    template std::string print_map(const FormMatrix<K>&);

MONAD_INST(Rationals)
MONAD_INST(PrimeField)

}  // namespace monad
