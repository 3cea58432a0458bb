#include "monad/acceptance.hpp"
#include "monad/io.hpp"
#include "monad/p1split.hpp"
#include "monad/scanners.hpp"
#include "monad/zoo.hpp"

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

namespace py = pybind11;
using namespace monad;

namespace {

/* every entry point takes a monad document as text and an optional field override */
template <class Fn>
auto with_complex(const std::string& text, const std::string& field, Fn&& fn) {
    auto doc = parse_monad_string(text);
    auto f = field.empty() ? doc.field : FieldSpec::parse(field);
    if (f.kind == FieldSpec::Kind::Rationals) return fn(to_complex(Rationals(), doc));
    return fn(to_complex(PrimeField(f.p), doc));
}

template <class K>
std::vector<typename K::Elem> coords(const K& k, const std::vector<py::object>& v) {
    std::vector<typename K::Elem> out;
    for (const auto& x : v) out.push_back(k.from_q(mpq_class(py::str(x).cast<std::string>())));
    return out;
}

py::dict spectrum_dict(const SpectrumData& s) {
    py::dict d;
    d["found"] = s.found;
    d["k"] = s.k;
    d["connected"] = s.connected;
    d["sum_matches_c3"] = s.sum_matches_c3;
    d["in_allowed_list"] = s.in_allowed_list;
    d["failure"] = s.failure;
    return d;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "monads of line bundles on projective space";
    py::register_exception<ParseError>(m, "ParseError", PyExc_ValueError);

    m.def("family_names", &family_names);

    m.def(
        "zoo_build",
        [](const std::string& family, const std::vector<py::object>& params, const std::string& field,
           std::uint64_t seed) {
            FamilyParams fp{family, {}, seed};
            for (const auto& p : params) fp.params.emplace_back(py::str(p).cast<std::string>());
            for (auto& q : fp.params) q.canonicalize();
            auto f = FieldSpec::parse(field);
            if (f.kind == FieldSpec::Kind::Rationals) return print_monad(build(Rationals(), fp));
            return print_monad(build(PrimeField(f.p), fp));
        },
        py::arg("family"), py::arg("params") = std::vector<py::object>{}, py::arg("field") = "q",
        py::arg("seed") = 0);

    m.def(
        "chern",
        [](const std::string& text, const std::string& field) {
            return with_complex(text, field, [](const auto& c) {
                auto d = chern(c);
                return std::vector<long long>{d.rank, d.c1, d.c2, d.c3};
            });
        },
        py::arg("text"), py::arg("field") = "");

    m.def(
        "coh_table",
        [](const std::string& text, int lo, int hi, bool dual, const std::string& field) {
            return with_complex(text, field, [&](const auto& c) {
                auto t = coh_table(dual ? dualize(c) : c, lo, hi);
                /* rows (l, [h^i lo], [h^i hi]) */
                std::vector<std::tuple<int, std::vector<long long>, std::vector<long long>>> rows;
                for (int l = lo; l <= hi; ++l) {
                    std::vector<long long> a, b;
                    for (int i = 0; i <= t.n; ++i) {
                        a.push_back(t.at(i, l).lo);
                        b.push_back(t.at(i, l).hi);
                    }
                    rows.emplace_back(l, a, b);
                }
                return rows;
            });
        },
        py::arg("text"), py::arg("lo"), py::arg("hi"), py::arg("dual") = false, py::arg("field") = "");

    m.def(
        "spectrum",
        [](const std::string& text, const std::string& field) {
            return with_complex(text, field, [](const auto& c) {
                auto ch = chern(c);
                return spectrum_dict(spectrum(coh_table(c, spectrum_window_lo(ch), spectrum_window_hi(ch)), ch));
            });
        },
        py::arg("text"), py::arg("field") = "");

    m.def(
        "stability",
        [](const std::string& text, const std::string& field) {
            return with_complex(text, field, [](const auto& c) { return stability_check(c).str(); });
        },
        py::arg("text"), py::arg("field") = "");

    m.def(
        "split",
        [](const std::string& text, const std::vector<py::object>& p0, const std::vector<py::object>& p1, bool dual,
           const std::string& field) {
            return with_complex(text, field, [&](const auto& c) {
                auto r = split_on_line(dual ? dualize(c) : c, coords(c.k, p0), coords(c.k, p1));
                if (!r.ok) throw std::runtime_error(r.failure);
                return r.split.parts;
            });
        },
        py::arg("text"), py::arg("p0"), py::arg("p1"), py::arg("dual") = false, py::arg("field") = "");

    m.def(
        "verify_paper",
        [](std::uint64_t seed, bool quick) {
            py::gil_scoped_release nogil;
            auto rep = run_acceptance({seed, quick});
            return std::make_pair(rep.all_pass(), rep.str());
        },
        py::arg("seed") = 0, py::arg("quick") = false);
}
