#include "CLI11.hpp"
#include "monad/acceptance.hpp"
#include "monad/io.hpp"
#include "monad/p1split.hpp"
#include "monad/scanners.hpp"
#include "monad/zoo.hpp"

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <map>
#include <sstream>
#include <type_traits>

using namespace monad;

namespace {

/* exit 1: the computation ran but a check failed */
struct CheckFailed : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct Opts {
    std::string field;
    std::uint64_t seed = 0;
    std::string input;
    std::string window = "-4:1";
    std::string line, plane;
    std::string side = "E";
    std::string left_shape;
    std::string params;
    std::string family;
    bool exhaustive = false, dual = false, quick = false;
    std::size_t samples = 50;
    unsigned threads = 1;
};

MonadDoc read_doc(const std::string& path) {
    if (path == "-") return parse_monad(std::cin);
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open " + path);
    return parse_monad(in);
}

std::vector<std::string> split(const std::string& s, const std::string& seps) {
    std::vector<std::string> out;
    std::string cur;
    for (char c : s) {
        if (seps.find(c) != std::string::npos) {
            out.push_back(cur);
            cur.clear();
        } else {
            cur += c;
        }
    }
    out.push_back(cur);
    return out;
}

mpq_class rational(const std::string& s) {
    mpq_class q;
    if (s.empty() || q.set_str(s[0] == '+' ? s.substr(1) : s, 10) != 0) throw ParseError("not a number: " + s);
    if (q.get_den() == 0) throw ParseError("zero denominator: " + s);
    q.canonicalize();
    return q;
}

template <class K>
std::vector<typename K::Elem> point(const K& k, const std::string& s) {
    auto parts = split(s, ":");
    if (parts.size() != 4) throw ParseError("expected 4 coordinates in " + s);
    std::vector<typename K::Elem> v;
    bool zero = true;
    for (const auto& p : parts) {
        v.push_back(k.from_q(rational(p)));
        zero &= k.is_zero(v.back());
    }
    if (zero) throw ParseError("zero vector " + s);
    return v;
}

template <class K>
LinearSubspace<K> line_arg(const K& k, const std::string& s) {
    auto pq = split(s, ",");
    if (pq.size() != 2) throw ParseError("--line takes two points p0,p1");
    auto p0 = point(k, pq[0]), p1 = point(k, pq[1]);
    Mat<K> ab(k, 2, 4);
    for (std::size_t j = 0; j < 4; ++j) ab(0, j) = p0[j], ab(1, j) = p1[j];
    if (rank(ab) != 2) throw ParseError("the two points coincide");
    return LinearSubspace<K>::from_points({p0, p1}, k);
}

std::pair<int, int> window_arg(const std::string& s) {
    auto w = split(s, ":");
    if (w.size() != 2) throw ParseError("--window takes l0:l1");
    try {
        int a = std::stoi(w[0]), b = std::stoi(w[1]);
        if (a > b) throw ParseError("empty window");
        return {a, b};
    } catch (const std::logic_error&) {
        throw ParseError("bad window " + s);
    }
}

TwistList twists_arg(const std::string& s) {
    TwistList t;
    for (const auto& p : split(s, ",")) {
        try {
            t.push_back(std::stoi(p));
        } catch (const std::logic_error&) {
            throw ParseError("bad twist list " + s);
        }
    }
    return t;
}

std::string vec_str(const std::vector<int>& v) {
    std::string s = "(";
    for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + std::to_string(v[i]);
    return s + ")";
}

SampleSpec sample(const Opts& o) { return {o.exhaustive, o.samples, o.seed}; }

/* (p^2+1)(p^2+p+1) lines, (p^4-1)/(p-1) planes */
template <class K>
void check_exhaustive(const K& k, const Opts& o, bool lines) {
    if (!o.exhaustive) return;
    if constexpr (std::is_same_v<K, Rationals>) {
        throw ParseError("--exhaustive needs a prime field");
    } else {
        double p = k.p();
        double n = lines ? (p * p + 1) * (p * p + p + 1) : (p * p * p * p - 1) / (p - 1);
        if (n > 2e6) throw ParseError("exhaustive scan over F_" + std::to_string(k.p()) + " is too large; use --samples");
    }
}

template <class K>
std::string universe(const K& k, const Opts& o, const char* what) {
    std::string u = std::string(what) + " over " + k.spec().str();
    return u + (o.exhaustive ? " exhaustive" : " samples=" + std::to_string(o.samples) + " seed=" + std::to_string(o.seed));
}

template <class K>
int run_coh(const Complex<K>& m, const Opts& o) {
    auto [a, b] = window_arg(o.window);
    std::cout << coh_table(o.dual ? dualize(m) : m, a, b).str();
    return 0;
}

template <class K>
int run_chern(const Complex<K>& m, const Opts&) {
    auto c = chern(m);
    std::cout << c.rank << " " << c.c1 << " " << c.c2 << " " << c.c3 << "\n";
    return 0;
}

template <class K>
int run_spectrum(const Complex<K>& m, const Opts&) {
    auto c = chern(m);
    auto t = coh_table(m, spectrum_window_lo(c), spectrum_window_hi(c));
    auto s = spectrum(t, c);
    if (!s.found) {
        std::cout << "none " << s.failure << "\n";
        return 1;
    }
    bool ok = s.connected && s.sum_matches_c3 && s.in_allowed_list;
    std::cout << vec_str(s.k) << " " << (ok ? "OK" : "FAIL") << "\tconnected=" << s.connected
              << "\tsum_c3=" << s.sum_matches_c3 << "\tallowed=" << s.in_allowed_list << "\n";
    return ok ? 0 : 1;
}

template <class K>
int run_split(const Complex<K>& m, const Opts& o) {
    if (o.line.empty()) throw ParseError("--line is required");
    auto r = splitting_type(restrict_to(o.dual ? dualize(m) : m, line_arg(m.k, o.line)));
    if (!r.ok) throw CheckFailed(r.failure);
    std::cout << r.split.str() << "\n";
    return 0;
}

template <class K>
int run_restrict(const Complex<K>& m, const Opts& o) {
    if (o.line.empty() == o.plane.empty()) throw ParseError("give exactly one of --plane and --line");
    auto sub = o.plane.empty() ? line_arg(m.k, o.line) : LinearSubspace<K>::plane(point(m.k, o.plane), m.k);
    std::cout << print_monad(restrict_to(m, sub));
    return 0;
}

template <class K>
int run_scan_lines(const Complex<K>& m, const Opts& o) {
    check_exhaustive(m.k, o, true);
    std::cout << jumping_line_scan(m, line_set(m.k, sample(o)), universe(m.k, o, "lines")).tsv();
    return 0;
}

template <class K>
int run_scan_planes(const Complex<K>& m, const Opts& o) {
    check_exhaustive(m.k, o, false);
    std::cout << restriction_stability_sample(m, plane_set(m.k, sample(o)), universe(m.k, o, "planes")).tsv();
    return 0;
}

template <class K>
int run_mu(const Complex<K>& m, const Opts& o) {
    Side side;
    if (o.side == "E") side = Side::E;
    else if (o.side == "dual") side = Side::Dual;
    else throw ParseError("--side is E or dual");
    check_exhaustive(m.k, o, false);
    auto mu = mu_build(m, side);
    std::cout << "# d\t" << mu.d << "\n# rows\t" << mu.rows << "\n";
    for (std::size_t i = 0; i < mu.M.size(); ++i) std::cout << "# M_" << i << "\n" << mu.M[i].str();
    auto kd = kernel_degree(mu);
    std::cout << "# kernel_degree\t" << (kd ? std::to_string(*kd) : "none") << "\n";
    std::cout << mu_corank_scan(mu, plane_set(m.k, sample(o)), universe(m.k, o, "planes")).tsv();
    return 0;
}

template <class K>
int run_stability(const Complex<K>& m, const Opts&) {
    auto s = stability_check(m);
    std::cout << s.str() << "\n";
    return s.verdict == Verdict::Stable ? 0 : 1;
}

template <class K>
int run_solve_alpha(const Complex<K>& m, const Opts& o) {
    if (o.left_shape.empty()) throw ParseError("--left-shape is required");
    const auto* beta = m.diff(m.middle);
    if (!beta) throw ParseError("no map leaves the middle term");
    auto a = solve_left_differential(*beta, twists_arg(o.left_shape));
    std::cout << "dim\t" << a.dim << "\n";
    for (std::size_t i = 0; i < a.basis.size(); ++i) std::cout << "# basis " << i << "\n" << print_map(a.basis[i]);
    return 0;
}

template <class K>
int run_pencil(const Complex<K>& m, const Opts&) {
    const auto* phi = m.diff(m.pmin);
    if (!phi) throw ParseError("no map in the input");
    auto pc = pencil_classify(*phi);
    std::cout << pc.str() << "\n";
    return pc.candidates.empty() ? 1 : 0;
}

template <class K>
using Runner = int (*)(const Complex<K>&, const Opts&);

template <class K>
int dispatch_on(const K& k, const MonadDoc& d, const std::string& cmd, const Opts& o) {
    static const std::map<std::string, Runner<K>> table{
        {"coh", run_coh<K>},           {"chern", run_chern<K>},
        {"spectrum", run_spectrum<K>}, {"split", run_split<K>},
        {"restrict", run_restrict<K>}, {"scan-lines", run_scan_lines<K>},
        {"scan-planes", run_scan_planes<K>}, {"mu", run_mu<K>},
        {"stability", run_stability<K>}, {"solve-alpha", run_solve_alpha<K>},
        {"pencil", run_pencil<K>}};
    return table.at(cmd)(to_complex(k, d), o);
}

FieldSpec field_of(const Opts& o, const FieldSpec& fallback) {
    if (o.field.empty()) return fallback;
    try {
        return FieldSpec::parse(o.field);
    } catch (const std::exception& e) {
        throw ParseError(e.what());
    }
}

int on_file(const std::string& cmd, const Opts& o) {
    auto d = read_doc(o.input);
    auto f = field_of(o, d.field);
    if (f.kind == FieldSpec::Kind::Rationals) return dispatch_on(Rationals(), d, cmd, o);
    return dispatch_on(PrimeField(f.p), d, cmd, o);
}

template <class K>
int zoo_build(const K& k, const Opts& o) {
    FamilyParams fp{o.family, {}, o.seed};
    if (!o.params.empty())
        for (const auto& p : split(o.params, ",")) fp.params.push_back(rational(p));
    auto m = build(k, fp);
    std::cout << print_monad(m);
    return 0;
}

int run_zoo(const Opts& o) {
    const auto names = family_names();
    if (std::find(names.begin(), names.end(), o.family) == names.end()) throw ParseError("unknown family " + o.family);
    auto f = field_of(o, FieldSpec::rationals());
    if (f.kind == FieldSpec::Kind::Rationals) return zoo_build(Rationals(), o);
    return zoo_build(PrimeField(f.p), o);
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"monads of line bundles on projective space"};
    app.require_subcommand(1);
    Opts o;
    if (const char* env = std::getenv("MONAD_SEED")) o.seed = std::strtoull(env, nullptr, 10);
    app.add_option("--field", o.field, "q or fp:<p>; defaults to the field named in the input");
    app.add_option("--seed", o.seed, "RNG seed (env MONAD_SEED)");

    auto file_cmd = [&](const std::string& name, const std::string& help) {
        auto* c = app.add_subcommand(name, help);
        c->add_option("input", o.input, "monad file, - for stdin")->required();
        c->add_option("--field", o.field);
        c->add_option("--seed", o.seed);
        return c;
    };
    auto* coh = file_cmd("coh", "cohomology table as TSV");
    coh->add_option("--window", o.window, "l0:l1");
    coh->add_flag("--dual", o.dual);
    file_cmd("chern", "rank c1 c2 c3");
    file_cmd("spectrum", "spectrum and its checks");
    auto* sp = file_cmd("split", "splitting type on a line");
    sp->add_option("--line", o.line, "a:b:c:d,e:f:g:h");
    sp->add_flag("--dual", o.dual);
    auto* rs = file_cmd("restrict", "restriction to a plane or line");
    rs->add_option("--plane", o.plane, "a:b:c:d");
    rs->add_option("--line", o.line, "a:b:c:d,e:f:g:h");
    for (const char* name : {"scan-lines", "scan-planes", "mu"}) {
        auto* c = file_cmd(name, std::string(name) + " report as TSV");
        c->add_flag("--exhaustive", o.exhaustive, "every line or plane over F_p");
        c->add_option("--samples", o.samples);
        c->add_option("--threads", o.threads, "worker threads; output does not depend on it");
        if (std::string(name) == "mu") c->add_option("--side", o.side, "E or dual");
    }
    file_cmd("stability", "stable, unstable or unsupported");
    file_cmd("solve-alpha", "maps alpha with beta o alpha = 0")->add_option("--left-shape", o.left_shape, "twists, e.g. -1,-1,-1");
    file_cmd("pencil", "classify a 2x3 matrix of linear forms");

    auto* zoo = app.add_subcommand("zoo", "example bundles");
    zoo->require_subcommand(1);
    auto* zb = zoo->add_subcommand("build", "print a family member");
    zb->add_option("family", o.family)->required();
    zb->add_option("--params", o.params, "comma separated rationals");
    zb->add_option("--field", o.field);
    zb->add_option("--seed", o.seed);
    zoo->add_subcommand("list", "family names");

    auto* vp = app.add_subcommand("verify-paper", "run the acceptance checks");
    vp->add_flag("--quick", o.quick);
    vp->add_option("--seed", o.seed);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int rc = app.exit(e);
        return rc == 0 ? 0 : 2;
    }

    try {
        set_scan_threads(o.threads);
        auto* cmd = app.get_subcommands().front();
        const auto name = cmd->get_name();
        if (name == "verify-paper") {
            auto rep = run_acceptance({o.seed, o.quick});
            std::cout << rep.str();
            return rep.all_pass() ? 0 : 1;
        }
        if (name == "zoo") {
            if (zoo->got_subcommand("list")) {
                for (const auto& f : family_names()) std::cout << f << "\t" << declared_chern(f).str() << "\n";
                return 0;
            }
            return run_zoo(o);
        }
        return on_file(name, o);
    } catch (const ParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "failed: " << e.what() << "\n";
        return 1;
    }
}
