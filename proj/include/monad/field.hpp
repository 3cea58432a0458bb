#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <random>
#include <stdexcept>
#include <string>

namespace monad {

struct FieldSpec {
    enum class Kind { Rationals, PrimeField };
    Kind kind = Kind::Rationals;
    std::uint32_t p = 0;

    static FieldSpec rationals() { return {}; }
    static FieldSpec prime(std::uint32_t p);
    /* "q" or "fp:<p>" */
    static FieldSpec parse(const std::string& s);
    std::string str() const;
    bool operator==(const FieldSpec&) const = default;
};

bool is_prime(std::uint64_t n);

/* deterministic generator; the mapping to ranges is ours so reports do not
   depend on the standard library's distributions */
class Rng {
public:
    explicit Rng(std::uint64_t seed) : g_(seed ^ 0x9e3779b97f4a7c15ULL) {}
    std::uint64_t next() { return g_(); }
    std::uint64_t below(std::uint64_t n) { return n == 0 ? 0 : g_() % n; }
    long long between(long long lo, long long hi) {
        return lo + static_cast<long long>(below(static_cast<std::uint64_t>(hi - lo + 1)));
    }
    Rng fork(std::uint64_t salt) { return Rng(next() ^ (salt * 0xbf58476d1ce4e5b9ULL)); }

private:
    std::mt19937_64 g_;
};

class Rationals {
public:
    using Elem = mpq_class;

    FieldSpec spec() const { return FieldSpec::rationals(); }
    Elem zero() const { return Elem(0); }
    Elem one() const { return Elem(1); }
    Elem from_int(long long v) const { return Elem(static_cast<long>(v)); }
    Elem from_q(const mpq_class& q) const { return q; }
    Elem add(const Elem& a, const Elem& b) const { return a + b; }
    Elem sub(const Elem& a, const Elem& b) const { return a - b; }
    Elem mul(const Elem& a, const Elem& b) const { return a * b; }
    Elem neg(const Elem& a) const { return -a; }
    Elem inv(const Elem& a) const {
        if (sgn(a) == 0) throw std::domain_error("inverse of zero");
        return 1 / a;
    }
    /* a += b*c, the inner loop of elimination */
    void axpy(Elem& a, const Elem& b, const Elem& c) const { a += b * c; }
    bool is_zero(const Elem& a) const { return sgn(a) == 0; }
    bool eq(const Elem& a, const Elem& b) const { return a == b; }
    /* small integers; enough to avoid special position for sampling */
    Elem random(Rng& r) const { return from_int(r.between(-9, 9)); }
    Elem random_nonzero(Rng& r) const {
        long long v = r.between(1, 9);
        return from_int(r.below(2) ? v : -v);
    }
    mpq_class to_q(const Elem& a) const { return a; }
    std::string str(const Elem& a) const { return a.get_str(); }
    bool operator==(const Rationals&) const { return true; }
};

class PrimeField {
public:
    using Elem = std::uint32_t;

    explicit PrimeField(std::uint32_t p) : p_(p) {
        if (p < 2 || p >= (1u << 31) || !is_prime(p))
            throw std::invalid_argument("modulus must be a prime below 2^31: " + std::to_string(p));
    }
    std::uint32_t p() const { return p_; }
    FieldSpec spec() const { return FieldSpec::prime(p_); }
    Elem zero() const { return 0; }
    Elem one() const { return 1; }
    Elem from_int(long long v) const {
        long long r = v % static_cast<long long>(p_);
        return static_cast<Elem>(r < 0 ? r + p_ : r);
    }
    Elem from_q(const mpq_class& q) const;
    Elem add(Elem a, Elem b) const {
        std::uint64_t s = std::uint64_t(a) + b;
        return static_cast<Elem>(s >= p_ ? s - p_ : s);
    }
    Elem sub(Elem a, Elem b) const { return a >= b ? a - b : static_cast<Elem>(std::uint64_t(a) + p_ - b); }
    Elem mul(Elem a, Elem b) const { return static_cast<Elem>(std::uint64_t(a) * b % p_); }
    Elem neg(Elem a) const { return a == 0 ? 0 : p_ - a; }
    Elem inv(Elem a) const;
    void axpy(Elem& a, Elem b, Elem c) const { a = static_cast<Elem>((a + std::uint64_t(b) * c) % p_); }
    bool is_zero(Elem a) const { return a == 0; }
    bool eq(Elem a, Elem b) const { return a == b; }
    Elem random(Rng& r) const { return static_cast<Elem>(r.below(p_)); }
    Elem random_nonzero(Rng& r) const { return static_cast<Elem>(1 + r.below(p_ - 1)); }
    /* symmetric representative, used when printing */
    mpq_class to_q(Elem a) const {
        long v = a > p_ / 2 ? long(a) - long(p_) : long(a);
        return mpq_class(v);
    }
    std::string str(Elem a) const { return to_q(a).get_str(); }
    bool operator==(const PrimeField& o) const { return p_ == o.p_; }

private:
    std::uint32_t p_;
};

}  // namespace monad
