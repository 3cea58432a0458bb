#include "monad/field.hpp"

namespace monad {

bool is_prime(std::uint64_t n) {
    if (n < 2) return false;
    for (std::uint64_t d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

FieldSpec FieldSpec::prime(std::uint32_t p) {
    if (!is_prime(p)) throw std::invalid_argument("not a prime: " + std::to_string(p));
    return {Kind::PrimeField, p};
}

FieldSpec FieldSpec::parse(const std::string& s) {
    if (s == "q" || s == "Q") return rationals();
    if (s.rfind("fp:", 0) == 0) {
        std::size_t used = 0;
        unsigned long v = 0;
        try {
            v = std::stoul(s.substr(3), &used);
        } catch (const std::exception&) {
            throw std::invalid_argument("bad field spec: " + s);
        }
        if (used != s.size() - 3 || v >= (1ul << 31)) throw std::invalid_argument("bad field spec: " + s);
        return prime(static_cast<std::uint32_t>(v));
    }
    throw std::invalid_argument("bad field spec: " + s);
}

std::string FieldSpec::str() const { return kind == Kind::Rationals ? "q" : "fp:" + std::to_string(p); }

PrimeField::Elem PrimeField::from_q(const mpq_class& q) const {
    mpz_class num = q.get_num() % p_;
    mpz_class den = q.get_den() % p_;
    if (den == 0) throw std::domain_error("denominator divisible by " + std::to_string(p_));
    if (num < 0) num += p_;
    return mul(static_cast<Elem>(num.get_ui()), inv(static_cast<Elem>(den.get_ui())));
}

PrimeField::Elem PrimeField::inv(Elem a) const {
    if (a == 0) throw std::domain_error("inverse of zero");
    /* extended Euclid */
    long long t = 0, nt = 1, r = p_, nr = a;
    while (nr != 0) {
        long long q = r / nr;
        long long tmp = t - q * nt;
        t = nt;
        nt = tmp;
        tmp = r - q * nr;
        r = nr;
        nr = tmp;
    }
    if (t < 0) t += p_;
    return static_cast<Elem>(t);
}

}  // namespace monad
