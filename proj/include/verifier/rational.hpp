#pragma once

#include <gmp.h>

#include <cstdint>
#include <stdexcept>
#include <string>
#include <utility>

namespace hv {

/**
 * Arbitrary-precision rational, always stored in canonical form.
 * Thin value-semantics wrapper around GMP's mpq_t.
 */
class BigRational {
public:
    BigRational() { mpq_init(v_); }
    BigRational(long n) {
        mpq_init(v_);
        mpq_set_si(v_, n, 1);
    }
    BigRational(long n, long d) {
        if (d == 0) throw std::invalid_argument("rational with zero denominator");
        mpq_init(v_);
        mpq_set_si(v_, n, 1);
        mpq_t den;
        mpq_init(den);
        mpq_set_si(den, d, 1);
        mpq_div(v_, v_, den);
        mpq_clear(den);
    }
    explicit BigRational(const std::string& s) {
        mpq_init(v_);
        if (mpq_set_str(v_, s.c_str(), 10) != 0) {
            mpq_clear(v_);
            throw std::invalid_argument("bad rational literal: " + s);
        }
        if (mpz_sgn(mpq_denref(v_)) == 0) {
            mpq_clear(v_);
            throw std::invalid_argument("rational with zero denominator: " + s);
        }
        mpq_canonicalize(v_);
    }
    BigRational(const BigRational& o) {
        mpq_init(v_);
        mpq_set(v_, o.v_);
    }
    BigRational(BigRational&& o) noexcept {
        mpq_init(v_);
        mpq_swap(v_, o.v_);
    }
    BigRational& operator=(const BigRational& o) {
        if (this != &o) mpq_set(v_, o.v_);
        return *this;
    }
    BigRational& operator=(BigRational&& o) noexcept {
        if (this != &o) mpq_swap(v_, o.v_);
        return *this;
    }
    ~BigRational() { mpq_clear(v_); }

    BigRational& operator+=(const BigRational& o) {
        mpq_add(v_, v_, o.v_);
        return *this;
    }
    BigRational& operator-=(const BigRational& o) {
        mpq_sub(v_, v_, o.v_);
        return *this;
    }
    BigRational& operator*=(const BigRational& o) {
        mpq_mul(v_, v_, o.v_);
        return *this;
    }
    BigRational& operator/=(const BigRational& o) {
        if (o.is_zero()) throw std::domain_error("rational division by zero");
        mpq_div(v_, v_, o.v_);
        return *this;
    }

    friend BigRational operator+(BigRational a, const BigRational& b) { return a += b; }
    friend BigRational operator-(BigRational a, const BigRational& b) { return a -= b; }
    friend BigRational operator*(BigRational a, const BigRational& b) { return a *= b; }
    friend BigRational operator/(BigRational a, const BigRational& b) { return a /= b; }
    BigRational operator-() const {
        BigRational r;
        mpq_neg(r.v_, v_);
        return r;
    }

    friend bool operator==(const BigRational& a, const BigRational& b) {
        return mpq_equal(a.v_, b.v_) != 0;
    }
    friend bool operator!=(const BigRational& a, const BigRational& b) { return !(a == b); }
    friend bool operator<(const BigRational& a, const BigRational& b) {
        return mpq_cmp(a.v_, b.v_) < 0;
    }
    friend bool operator>(const BigRational& a, const BigRational& b) { return b < a; }
    friend bool operator<=(const BigRational& a, const BigRational& b) { return !(b < a); }
    friend bool operator>=(const BigRational& a, const BigRational& b) { return !(a < b); }

    int sign() const { return mpq_sgn(v_); }
    bool is_zero() const { return mpq_sgn(v_) == 0; }
    bool is_integer() const { return mpz_cmp_ui(mpq_denref(v_), 1) == 0; }

    BigRational abs() const {
        BigRational r;
        mpq_abs(r.v_, v_);
        return r;
    }

    BigRational pow(unsigned e) const {
        BigRational r;
        mpz_pow_ui(mpq_numref(r.v_), mpq_numref(v_), e);
        mpz_pow_ui(mpq_denref(r.v_), mpq_denref(v_), e);
        return r;
    }

    BigRational num() const {
        BigRational r;
        mpq_set_z(r.v_, mpq_numref(v_));
        return r;
    }
    BigRational den() const {
        BigRational r;
        mpq_set_z(r.v_, mpq_denref(v_));
        return r;
    }

    /// Largest integer n with n <= value.
    BigRational floor() const {
        BigRational r;
        mpz_fdiv_q(mpq_numref(r.v_), mpq_numref(v_), mpq_denref(v_));
        mpz_set_ui(mpq_denref(r.v_), 1);
        return r;
    }

    double to_double() const { return mpq_get_d(v_); }

    std::string str() const {
        char* s = mpq_get_str(nullptr, 10, v_);
        std::string out(s);
        void (*freefn)(void*, size_t);
        mp_get_memory_functions(nullptr, nullptr, &freefn);
        freefn(s, out.size() + 1);
        return out;
    }

    friend void swap(BigRational& a, BigRational& b) noexcept { mpq_swap(a.v_, b.v_); }

    /// gcd of numerators over lcm of denominators; the result is canonical since
    /// any prime dividing both numerators divides neither denominator.
    friend BigRational gcd(const BigRational& a, const BigRational& b) {
        BigRational r;
        if (a.is_zero()) {
            mpq_abs(r.v_, b.v_);
            return r;
        }
        if (b.is_zero()) {
            mpq_abs(r.v_, a.v_);
            return r;
        }
        mpz_gcd(mpq_numref(r.v_), mpq_numref(a.v_), mpq_numref(b.v_));
        mpz_lcm(mpq_denref(r.v_), mpq_denref(a.v_), mpq_denref(b.v_));
        return r;
    }

private:
    mpq_t v_;
};

}  // namespace hv
