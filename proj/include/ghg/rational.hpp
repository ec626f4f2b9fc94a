#pragma once

#include <gmpxx.h>

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <memory>
#include <string>
#include <string_view>

namespace ghg {

// Exact rational number, always kept in canonical form (den > 0, gcd = 1).
// Values whose numerator and denominator fit in 63 bits are stored inline;
// anything larger lives in an owned mpq. The representation is unique: a
// value that fits inline is never held in the big form.
class Rational {
public:
    Rational() = default;
    Rational(const Rational& o) : n_(o.n_), d_(o.d_) {
        if (o.big_) big_ = std::make_unique<mpq_class>(*o.big_);
    }
    Rational& operator=(const Rational& o) {
        if (this != &o) {
            n_ = o.n_;
            d_ = o.d_;
            big_ = o.big_ ? std::make_unique<mpq_class>(*o.big_) : nullptr;
        }
        return *this;
    }
    Rational(Rational&&) noexcept = default;
    Rational& operator=(Rational&&) noexcept = default;
    Rational(long v) { set_small_or_big(v, 1); }
    Rational(int v) : n_(v) {}
    Rational(long num, long den);
    explicit Rational(const mpz_class& z) { assign(mpq_class(z)); }
    explicit Rational(const mpq_class& q) {
        mpq_class c(q);
        c.canonicalize();
        assign(std::move(c));
    }

    // Accepts "p", "-p", "p/q"; throws std::invalid_argument otherwise.
    static Rational parse(std::string_view s);

    mpq_class to_mpq() const;
    mpz_class num() const { return big_ ? mpz_class(big_->get_num()) : mpz_class(long(n_)); }
    mpz_class den() const { return big_ ? mpz_class(big_->get_den()) : mpz_class(long(d_)); }

    bool is_zero() const { return !big_ && n_ == 0; }
    bool is_one() const { return !big_ && n_ == 1 && d_ == 1; }
    bool is_integer() const { return big_ ? big_->get_den() == 1 : d_ == 1; }
    int sign() const { return big_ ? sgn(*big_) : (n_ > 0) - (n_ < 0); }
    double to_double() const { return big_ ? big_->get_d() : double(n_) / double(d_); }
    std::string str() const;

    Rational& operator+=(const Rational& o);
    Rational& operator-=(const Rational& o);
    Rational& operator*=(const Rational& o);
    Rational& operator/=(const Rational& o);

    friend Rational operator+(Rational a, const Rational& b) { return a += b; }
    friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
    friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
    friend Rational operator/(Rational a, const Rational& b) { return a /= b; }
    Rational operator-() const;

    friend bool operator==(const Rational& a, const Rational& b) {
        if (!a.big_ && !b.big_) return a.n_ == b.n_ && a.d_ == b.d_;
        if (a.big_ && b.big_) return *a.big_ == *b.big_;
        return false;
    }
    friend std::strong_ordering operator<=>(const Rational& a, const Rational& b);

    Rational inverse() const;
    Rational pow(int e) const;
    Rational abs() const { return sign() < 0 ? -*this : *this; }

private:
    void set_small_or_big(__int128 n, __int128 d);
    void assign(mpq_class&& q);
    void big_op(const Rational& o, void (*op)(mpq_ptr, mpq_srcptr, mpq_srcptr));

    std::int64_t n_ = 0;
    std::int64_t d_ = 1;
    std::unique_ptr<mpq_class> big_;
};

std::ostream& operator<<(std::ostream& os, const Rational& r);

mpz_class factorial(unsigned n);
mpz_class binomial(unsigned n, unsigned k);

}  // namespace ghg
