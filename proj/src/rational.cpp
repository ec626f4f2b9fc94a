#include "ghg/rational.hpp"

#include <cctype>
#include <climits>
#include <ostream>
#include <stdexcept>

namespace ghg {

namespace {

constexpr __int128 kMax = INT64_MAX;

std::uint64_t gcd64(std::uint64_t a, std::uint64_t b) {
    while (b) {
        std::uint64_t t = a % b;
        a = b;
        b = t;
    }
    return a;
}

std::uint64_t uabs(std::int64_t v) { return v < 0 ? std::uint64_t(0) - std::uint64_t(v) : std::uint64_t(v); }

unsigned __int128 uabs128(__int128 v) { return v < 0 ? -(unsigned __int128)v : (unsigned __int128)v; }

mpz_class to_mpz(__int128 v) {
    unsigned __int128 u = uabs128(v);
    mpz_class hi(static_cast<unsigned long>(u >> 64)), lo(static_cast<unsigned long>(u));
    mpz_class r = (hi << 64) + lo;
    return v < 0 ? mpz_class(-r) : r;
}

}  // namespace

void Rational::set_small_or_big(__int128 n, __int128 d) {
    // d > 0 and gcd(n, d) = 1 on entry.
    if (n <= kMax && n >= -kMax && d <= kMax) {
        n_ = std::int64_t(n);
        d_ = std::int64_t(d);
        big_.reset();
        return;
    }
    mpq_class q(to_mpz(n), to_mpz(d));
    assign(std::move(q));
}

void Rational::assign(mpq_class&& q) {
    const mpz_class& n = q.get_num();
    const mpz_class& d = q.get_den();
    if (n.fits_slong_p() && d.fits_slong_p() && n != LONG_MIN) {
        n_ = n.get_si();
        d_ = d.get_si();
        big_.reset();
        return;
    }
    if (big_) *big_ = std::move(q);
    else big_ = std::make_unique<mpq_class>(std::move(q));
}

void Rational::big_op(const Rational& o, void (*op)(mpq_ptr, mpq_srcptr, mpq_srcptr)) {
    if (!big_) big_ = std::make_unique<mpq_class>(to_mpq());
    mpq_class tb;
    mpq_srcptr b = o.big_ ? o.big_->get_mpq_t() : (tb = o.to_mpq()).get_mpq_t();
    op(big_->get_mpq_t(), big_->get_mpq_t(), b);
    const mpz_class& n = big_->get_num();
    const mpz_class& d = big_->get_den();
    if (n.fits_slong_p() && d.fits_slong_p() && n != LONG_MIN) {
        n_ = n.get_si();
        d_ = d.get_si();
        big_.reset();
    }
}

mpq_class Rational::to_mpq() const {
    if (big_) return *big_;
    mpq_class q;
    mpz_set_si(mpq_numref(q.get_mpq_t()), n_);
    mpz_set_si(mpq_denref(q.get_mpq_t()), d_);
    return q;
}

Rational::Rational(long num, long den) {
    if (den == 0) throw std::domain_error("zero denominator");
    mpq_class q(num, den);
    q.canonicalize();
    assign(std::move(q));
}

Rational& Rational::operator+=(const Rational& o) {
    if (!big_ && !o.big_) {
        if (d_ == 1 && o.d_ == 1) {
            set_small_or_big(__int128(n_) + o.n_, 1);
            return *this;
        }
        std::uint64_t g = gcd64(std::uint64_t(d_), std::uint64_t(o.d_));
        if (g == 1) {
            set_small_or_big(__int128(n_) * o.d_ + __int128(o.n_) * d_, __int128(d_) * o.d_);
            return *this;
        }
        std::int64_t da = d_ / std::int64_t(g), db = o.d_ / std::int64_t(g);
        __int128 t = __int128(n_) * db + __int128(o.n_) * da;
        if (t == 0) {
            n_ = 0;
            d_ = 1;
            return *this;
        }
        std::uint64_t g2 = gcd64(std::uint64_t(uabs128(t) % g), g);
        set_small_or_big(t / g2, __int128(da) * (o.d_ / std::int64_t(g2)));
        return *this;
    }
    big_op(o, mpq_add);
    return *this;
}

Rational& Rational::operator-=(const Rational& o) { return *this += -o; }

Rational& Rational::operator*=(const Rational& o) {
    if (!big_ && !o.big_) {
        if (n_ == 0 || o.n_ == 0) {
            n_ = 0;
            d_ = 1;
            return *this;
        }
        std::int64_t g1 = std::int64_t(gcd64(uabs(n_), std::uint64_t(o.d_)));
        std::int64_t g2 = std::int64_t(gcd64(uabs(o.n_), std::uint64_t(d_)));
        set_small_or_big(__int128(n_ / g1) * (o.n_ / g2), __int128(d_ / g2) * (o.d_ / g1));
        return *this;
    }
    big_op(o, mpq_mul);
    return *this;
}

Rational Rational::operator-() const {
    Rational r;
    if (big_) r.assign(mpq_class(-*big_));
    else {
        r.n_ = -n_;
        r.d_ = d_;
    }
    return r;
}

std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
    int c;
    if (!a.big_ && !b.big_) {
        __int128 l = __int128(a.n_) * b.d_, r = __int128(b.n_) * a.d_;
        c = (l > r) - (l < r);
    } else {
        c = cmp(a.to_mpq(), b.to_mpq());
    }
    return c < 0 ? std::strong_ordering::less : c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal;
}

namespace {

bool all_digits(std::string_view s) {
    if (s.empty()) return false;
    for (char c : s)
        if (!std::isdigit(static_cast<unsigned char>(c))) return false;
    return true;
}

}  // namespace

Rational Rational::parse(std::string_view s) {
    std::string_view t = s;
    while (!t.empty() && std::isspace(static_cast<unsigned char>(t.front()))) t.remove_prefix(1);
    while (!t.empty() && std::isspace(static_cast<unsigned char>(t.back()))) t.remove_suffix(1);
    bool neg = false;
    if (!t.empty() && (t.front() == '-' || t.front() == '+')) {
        neg = t.front() == '-';
        t.remove_prefix(1);
    }
    auto slash = t.find('/');
    std::string_view n = t.substr(0, slash);
    std::string_view d = slash == std::string_view::npos ? std::string_view{"1"} : t.substr(slash + 1);
    if (!all_digits(n) || !all_digits(d))
        throw std::invalid_argument("malformed rational \"" + std::string(s) + "\"");
    mpz_class num(std::string(n), 10), den(std::string(d), 10);
    if (den == 0) throw std::invalid_argument("zero denominator in \"" + std::string(s) + "\"");
    return Rational(mpq_class(neg ? mpz_class(-num) : num, den));
}

std::string Rational::str() const {
    if (!big_) return d_ == 1 ? std::to_string(n_) : std::to_string(n_) + "/" + std::to_string(d_);
    if (big_->get_den() == 1) return big_->get_num().get_str();
    return big_->get_num().get_str() + "/" + big_->get_den().get_str();
}

Rational& Rational::operator/=(const Rational& o) {
    if (o.is_zero()) throw std::domain_error("division by zero rational");
    return *this *= o.inverse();
}

Rational Rational::inverse() const {
    if (is_zero()) throw std::domain_error("inverse of zero rational");
    Rational r;
    if (big_) {
        mpq_class q;
        mpq_inv(q.get_mpq_t(), big_->get_mpq_t());
        r.assign(std::move(q));
    } else {
        r.n_ = n_ < 0 ? -d_ : d_;
        r.d_ = n_ < 0 ? -n_ : n_;
    }
    return r;
}

Rational Rational::pow(int e) const {
    if (e < 0) return inverse().pow(-e);
    Rational r(1), b(*this);
    while (e) {
        if (e & 1) r *= b;
        b *= b;
        e >>= 1;
    }
    return r;
}

std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

mpz_class factorial(unsigned n) {
    mpz_class r;
    mpz_fac_ui(r.get_mpz_t(), n);
    return r;
}

mpz_class binomial(unsigned n, unsigned k) {
    mpz_class r;
    mpz_bin_uiui(r.get_mpz_t(), n, k);
    return r;
}

}  // namespace ghg
