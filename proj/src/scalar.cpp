#include "hopf2x/scalar.hpp"

#include <limits>

namespace hopf2x {

namespace {

using i128 = __int128;

constexpr i128 kMax = std::numeric_limits<std::int64_t>::max();
constexpr i128 kMin = -kMax;  // keep negation of num_ always safe

i128 gcd128(i128 a, i128 b)
{
    if (a < 0) a = -a;
    if (b < 0) b = -b;
    while (b != 0) {
        i128 t = a % b;
        a = b;
        b = t;
    }
    return a;
}

bool fits(i128 v) { return v >= kMin && v <= kMax; }

std::int64_t mod_pow(std::int64_t b, std::int64_t e, std::int64_t p)
{
    std::int64_t r = 1 % p;
    b %= p;
    while (e > 0) {
        if (e & 1) r = r * b % p;
        b = b * b % p;
        e >>= 1;
    }
    return r;
}

mpz_class to_mpz(std::int64_t v)
{
    mpz_class z;
    mpz_set_si(z.get_mpz_t(), static_cast<long>(v));
    return z;
}

}  // namespace

Field Field::prime(std::uint32_t p)
{
    if (p < 2 || p >= (1u << 31))
        throw Error("prime field characteristic must satisfy 2 <= p < 2^31");
    for (std::uint32_t d = 2; static_cast<std::uint64_t>(d) * d <= p; ++d)
        if (p % d == 0) throw Error("F_p requires prime p, got " + std::to_string(p));
    return Field(p);
}

std::string Field::name() const
{
    return p_ == 0 ? "Q" : "F_" + std::to_string(p_);
}

Scalar::Scalar(Field f, std::int64_t v) : p_(f.characteristic())
{
    if (p_ != 0) {
        std::int64_t r = v % static_cast<std::int64_t>(p_);
        num_ = r < 0 ? r + p_ : r;
    } else if (v == std::numeric_limits<std::int64_t>::min()) {
        set_from_mpq(mpq_class(to_mpz(v)));
    } else {
        num_ = v;
    }
}

Scalar::Scalar(Field f, std::int64_t num, std::int64_t den) : p_(f.characteristic())
{
    if (den == 0) throw DivisionByZero();
    if (p_ != 0) {
        *this = Scalar(f, num) / Scalar(f, den);
        return;
    }
    mpq_class q(to_mpz(num), to_mpz(den));
    q.canonicalize();
    set_from_mpq(q);
}

Scalar Scalar::from_mpq(Field f, const mpq_class& q)
{
    Scalar s;
    s.p_ = f.characteristic();
    if (s.p_ == 0) {
        s.set_from_mpq(q);
        return s;
    }
    mpz_class p(s.p_);
    mpz_class n = q.get_num() % p;
    mpz_class d = q.get_den() % p;
    if (d == 0) throw DivisionByZero();
    Scalar sn(f, n < 0 ? n.get_si() + s.p_ : n.get_si());
    Scalar sd(f, d < 0 ? d.get_si() + s.p_ : d.get_si());
    return sn / sd;
}

Scalar Scalar::parse(Field f, std::string_view text)
{
    std::string t(text);
    auto slash = t.find('/');
    mpq_class q;
    try {
        if (slash == std::string::npos) {
            q = mpq_class(mpz_class(t, 10));
        } else {
            mpz_class n(t.substr(0, slash), 10);
            mpz_class d(t.substr(slash + 1), 10);
            if (d == 0) throw DivisionByZero();
            q = mpq_class(n, d);
            q.canonicalize();
        }
    } catch (const std::invalid_argument&) {
        throw Error("malformed scalar \"" + t + "\"");
    }
    return from_mpq(f, q);
}

void Scalar::set_from_mpq(const mpq_class& q)
{
    if (mpz_fits_slong_p(q.get_num_mpz_t()) && mpz_fits_slong_p(q.get_den_mpz_t())) {
        long n = q.get_num().get_si();
        long d = q.get_den().get_si();
        if (n != std::numeric_limits<long>::min()) {
            num_ = n;
            den_ = d;
            big_.reset();
            return;
        }
    }
    num_ = 0;
    den_ = 1;
    big_ = std::make_shared<const mpq_class>(q);
}

void Scalar::check_same(const Scalar& a, const Scalar& b)
{
    if (a.p_ != b.p_)
        throw FieldMismatch("scalar field mismatch: " + a.field().name() + " vs " + b.field().name());
}

mpq_class Scalar::to_mpq() const
{
    if (big_) return *big_;
    return mpq_class(to_mpz(num_), to_mpz(den_));
}

std::string Scalar::str() const
{
    if (big_) return big_->get_str();
    if (den_ == 1) return std::to_string(num_);
    return std::to_string(num_) + "/" + std::to_string(den_);
}

Scalar Scalar::operator-() const
{
    Scalar r = *this;
    if (p_ != 0) {
        if (num_ != 0) r.num_ = p_ - num_;
    } else if (big_) {
        r.set_from_mpq(-*big_);
    } else {
        r.num_ = -num_;
    }
    return r;
}

Scalar Scalar::inverse() const
{
    if (is_zero()) throw DivisionByZero();
    Scalar r = *this;
    if (p_ != 0) {
        r.num_ = mod_pow(num_, p_ - 2, p_);
    } else if (big_) {
        r.set_from_mpq(1 / *big_);
    } else {
        r.num_ = num_ < 0 ? -den_ : den_;
        r.den_ = num_ < 0 ? -num_ : num_;
    }
    return r;
}

Scalar operator+(const Scalar& a, const Scalar& b)
{
    Scalar::check_same(a, b);
    Scalar r;
    r.p_ = a.p_;
    if (a.p_ != 0) {
        std::int64_t s = a.num_ + b.num_;
        r.num_ = s >= a.p_ ? s - a.p_ : s;
        return r;
    }
    if (!a.big_ && !b.big_) {
        if (a.den_ == 1 && b.den_ == 1) {
            i128 s = static_cast<i128>(a.num_) + b.num_;
            if (fits(s)) {
                r.num_ = static_cast<std::int64_t>(s);
                return r;
            }
        } else {
            i128 n = static_cast<i128>(a.num_) * b.den_ + static_cast<i128>(b.num_) * a.den_;
            i128 d = static_cast<i128>(a.den_) * b.den_;
            i128 g = gcd128(n, d);
            if (g > 1) {
                n /= g;
                d /= g;
            }
            if (n == 0) return r;
            if (fits(n) && fits(d)) {
                r.num_ = static_cast<std::int64_t>(n);
                r.den_ = static_cast<std::int64_t>(d);
                return r;
            }
        }
    }
    r.set_from_mpq(a.to_mpq() + b.to_mpq());
    return r;
}

Scalar operator-(const Scalar& a, const Scalar& b) { return a + (-b); }

Scalar operator*(const Scalar& a, const Scalar& b)
{
    Scalar::check_same(a, b);
    Scalar r;
    r.p_ = a.p_;
    if (a.p_ != 0) {
        r.num_ = static_cast<std::int64_t>(static_cast<std::uint64_t>(a.num_) * b.num_ % a.p_);
        return r;
    }
    if (a.is_zero() || b.is_zero()) return r;
    if (!a.big_ && !b.big_) {
        i128 n = static_cast<i128>(a.num_) * b.num_;
        i128 d = static_cast<i128>(a.den_) * b.den_;
        if (d != 1) {
            i128 g = gcd128(n, d);
            if (g > 1) {
                n /= g;
                d /= g;
            }
        }
        if (fits(n) && fits(d)) {
            r.num_ = static_cast<std::int64_t>(n);
            r.den_ = static_cast<std::int64_t>(d);
            return r;
        }
    }
    r.set_from_mpq(a.to_mpq() * b.to_mpq());
    return r;
}

Scalar operator/(const Scalar& a, const Scalar& b)
{
    Scalar::check_same(a, b);
    return a * b.inverse();
}

bool operator==(const Scalar& a, const Scalar& b)
{
    if (a.p_ != b.p_) return false;
    if (a.big_ || b.big_) {
        if (!a.big_ || !b.big_) return false;
        return *a.big_ == *b.big_;
    }
    return a.num_ == b.num_ && a.den_ == b.den_;
}

}  // namespace hopf2x
