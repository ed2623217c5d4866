#pragma once

#include <cstdint>
#include <memory>
#include <stdexcept>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace hopf2x {

class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class FieldMismatch : public Error {
public:
    using Error::Error;
};

class DivisionByZero : public Error {
public:
    DivisionByZero() : Error("division by zero") {}
};

// The base field: Q when characteristic is 0, otherwise F_p with p < 2^31.
class Field {
public:
    constexpr Field() = default;

    static constexpr Field rationals() { return Field(); }
    static Field prime(std::uint32_t p);

    constexpr bool is_rational() const { return p_ == 0; }
    constexpr std::uint32_t characteristic() const { return p_; }
    std::string name() const;

    friend constexpr bool operator==(Field a, Field b) { return a.p_ == b.p_; }

private:
    friend class Scalar;
    explicit constexpr Field(std::uint32_t p) : p_(p) {}
    std::uint32_t p_ = 0;
};

// Exact field element. Rationals stay in a normalized int64 pair while they
// fit and move to GMP otherwise; F_p elements are residues in [0, p).
class Scalar {
public:
    Scalar() = default;
    Scalar(Field f, std::int64_t v);
    Scalar(Field f, std::int64_t num, std::int64_t den);

    static Scalar zero(Field f) { return Scalar(f, 0); }
    static Scalar one(Field f) { return Scalar(f, 1); }
    static Scalar from_mpq(Field f, const mpq_class& q);
    // Accepts "a", "-a", "a/b" with decimal integers.
    static Scalar parse(Field f, std::string_view text);

    Field field() const { return Field(p_); }
    bool is_zero() const { return !big_ && num_ == 0; }
    bool is_one() const { return !big_ && num_ == 1 && den_ == 1; }

    Scalar operator-() const;
    Scalar inverse() const;

    friend Scalar operator+(const Scalar& a, const Scalar& b);
    friend Scalar operator-(const Scalar& a, const Scalar& b);
    friend Scalar operator*(const Scalar& a, const Scalar& b);
    friend Scalar operator/(const Scalar& a, const Scalar& b);
    Scalar& operator+=(const Scalar& b) { return *this = *this + b; }
    Scalar& operator-=(const Scalar& b) { return *this = *this - b; }
    Scalar& operator*=(const Scalar& b) { return *this = *this * b; }

    friend bool operator==(const Scalar& a, const Scalar& b);

    mpq_class to_mpq() const;
    std::string str() const;

private:
    void set_from_mpq(const mpq_class& q);
    static void check_same(const Scalar& a, const Scalar& b);

    std::uint32_t p_ = 0;
    std::int64_t num_ = 0;
    std::int64_t den_ = 1;
    std::shared_ptr<const mpq_class> big_;
};

}  // namespace hopf2x
