#pragma once

// Numbers with ±∞ used by the internal fixpoints. Instantiated with checked
// 64-bit integers (the fast path, on costs scaled to a common denominator)
// and with GMP types when the fast path overflows.

#include "pdcost/ext_rational.hpp"
#include "pdcost/rational.hpp"

#include <cstdint>

namespace pdcost::detail {

struct Overflow {};

inline std::int64_t num_add(std::int64_t a, std::int64_t b) {
    std::int64_t r;
    if (__builtin_add_overflow(a, b, &r)) throw Overflow{};
    return r;
}
inline Integer num_add(const Integer& a, const Integer& b) { return Integer(a + b); }
inline Rational num_add(const Rational& a, const Rational& b) { return Rational(a + b); }

inline int num_sign(std::int64_t a) { return (a > 0) - (a < 0); }
inline int num_sign(const Integer& a) { return sgn(a); }
inline int num_sign(const Rational& a) { return sgn(a); }

template <class Num>
struct Ext {
    enum class Kind : std::uint8_t { Neg, Fin, Pos };
    Kind kind = Kind::Pos;
    Num v{};

    static Ext pos() { return Ext{}; }
    static Ext neg() { return Ext{Kind::Neg, Num{}}; }
    static Ext fin(Num x) { return Ext{Kind::Fin, std::move(x)}; }

    bool finite() const { return kind == Kind::Fin; }
    bool is_pos() const { return kind == Kind::Pos; }
    bool is_neg() const { return kind == Kind::Neg; }

    bool negative() const { return kind == Kind::Neg || (finite() && num_sign(v) < 0); }
    bool nonpositive() const { return kind == Kind::Neg || (finite() && num_sign(v) <= 0); }

    friend Ext operator+(const Ext& a, const Ext& b) {
        if (a.is_pos() || b.is_pos()) return pos();
        if (a.is_neg() || b.is_neg()) return neg();
        return fin(num_add(a.v, b.v));
    }
    friend bool operator<(const Ext& a, const Ext& b) {
        if (a.kind != b.kind) return a.kind < b.kind;
        return a.finite() && a.v < b.v;
    }
    friend bool operator==(const Ext& a, const Ext& b) {
        return a.kind == b.kind && (!a.finite() || a.v == b.v);
    }
};

inline ExtendedRational to_extended(const Ext<Rational>& x) {
    if (x.is_pos()) return ExtendedRational::pos_infinity();
    if (x.is_neg()) return ExtendedRational::neg_infinity();
    return ExtendedRational(x.v);
}

}  // namespace pdcost::detail
