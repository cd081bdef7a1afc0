#pragma once

#include "pdcost/rational.hpp"

#include <compare>
#include <string>

namespace pdcost {

/// A rational extended with +∞ (no word contributes) and −∞ (unbounded
/// below). Totally ordered; addition treats −∞ + (+∞) as +∞ since an empty
/// operand means the combination derives nothing.
class ExtendedRational {
public:
    enum class Kind { NegInfinity, Finite, PosInfinity };

    ExtendedRational() : kind_(Kind::PosInfinity) {}
    ExtendedRational(Rational value) : kind_(Kind::Finite), value_(std::move(value)) {}  // NOLINT

    static ExtendedRational pos_infinity() { return ExtendedRational(Kind::PosInfinity); }
    static ExtendedRational neg_infinity() { return ExtendedRational(Kind::NegInfinity); }

    Kind kind() const noexcept { return kind_; }
    bool is_finite() const noexcept { return kind_ == Kind::Finite; }
    bool is_pos_infinity() const noexcept { return kind_ == Kind::PosInfinity; }
    bool is_neg_infinity() const noexcept { return kind_ == Kind::NegInfinity; }

    /// Only meaningful when finite.
    const Rational& value() const noexcept { return value_; }

    ExtendedRational& operator+=(const ExtendedRational& rhs) {
        if (kind_ == Kind::PosInfinity || rhs.kind_ == Kind::PosInfinity) {
            kind_ = Kind::PosInfinity;
        } else if (kind_ == Kind::NegInfinity || rhs.kind_ == Kind::NegInfinity) {
            kind_ = Kind::NegInfinity;
        } else {
            value_ += rhs.value_;
        }
        return *this;
    }

    friend ExtendedRational operator+(ExtendedRational lhs, const ExtendedRational& rhs) {
        lhs += rhs;
        return lhs;
    }

    friend bool operator==(const ExtendedRational& a, const ExtendedRational& b) {
        if (a.kind_ != b.kind_) return false;
        return a.kind_ != Kind::Finite || a.value_ == b.value_;
    }

    friend std::strong_ordering operator<=>(const ExtendedRational& a, const ExtendedRational& b) {
        if (a.kind_ != b.kind_) return static_cast<int>(a.kind_) <=> static_cast<int>(b.kind_);
        if (a.kind_ != Kind::Finite) return std::strong_ordering::equal;
        int c = cmp(a.value_, b.value_);
        return c < 0 ? std::strong_ordering::less
                     : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
    }

    /// Sign tests used by the decision procedures.
    bool is_negative() const { return kind_ == Kind::NegInfinity || (is_finite() && sgn(value_) < 0); }
    bool is_nonpositive() const {
        return kind_ == Kind::NegInfinity || (is_finite() && sgn(value_) <= 0);
    }

private:
    explicit ExtendedRational(Kind kind) : kind_(kind) {}

    Kind kind_;
    Rational value_;
};

std::string to_string(const ExtendedRational& value);

}  // namespace pdcost
