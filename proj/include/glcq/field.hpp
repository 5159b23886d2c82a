#pragma once

#include <memory>
#include <string>

#include "glcq/errors.hpp"
#include "glcq/qpoly.hpp"
#include "glcq/rational.hpp"

namespace glcq {

/// The three coefficient-field modes: q transcendental over Q, q a primitive
/// L-th root of unity, or q a fixed nonzero rational.
enum class QMode { GenericQ, RootOfUnity, RationalQ };

class Field;
using FieldPtr = std::shared_ptr<const Field>;

/// Immutable description of the coefficient field. Scalars hold a shared
/// pointer to their field; two fields are interchangeable when their
/// descriptions match, not only when the pointers coincide.
class Field {
public:
    static FieldPtr generic_q() { return std::shared_ptr<Field>(new Field(QMode::GenericQ)); }

    static FieldPtr root_of_unity(unsigned L) {
        if (L < 1) throw IndexOutOfRange("root-of-unity order must be >= 1");
        auto f = std::shared_ptr<Field>(new Field(QMode::RootOfUnity));
        f->order_ = L;
        f->modulus_ = cyclotomic(L);
        return f;
    }

    static FieldPtr rational_q(Rational r) {
        if (r == 0) throw DivisionByZero("q must be nonzero");
        auto f = std::shared_ptr<Field>(new Field(QMode::RationalQ));
        f->q_value_ = std::move(r);
        return f;
    }

    QMode mode() const { return mode_; }

    unsigned root_order() const { return order_; }

    /// Phi_L, the modulus of the cyclotomic mode.
    const QPoly& modulus() const { return modulus_; }

    const Rational& q_value() const { return q_value_; }

    std::string describe() const {
        switch (mode_) {
        case QMode::GenericQ: return "generic";
        case QMode::RootOfUnity: return "root:" + std::to_string(order_);
        case QMode::RationalQ: return "rational:" + rational_to_string(q_value_);
        }
        return {};
    }

    friend bool operator==(const Field& a, const Field& b) {
        if (a.mode_ != b.mode_) return false;
        switch (a.mode_) {
        case QMode::GenericQ: return true;
        case QMode::RootOfUnity: return a.order_ == b.order_;
        case QMode::RationalQ: return a.q_value_ == b.q_value_;
        }
        return false;
    }

private:
    explicit Field(QMode mode) : mode_(mode) {}

    QMode mode_;
    unsigned order_ = 0;  // RootOfUnity
    QPoly modulus_;       // RootOfUnity
    Rational q_value_;    // RationalQ
};

inline bool same_field(const FieldPtr& a, const FieldPtr& b) {
    return a == b || (a && b && *a == *b);
}

inline void require_same_field(const FieldPtr& a, const FieldPtr& b) {
    if (!same_field(a, b))
        throw ConfigMismatch("operands live in different coefficient fields: " + a->describe() +
                             " vs " + b->describe());
}

} // namespace glcq
