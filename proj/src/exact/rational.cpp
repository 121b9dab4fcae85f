#include "skelcollar/exact/rational.hpp"

#include "skelcollar/error.hpp"

#include <ostream>

namespace skelcollar {

std::string_view errc_name(Errc code) noexcept {
    switch (code) {
        case Errc::ZeroIntoNegativePower: return "ZeroIntoNegativePower";
        case Errc::NotInvertible: return "NotInvertible";
        case Errc::InconsistentSystem: return "InconsistentSystem";
        case Errc::InvalidInput: return "InvalidInput";
        case Errc::Unsupported: return "Unsupported";
        case Errc::NonIsolatedFixedPoint: return "NonIsolatedFixedPoint";
        case Errc::UnrecognizedForm: return "UnrecognizedForm";
        case Errc::NotHamiltonian: return "NotHamiltonian";
        case Errc::DegenerateSampler: return "DegenerateSampler";
        case Errc::IndexOutOfRange: return "IndexOutOfRange";
        case Errc::BoundTooSmall: return "BoundTooSmall";
        case Errc::WindowUnstable: return "WindowUnstable";
        case Errc::ClassNotGeneric: return "ClassNotGeneric";
        case Errc::NotAPair: return "NotAPair";
        case Errc::ParseError: return "ParseError";
    }
    return "Unknown";
}

namespace exact {

Rational::Rational(long num, long den) : Rational(mpz_class(num), mpz_class(den)) {}

Rational::Rational(const mpz_class& num, const mpz_class& den) {
    if (den == 0) {
        throw Error(Errc::InvalidInput, "rational with zero denominator");
    }
    q_ = mpq_class(num, den);
    q_.canonicalize();
}

Rational Rational::parse(const std::string& text) {
    mpq_class q;
    if (text.empty() || q.set_str(text, 10) != 0 || q.get_den() == 0) {
        throw Error(Errc::ParseError, "not a rational literal: '" + text + "'");
    }
    q.canonicalize();
    Rational r;
    r.q_ = q;
    return r;
}

Rational& Rational::operator/=(const Rational& o) {
    if (o.is_zero()) {
        throw Error(Errc::NotInvertible, "division by zero rational");
    }
    q_ /= o.q_;
    return *this;
}

Rational Rational::inverse() const {
    return Rational(1) / *this;
}

Rational Rational::abs() const {
    Rational r;
    r.q_ = ::abs(q_);
    return r;
}

Rational Rational::pow(long exponent) const {
    if (exponent < 0) {
        return inverse().pow(-exponent);
    }
    mpz_class num;
    mpz_class den;
    mpz_pow_ui(num.get_mpz_t(), q_.get_num_mpz_t(), static_cast<unsigned long>(exponent));
    mpz_pow_ui(den.get_mpz_t(), q_.get_den_mpz_t(), static_cast<unsigned long>(exponent));
    return Rational(num, den);
}

std::ostream& operator<<(std::ostream& os, const Rational& r) {
    return os << r.to_string();
}

}  // namespace exact
}  // namespace skelcollar
