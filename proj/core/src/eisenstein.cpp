#include "eisenspec/eisenstein.hpp"

#include <ostream>
#include <stdexcept>
#include <utility>

namespace eisenspec {

EisensteinRational::EisensteinRational(mpq_class a, mpq_class b) : a_(std::move(a)), b_(std::move(b)) {
    canonicalize();
}

void EisensteinRational::canonicalize() {
    a_.canonicalize();
    b_.canonicalize();
}

EisensteinRational EisensteinRational::conj() const {
    // conj(omega) = 1 - omega
    return {a_ + b_, -b_};
}

mpq_class EisensteinRational::real_part() const {
    mpq_class r = a_ + b_ / 2;
    r.canonicalize();
    return r;
}

mpq_class EisensteinRational::norm() const {
    mpq_class r = a_ * a_ + a_ * b_ + b_ * b_;
    r.canonicalize();
    return r;
}

EisensteinRational EisensteinRational::inverse() const {
    if (is_zero()) throw std::domain_error("inverse of zero in Q(omega)");
    const mpq_class n = norm();
    const EisensteinRational c = conj();
    return {c.a_ / n, c.b_ / n};
}

EisensteinRational& EisensteinRational::operator+=(const EisensteinRational& o) {
    a_ += o.a_;
    b_ += o.b_;
    canonicalize();
    return *this;
}

EisensteinRational& EisensteinRational::operator-=(const EisensteinRational& o) {
    a_ -= o.a_;
    b_ -= o.b_;
    canonicalize();
    return *this;
}

EisensteinRational& EisensteinRational::operator*=(const EisensteinRational& o) {
    // omega^2 = omega - 1
    const mpq_class bd = b_ * o.b_;
    mpq_class a = a_ * o.a_ - bd;
    mpq_class b = a_ * o.b_ + b_ * o.a_ + bd;
    a_ = std::move(a);
    b_ = std::move(b);
    canonicalize();
    return *this;
}

EisensteinRational& EisensteinRational::operator/=(const EisensteinRational& o) {
    return *this *= o.inverse();
}

std::string EisensteinRational::to_string() const {
    if (sgn(b_) == 0) return a_.get_str();
    std::string s;
    if (sgn(a_) != 0) s = a_.get_str() + (sgn(b_) > 0 ? "+" : "");
    return s + b_.get_str() + "w";
}

std::ostream& operator<<(std::ostream& os, const EisensteinRational& x) { return os << x.to_string(); }

EisensteinRational unit_to_eis(Unit u) {
    switch (u.exponent()) {
        case 0: return {1, 0};
        case 1: return {0, 1};
        case 2: return {-1, 1};
        case 3: return {-1, 0};
        case 4: return {0, -1};
        default: return {1, -1};
    }
}

mpq_class eis_real_part(const EisensteinRational& x) { return x.real_part(); }

}  // namespace eisenspec
