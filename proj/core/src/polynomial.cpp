#include "eisenspec/polynomial.hpp"

#include <algorithm>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <utility>

namespace eisenspec {

IntPolynomial::IntPolynomial(std::vector<mpz_class> coefficients) : coeffs_(std::move(coefficients)) { trim(); }

IntPolynomial::IntPolynomial(std::initializer_list<long> coefficients) {
    coeffs_.reserve(coefficients.size());
    for (long c : coefficients) coeffs_.emplace_back(c);
    trim();
}

void IntPolynomial::trim() {
    auto first = std::find_if(coeffs_.begin(), coeffs_.end(), [](const mpz_class& c) { return sgn(c) != 0; });
    coeffs_.erase(coeffs_.begin(), first);
}

IntPolynomial IntPolynomial::from_roots(const std::vector<long>& roots) {
    IntPolynomial p{1};
    for (long r : roots) p = p * IntPolynomial{1, -r};
    return p;
}

IntPolynomial IntPolynomial::from_rational_roots(const std::vector<mpq_class>& roots) {
    IntPolynomial p{1};
    for (const mpq_class& r : roots) {
        p = p * IntPolynomial(std::vector<mpz_class>{r.get_den(), -r.get_num()});
    }
    return p;
}

IntPolynomial IntPolynomial::monomial(int degree) {
    std::vector<mpz_class> c(static_cast<std::size_t>(degree) + 1, 0);
    c[0] = 1;
    return IntPolynomial(std::move(c));
}

mpz_class IntPolynomial::coefficient_of(int power) const {
    if (power < 0 || power > degree()) return 0;
    return coeffs_[static_cast<std::size_t>(degree() - power)];
}

mpq_class IntPolynomial::evaluate(const mpq_class& x) const {
    mpq_class acc = 0;
    for (const mpz_class& c : coeffs_) acc = acc * x + c;
    acc.canonicalize();
    return acc;
}

double IntPolynomial::evaluate(double x) const {
    double acc = 0.0;
    for (const mpz_class& c : coeffs_) acc = acc * x + c.get_d();
    return acc;
}

int IntPolynomial::root_multiplicity(long r) const {
    if (is_zero()) return 0;
    int count = 0;
    IntPolynomial q = *this;
    while (q.degree() > 0 && sgn(q.evaluate(mpq_class(r))) == 0) {
        q = q.divide_root(r, 1);
        ++count;
    }
    return count;
}

IntPolynomial IntPolynomial::divide_root(long r, int times) const {
    std::vector<mpz_class> c = coeffs_;
    for (int t = 0; t < times; ++t) {
        if (c.empty()) throw std::domain_error("division of the zero polynomial");
        // synthetic division; the final value is the remainder
        std::vector<mpz_class> q(c.size() - 1);
        mpz_class carry = 0;
        for (std::size_t i = 0; i < c.size(); ++i) {
            carry = carry * r + c[i];
            if (i + 1 < c.size()) q[i] = carry;
        }
        if (sgn(carry) != 0) throw std::domain_error("polynomial is not divisible by the requested root power");
        c = std::move(q);
    }
    return IntPolynomial(std::move(c));
}

IntPolynomial IntPolynomial::reflected() const {
    std::vector<mpz_class> c = coeffs_;
    const int d = degree();
    for (int i = 0; i <= d; ++i) {
        if ((d - i) % 2 != 0) c[static_cast<std::size_t>(i)] = -c[static_cast<std::size_t>(i)];
    }
    return IntPolynomial(std::move(c));
}

bool IntPolynomial::has_parity_symmetry() const {
    for (std::size_t i = 1; i < coeffs_.size(); i += 2) {
        if (sgn(coeffs_[i]) != 0) return false;
    }
    return true;
}

IntPolynomial& IntPolynomial::operator+=(const IntPolynomial& o) {
    if (o.coeffs_.size() > coeffs_.size()) coeffs_.insert(coeffs_.begin(), o.coeffs_.size() - coeffs_.size(), 0);
    const std::size_t shift = coeffs_.size() - o.coeffs_.size();
    for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[shift + i] += o.coeffs_[i];
    trim();
    return *this;
}

IntPolynomial& IntPolynomial::operator-=(const IntPolynomial& o) {
    if (o.coeffs_.size() > coeffs_.size()) coeffs_.insert(coeffs_.begin(), o.coeffs_.size() - coeffs_.size(), 0);
    const std::size_t shift = coeffs_.size() - o.coeffs_.size();
    for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[shift + i] -= o.coeffs_[i];
    trim();
    return *this;
}

IntPolynomial operator*(const IntPolynomial& a, const IntPolynomial& b) {
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<mpz_class> c(a.coeffs_.size() + b.coeffs_.size() - 1, 0);
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
        for (std::size_t j = 0; j < b.coeffs_.size(); ++j) c[i + j] += a.coeffs_[i] * b.coeffs_[j];
    }
    return IntPolynomial(std::move(c));
}

std::vector<std::string> IntPolynomial::coefficient_strings() const {
    std::vector<std::string> out;
    out.reserve(coeffs_.size());
    for (const mpz_class& c : coeffs_) out.push_back(c.get_str());
    return out;
}

std::string IntPolynomial::to_string() const {
    if (is_zero()) return "0";
    std::ostringstream os;
    const int d = degree();
    bool first = true;
    for (int i = 0; i <= d; ++i) {
        const mpz_class& c = coeffs_[static_cast<std::size_t>(i)];
        if (sgn(c) == 0) continue;
        const int power = d - i;
        mpz_class mag = abs(c);
        if (first) {
            if (sgn(c) < 0) os << '-';
        } else {
            os << (sgn(c) < 0 ? " - " : " + ");
        }
        if (mag != 1 || power == 0) os << mag.get_str();
        if (power >= 1) os << 'x';
        if (power >= 2) os << '^' << power;
        first = false;
    }
    return os.str();
}

std::ostream& operator<<(std::ostream& os, const IntPolynomial& p) { return os << p.to_string(); }

std::ostream& operator<<(std::ostream& os, const RealRootCounts& c) {
    return os << '(' << c.positive << ", " << c.zero << ", " << c.negative << ')';
}

RealRootCounts poly_real_root_counts(const IntPolynomial& p) {
    if (p.is_zero()) throw std::invalid_argument("root census of the zero polynomial");
    const auto& c = p.coefficients();
    RealRootCounts out;
    std::size_t end = c.size();
    while (end > 0 && sgn(c[end - 1]) == 0) {
        --end;
        ++out.zero;
    }
    int last = 0;
    for (std::size_t i = 0; i < end; ++i) {
        const int s = sgn(c[i]);
        if (s == 0) continue;
        if (last != 0 && s != last) ++out.positive;
        last = s;
    }
    out.negative = p.degree() - out.positive - out.zero;
    return out;
}

namespace {

// Rational polynomial, lowest degree first, no trailing zeros.
using RatPoly = std::vector<mpq_class>;

void rp_trim(RatPoly& p) {
    while (!p.empty() && sgn(p.back()) == 0) p.pop_back();
}

int rp_degree(const RatPoly& p) { return static_cast<int>(p.size()) - 1; }

RatPoly rp_derivative(const RatPoly& p) {
    RatPoly d;
    for (std::size_t i = 1; i < p.size(); ++i) d.push_back(p[i] * static_cast<long>(i));
    rp_trim(d);
    return d;
}

void rp_make_monic(RatPoly& p) {
    if (p.empty()) return;
    const mpq_class lead = p.back();
    for (mpq_class& c : p) {
        c /= lead;
        c.canonicalize();
    }
}

// Returns (quotient, remainder).
std::pair<RatPoly, RatPoly> rp_divmod(RatPoly a, const RatPoly& b) {
    if (b.empty()) throw std::domain_error("polynomial division by zero");
    RatPoly q(a.size() >= b.size() ? a.size() - b.size() + 1 : 0, mpq_class(0));
    while (!a.empty() && a.size() >= b.size()) {
        const std::size_t shift = a.size() - b.size();
        mpq_class f = a.back() / b.back();
        f.canonicalize();
        q[shift] = f;
        for (std::size_t i = 0; i < b.size(); ++i) {
            a[shift + i] -= f * b[i];
            a[shift + i].canonicalize();
        }
        a.pop_back();
        rp_trim(a);
    }
    rp_trim(q);
    return {std::move(q), std::move(a)};
}

RatPoly rp_gcd(RatPoly a, RatPoly b) {
    while (!b.empty()) {
        RatPoly r = rp_divmod(a, b).second;
        a = std::move(b);
        b = std::move(r);
    }
    rp_make_monic(a);
    return a;
}

RatPoly rp_exact_div(const RatPoly& a, const RatPoly& b) {
    auto [q, r] = rp_divmod(a, b);
    if (!r.empty()) throw std::logic_error("inexact polynomial division in square-free factorization");
    return q;
}

int rp_sign_at_zero(const RatPoly& p) { return p.empty() ? 0 : sgn(p.front()); }

int rp_sign_at_infinity(const RatPoly& p, bool negative) {
    if (p.empty()) return 0;
    const int s = sgn(p.back());
    return (negative && rp_degree(p) % 2 != 0) ? -s : s;
}

int sign_variations(const std::vector<int>& signs) {
    int count = 0;
    int last = 0;
    for (int s : signs) {
        if (s == 0) continue;
        if (last != 0 && s != last) ++count;
        last = s;
    }
    return count;
}

// Distinct positive and negative roots of a square-free f with f(0) != 0.
std::pair<int, int> sturm_distinct(const RatPoly& f) {
    std::vector<RatPoly> chain{f, rp_derivative(f)};
    while (!chain.back().empty()) {
        RatPoly r = rp_divmod(chain[chain.size() - 2], chain.back()).second;
        for (mpq_class& c : r) c = -c;
        if (r.empty()) break;
        chain.push_back(std::move(r));
    }
    std::vector<int> at_neg;
    std::vector<int> at_zero;
    std::vector<int> at_pos;
    for (const RatPoly& p : chain) {
        at_neg.push_back(rp_sign_at_infinity(p, true));
        at_zero.push_back(rp_sign_at_zero(p));
        at_pos.push_back(rp_sign_at_infinity(p, false));
    }
    const int v_neg = sign_variations(at_neg);
    const int v_zero = sign_variations(at_zero);
    const int v_pos = sign_variations(at_pos);
    return {v_zero - v_pos, v_neg - v_zero};
}

}  // namespace

RealRootCounts poly_real_root_counts_sturm(const IntPolynomial& p) {
    if (p.is_zero()) throw std::invalid_argument("root census of the zero polynomial");
    RatPoly f;
    for (int power = 0; power <= p.degree(); ++power) f.emplace_back(p.coefficient_of(power));
    RealRootCounts out;
    while (!f.empty() && sgn(f.front()) == 0) {
        f.erase(f.begin());
        ++out.zero;
    }
    rp_trim(f);
    if (rp_degree(f) <= 0) return out;

    // Yun's square-free factorization: f = prod g_i^i
    RatPoly a0 = rp_gcd(f, rp_derivative(f));
    RatPoly b = rp_exact_div(f, a0);
    RatPoly c = rp_exact_div(rp_derivative(f), a0);
    RatPoly d = c;
    {
        RatPoly bd = rp_derivative(b);
        for (std::size_t i = 0; i < std::max(d.size(), bd.size()); ++i) {
            if (i >= d.size()) d.emplace_back(0);
            if (i < bd.size()) d[i] -= bd[i];
        }
        rp_trim(d);
    }
    int multiplicity = 1;
    while (rp_degree(b) > 0) {
        RatPoly g = rp_gcd(b, d);
        if (rp_degree(g) > 0) {
            auto [pos, neg] = sturm_distinct(g);
            out.positive += multiplicity * pos;
            out.negative += multiplicity * neg;
        }
        b = rp_exact_div(b, g);
        c = rp_exact_div(d, g);
        d = c;
        RatPoly bd = rp_derivative(b);
        for (std::size_t i = 0; i < std::max(d.size(), bd.size()); ++i) {
            if (i >= d.size()) d.emplace_back(0);
            if (i < bd.size()) d[i] -= bd[i];
        }
        rp_trim(d);
        ++multiplicity;
    }
    return out;
}

}  // namespace eisenspec
