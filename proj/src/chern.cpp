#include "tiltwall/chern.hpp"

#include <stdexcept>

namespace tiltwall {

ChernClass linear_combine(const Integer& a, const ChernClass& x, const Integer& b, const ChernClass& y) {
    Rational ra(a), rb(b);
    return {Integer(a * x.rank + b * y.rank), ra * x.deg + rb * y.deg, ra * x.ch2 + rb * y.ch2};
}

ChernClass parse_chern(const std::string& text) {
    std::size_t c1 = text.find(',');
    std::size_t c2 = (c1 == std::string::npos) ? std::string::npos : text.find(',', c1 + 1);
    if (c1 == std::string::npos || c2 == std::string::npos || text.find(',', c2 + 1) != std::string::npos)
        throw std::invalid_argument("class: expected \"r,d,c\", got \"" + text + "\"");
    Integer rank = parse_integer(text.substr(0, c1));
    Rational deg = Rational::parse(text.substr(c1 + 1, c2 - c1 - 1));
    Rational ch2 = Rational::parse(text.substr(c2 + 1));
    return {rank, deg, ch2};
}

std::string to_string(const ChernClass& x) {
    return x.rank.get_str() + "," + x.deg.to_string() + "," + x.ch2.to_string();
}

const Rational& Slope::value() const {
    if (!finite_) throw std::logic_error("slope: +inf has no rational value");
    return v_;
}

Slope slope(const ChernClass& x) {
    if (x.rank == 0) return Slope::infinity();
    return Slope(x.deg / Rational(x.rank));
}

Rational discriminant(const ChernClass& x) {
    return x.deg * x.deg - Rational(2) * x.ch2 * Rational(x.rank);
}

Rational euler_characteristic(const Surface& s, const ChernClass& x) {
    return x.ch2 + s.lambda / Rational(2) * x.deg + Rational(x.rank) * Rational(s.chi_o);
}

bool bogomolov_check(const ChernClass& x) {
    return discriminant(x).sign() >= 0;
}

ChernClass twist(const Surface& s, const ChernClass& x, const Rational& k) {
    Rational h(s.h_sq), r(x.rank);
    return {x.rank, x.deg + k * r * h, x.ch2 + k * x.deg + k * k / Rational(2) * r * h};
}

ReducedHilbertPolynomial reduced_hilbert_polynomial(const Surface& s, const ChernClass& x, const Rational& delta) {
    if (x.rank == 0) return ReducedHilbertPolynomial::plus_infinity();
    // chi(x twisted by k H) = A k^2 + B k + C; substitute k = t + delta and
    // divide by the rank.
    Rational r(x.rank), h(s.h_sq);
    const Rational& d = delta;
    Rational A = r * h / Rational(2);
    Rational B = x.deg + s.lambda / Rational(2) * r * h;
    Rational C = euler_characteristic(s, x);
    Rational c2 = A / r;
    Rational c1 = (Rational(2) * A * d + B) / r;
    Rational c0 = (A * d * d + B * d + C) / r;
    return {true, c2, c1, c0};
}

Ordering gieseker_compare(const ReducedHilbertPolynomial& p, const ReducedHilbertPolynomial& q) {
    if (!p.finite && !q.finite) return Ordering::Equal;
    if (!p.finite) return Ordering::Greater;
    if (!q.finite) return Ordering::Less;
    const Rational* lhs[] = {&p.c2, &p.c1, &p.c0};
    const Rational* rhs[] = {&q.c2, &q.c1, &q.c0};
    for (int i = 0; i < 3; ++i) {
        if (*lhs[i] < *rhs[i]) return Ordering::Less;
        if (*lhs[i] > *rhs[i]) return Ordering::Greater;
    }
    return Ordering::Equal;
}

bool is_lattice_class(const ChernClass& x) {
    return x.deg.is_integer() && (Rational(2) * x.ch2).is_integer();
}

}  // namespace tiltwall
