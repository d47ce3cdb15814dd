#include "tiltwall/rational.hpp"

#include <cctype>
#include <ostream>
#include <stdexcept>

namespace tiltwall {

Rational::Rational(const Integer& num, const Integer& den) : q_(num, den) {
    if (den == 0) throw std::invalid_argument("rational: zero denominator");
    q_.canonicalize();
}

namespace {

bool all_digits(const std::string& s, std::size_t from, std::size_t to) {
    if (from >= to) return false;
    for (std::size_t i = from; i < to; ++i) {
        if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
    }
    return true;
}

}  // namespace

Rational Rational::parse(const std::string& text) {
    std::size_t start = 0;
    bool negative = false;
    if (!text.empty() && text[0] == '-') {
        negative = true;
        start = 1;
    }
    std::size_t slash = text.find('/');
    std::string what = "rational: expected \"p/q\" or \"p\", got \"" + text + "\"";
    Integer num, den = 1;
    if (slash == std::string::npos) {
        if (!all_digits(text, start, text.size())) throw std::invalid_argument(what);
        num = Integer(text.substr(start), 10);
    } else {
        if (!all_digits(text, start, slash)) throw std::invalid_argument(what);
        if (!all_digits(text, slash + 1, text.size())) throw std::invalid_argument(what);
        num = Integer(text.substr(start, slash - start), 10);
        den = Integer(text.substr(slash + 1), 10);
        if (den == 0) throw std::invalid_argument("rational: zero denominator in \"" + text + "\"");
    }
    if (negative) num = -num;
    return Rational(num, den);
}

std::string Rational::to_string() const {
    if (is_integer()) return q_.get_num().get_str();
    return q_.get_num().get_str() + "/" + q_.get_den().get_str();
}

Integer Rational::floor() const {
    Integer q;
    mpz_fdiv_q(q.get_mpz_t(), q_.get_num().get_mpz_t(), q_.get_den().get_mpz_t());
    return q;
}

Integer Rational::ceil() const {
    Integer q;
    mpz_cdiv_q(q.get_mpz_t(), q_.get_num().get_mpz_t(), q_.get_den().get_mpz_t());
    return q;
}

Rational Rational::abs() const {
    return sign() < 0 ? -*this : *this;
}

Rational Rational::operator-() const {
    Rational r;
    r.q_ = -q_;
    return r;
}

Rational& Rational::operator/=(const Rational& o) {
    if (o.is_zero()) throw std::invalid_argument("rational: division by zero");
    q_ /= o.q_;
    return *this;
}

std::ostream& operator<<(std::ostream& os, const Rational& r) {
    return os << r.to_string();
}

Integer parse_integer(const std::string& text) {
    std::size_t start = (!text.empty() && text[0] == '-') ? 1 : 0;
    if (!all_digits(text, start, text.size()))
        throw std::invalid_argument("integer: expected decimal digits, got \"" + text + "\"");
    Integer n(text.substr(start), 10);
    return start == 1 ? Integer(-n) : n;
}

Integer isqrt_floor(const Integer& n) {
    if (n < 0) throw std::invalid_argument("isqrt_floor: negative input");
    Integer r;
    mpz_sqrt(r.get_mpz_t(), n.get_mpz_t());
    return r;
}

Rational sqrt_upper(const Rational& q) {
    if (q.sign() < 0) throw std::invalid_argument("sqrt_upper: negative input");
    // sqrt(a/b) = sqrt(a*b)/b <= (isqrt_floor(a*b)+1)/b.
    Integer ab = q.num() * q.den();
    return Rational(isqrt_floor(ab) + 1, q.den());
}

int cmp_with_sqrt(const Rational& t, const Rational& q) {
    if (q.sign() < 0) throw std::invalid_argument("cmp_with_sqrt: negative radicand");
    if (t.sign() < 0) return -1;
    Rational t2 = t * t;
    if (t2 < q) return -1;
    if (t2 == q) return 0;
    return 1;
}

}  // namespace tiltwall
