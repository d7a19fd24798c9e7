#include "berezin/rational.hpp"

#include <stdexcept>

namespace berezin {

Rational::Rational(long n, long d) : q_(n, d) {
    if (d == 0) throw std::invalid_argument("rational with zero denominator");
    q_.canonicalize();
}

Rational::Rational(const mpz_class& n, const mpz_class& d) : q_(n, d) {
    if (sgn(d) == 0) throw std::invalid_argument("rational with zero denominator");
    q_.canonicalize();
}

Rational operator/(const Rational& a, const Rational& b) {
    if (b.is_zero()) throw std::invalid_argument("rational division by zero");
    return Rational(a.q_ / b.q_);
}

Rational Rational::parse(const std::string& s) {
    if (s.empty()) throw std::invalid_argument("empty rational");
    mpq_class q;
    if (q.set_str(s, 10) != 0)
        throw std::invalid_argument("malformed rational: '" + s + "'");
    if (sgn(q.get_den()) == 0)
        throw std::invalid_argument("rational with zero denominator: '" + s + "'");
    q.canonicalize();
    return Rational(std::move(q));
}

std::string Rational::str() const {
    return q_.get_num().get_str() + "/" + q_.get_den().get_str();
}

mpz_class factorial(unsigned long n) {
    mpz_class f;
    mpz_fac_ui(f.get_mpz_t(), n);
    return f;
}

}
