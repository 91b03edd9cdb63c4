#include "faircover/rational.hpp"

#include <ostream>

#include "faircover/errors.hpp"

namespace faircover {

Rational::Rational(long long n) : v_(0) {
    mpz_class z;
    const bool neg = n < 0;
    unsigned long long mag = neg ? 0ULL - static_cast<unsigned long long>(n)
                                 : static_cast<unsigned long long>(n);
    mpz_import(z.get_mpz_t(), 1, 1, sizeof(mag), 0, 0, &mag);
    if (neg) z = -z;
    v_ = mpq_class(z);
}

Rational::Rational(unsigned long long n) : v_(0) {
    mpz_class z;
    mpz_import(z.get_mpz_t(), 1, 1, sizeof(n), 0, 0, &n);
    v_ = mpq_class(z);
}

Rational::Rational(long num, long den) : v_(num, 1) {
    if (den == 0) throw InputError("rational with zero denominator");
    v_ = mpq_class(num, den);
    v_.canonicalize();
}

Rational& Rational::operator/=(const Rational& o) {
    if (o.is_zero()) throw InputError("rational division by zero");
    v_ /= o.v_;
    return *this;
}

Rational Rational::parse(const std::string& text) {
    if (text.empty()) throw InputError("empty rational literal");
    const auto slash = text.find('/');
    mpq_class v;
    try {
        if (slash == std::string::npos) {
            v = mpq_class(mpz_class(text));
        } else {
            mpz_class num(text.substr(0, slash));
            mpz_class den(text.substr(slash + 1));
            if (den == 0) throw InputError("rational with zero denominator: " + text);
            v = mpq_class(num) / mpq_class(den);
        }
    } catch (const std::invalid_argument&) {
        throw InputError("malformed rational literal: '" + text + "'");
    }
    v.canonicalize();
    Rational r;
    r.v_ = v;
    return r;
}

void Rational::sub_mul(const Rational& a, const Rational& b) {
    static thread_local mpq_class scratch;
    mpq_mul(scratch.get_mpq_t(), a.v_.get_mpq_t(), b.v_.get_mpq_t());
    mpq_sub(v_.get_mpq_t(), v_.get_mpq_t(), scratch.get_mpq_t());
}

long Rational::ceil_long() const {
    mpz_class q;
    mpz_cdiv_q(q.get_mpz_t(), v_.get_num_mpz_t(), v_.get_den_mpz_t());
    if (!q.fits_slong_p()) throw InputError("rational ceiling out of range");
    return q.get_si();
}

std::string Rational::str() const {
    if (is_integer()) return v_.get_num().get_str();
    return v_.get_num().get_str() + "/" + v_.get_den().get_str();
}

std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

}  // namespace faircover
