#include "nilgeo/rational.hpp"

namespace nilgeo {

Rational Rational::from_integer_strings(const std::string& num, const std::string& den) {
    mpz_class n, d;
    if (n.set_str(num, 10) != 0) throw std::domain_error("Rational: bad integer \"" + num + "\"");
    if (d.set_str(den, 10) != 0) throw std::domain_error("Rational: bad integer \"" + den + "\"");
    if (d == 0) throw std::domain_error("Rational: zero denominator \"" + num + "/" + den + "\"");
    mpq_class q(n, d);
    q.canonicalize();
    return Rational(std::move(q));
}

std::string Rational::str() const {
    if (v_.get_den() == 1) return v_.get_num().get_str();
    return v_.get_num().get_str() + "/" + v_.get_den().get_str();
}

} // namespace nilgeo
