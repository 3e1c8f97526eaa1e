#include "vfilt/rational.hpp"

namespace vfilt {

Rational rational_from_string(const std::string& text) {
    if (text.empty()) throw std::invalid_argument("empty rational literal");
    Rational q;
    if (mpq_set_str(q.get_mpq_t(), text.c_str(), 10) != 0)
        throw std::invalid_argument("bad rational literal: '" + text + "'");
    if (q.get_den() == 0)
        throw std::invalid_argument("zero denominator in rational literal: '" + text + "'");
    q.canonicalize();
    return q;
}

std::string rational_to_string(const Rational& q) {
    if (q.get_den() == 1) return q.get_num().get_str();
    return q.get_num().get_str() + "/" + q.get_den().get_str();
}

Int floor_int(const Rational& q) {
    Int r;
    mpz_fdiv_q(r.get_mpz_t(), q.get_num().get_mpz_t(), q.get_den().get_mpz_t());
    return r;
}

Int ceil_int(const Rational& q) {
    Int r;
    mpz_cdiv_q(r.get_mpz_t(), q.get_num().get_mpz_t(), q.get_den().get_mpz_t());
    return r;
}

long to_long(const Int& z) {
    if (!z.fits_slong_p()) throw std::overflow_error("integer does not fit in long: " + z.get_str());
    return z.get_si();
}

}  // namespace vfilt
