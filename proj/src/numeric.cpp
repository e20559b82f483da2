#include "theta/numeric.hpp"

namespace theta {

Rational parse_rational(const std::string& text) {
    auto slash = text.find('/');
    BigInt num, den = 1;
    try {
        if (slash == std::string::npos) {
            num = BigInt(text);
        } else {
            num = BigInt(text.substr(0, slash));
            den = BigInt(text.substr(slash + 1));
        }
    } catch (const std::invalid_argument&) {
        throw ValidationError("malformed rational: '" + text + "'");
    }
    return make_rational(num, den);
}

BigInt binomial(unsigned n, unsigned k) {
    BigInt out;
    mpz_bin_uiui(out.get_mpz_t(), n, k);
    return out;
}

}  // namespace theta
