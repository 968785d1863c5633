#include "rankatlas/format.hpp"

#include <stdexcept>

#include "rankatlas/errors.hpp"

namespace rankatlas {

namespace {

// |num|/den scaled to `places` fractional digits, rounded half-to-even
std::string scaled_digits(const BigCount& num, const BigCount& den, int places) {
    if (places < 0) throw std::logic_error("negative decimal places");
    BigCount scale;
    mpz_ui_pow_ui(scale.get_mpz_t(), 10, static_cast<unsigned long>(places));
    const BigCount scaled = abs(num) * scale;
    BigCount quot, rem;
    mpz_tdiv_qr(quot.get_mpz_t(), rem.get_mpz_t(), scaled.get_mpz_t(), den.get_mpz_t());
    const int half = cmp(2 * rem, den);
    if (half > 0 || (half == 0 && mpz_odd_p(quot.get_mpz_t()))) ++quot;

    std::string digits = quot.get_str();
    if (static_cast<int>(digits.size()) <= places) {
        digits.insert(0, static_cast<std::size_t>(places) + 1 - digits.size(), '0');
    }
    if (places > 0) digits.insert(digits.size() - static_cast<std::size_t>(places), ".");
    return digits;
}

}  // namespace

std::string decimal_string(const Rational& value, int places) {
    const std::string digits =
        scaled_digits(value.get_num(), value.get_den(), places);
    return (sgn(value) < 0 && digits.find_first_not_of("0.") != std::string::npos)
               ? "-" + digits
               : digits;
}

std::string rational_to_string(const Rational& value) {
    return value.get_str();  // "a/b" or "a", lowest terms
}

Rational rational_from_string(const std::string& text) {
    Rational value;
    if (text.empty() || value.set_str(text, 10) != 0) {
        throw io_error("malformed rational: '" + text + "'");
    }
    if (sgn(value.get_den()) <= 0) throw io_error("malformed rational: '" + text + "'");
    value.canonicalize();
    return value;
}

std::string percent_string(const BigCount& part, const BigCount& total, int places) {
    if (sgn(total) <= 0) throw domain_error("percentage of empty total");
    return scaled_digits(part * 100, total, places);
}

double to_double(const Rational& value) { return value.get_d(); }

}  // namespace rankatlas
