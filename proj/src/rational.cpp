#include "semrank/rational.hpp"

namespace semrank {

std::string int128_to_string(__int128 value) {
    if (value == 0) return "0";
    bool neg = value < 0;
    unsigned __int128 v = neg ? -static_cast<unsigned __int128>(value)
                              : static_cast<unsigned __int128>(value);
    std::string digits;
    while (v != 0) {
        digits.push_back(static_cast<char>('0' + static_cast<int>(v % 10)));
        v /= 10;
    }
    if (neg) digits.push_back('-');
    return std::string(digits.rbegin(), digits.rend());
}

std::string Rational::to_decimal(int digits) const {
    if (digits < 0) digits = 0;
    bool neg = num_ < 0;
    Int n = abs128(num_);
    Int whole = n / den_;
    Int frac = n % den_;

    Int scale = 1;
    for (int i = 0; i < digits; ++i) scale = checked_mul(scale, 10);

    Int scaled = checked_mul(frac, scale);
    Int frac_digits = scaled / den_;
    Int rem = scaled % den_;
    if (2 * rem >= den_) {
        ++frac_digits;
        if (frac_digits == scale) {
            frac_digits = 0;
            ++whole;
        }
    }

    std::string out;
    if (neg && (whole != 0 || frac_digits != 0)) out += '-';
    out += int128_to_string(whole);
    if (digits > 0) {
        std::string f = int128_to_string(frac_digits);
        out += '.';
        out += std::string(static_cast<size_t>(digits) - f.size(), '0');
        out += f;
    }
    return out;
}

std::string Rational::to_fraction_string() const {
    if (den_ == 1) return int128_to_string(num_);
    return int128_to_string(num_) + "/" + int128_to_string(den_);
}

}  // namespace semrank
