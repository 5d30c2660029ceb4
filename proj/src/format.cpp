#include "herschel/format.hpp"

#include <cmath>
#include <cstdio>
#include <regex>
#include <stdexcept>

namespace herschel {

std::string double_str(double v) {
    if (v == 0.0) v = 0.0;  // drop the sign of -0
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

std::string complex_str(std::complex<double> z) {
    if (z.imag() == 0.0) return double_str(z.real());
    std::string out = double_str(z.real());
    out += std::signbit(z.imag()) ? '-' : '+';
    out += double_str(std::fabs(z.imag()));
    out += 'i';
    return out;
}

std::string rational_to_string(const Rational& q) { return q.get_str(); }

namespace {

// |c|*var^k with unit coefficients elided.
std::string term_str(const Rational& mag, std::size_t k, const std::string& var) {
    std::string out;
    if (k == 0) return rational_to_string(mag);
    if (mag != 1) {
        out = rational_to_string(mag);
        out += '*';
    }
    out += var;
    if (k > 1) {
        out += '^';
        out += std::to_string(k);
    }
    return out;
}

double parse_double_all(const std::string& text) {
    std::size_t pos = 0;
    double v;
    try {
        v = std::stod(text, &pos);
    } catch (const std::exception&) {
        throw std::invalid_argument("malformed number: '" + text + "'");
    }
    if (pos != text.size()) {
        throw std::invalid_argument("malformed number: '" + text + "'");
    }
    return v;
}

// "", "+", "-" count as a unit imaginary part.
double parse_imag_magnitude(const std::string& text) {
    if (text.empty() || text == "+") return 1.0;
    if (text == "-") return -1.0;
    return parse_double_all(text);
}

}  // namespace

std::string polynomial_str(const RationalPolynomial& p, const std::string& var) {
    if (p.is_zero()) return "0";
    std::string out;
    for (std::size_t k = 0; k <= p.degree(); ++k) {
        Rational c = p.coeff(k);
        if (c == 0) continue;
        const bool negative = c < 0;
        Rational mag(negative ? Rational(-c) : c);
        if (out.empty()) {
            if (negative) out += '-';
        } else {
            out += negative ? " - " : " + ";
        }
        out += term_str(mag, k, var);
    }
    return out;
}

std::vector<std::string> polynomial_coeff_strings(const RationalPolynomial& p) {
    std::vector<std::string> out;
    if (p.is_zero()) return {"0"};
    out.reserve(p.degree() + 1);
    for (std::size_t k = 0; k <= p.degree(); ++k) out.push_back(rational_to_string(p.coeff(k)));
    return out;
}

Rational parse_rational(const std::string& text) {
    static const std::regex shape(R"([+-]?\d+(/\d+)?)");
    if (!std::regex_match(text, shape)) {
        throw std::invalid_argument("malformed rational: '" + text + "'");
    }
    Rational q(text[0] == '+' ? text.substr(1) : text);
    if (q.get_den() == 0) {
        throw std::invalid_argument("zero denominator: '" + text + "'");
    }
    q.canonicalize();
    return q;
}

std::complex<double> parse_complex(const std::string& text) {
    if (text.empty()) throw std::invalid_argument("empty complex literal");

    // Split before the sign of the imaginary part; a sign right after an
    // exponent marker belongs to the number.
    std::size_t split = std::string::npos;
    for (std::size_t k = text.size(); k-- > 1;) {
        if ((text[k] == '+' || text[k] == '-') && text[k - 1] != 'e' && text[k - 1] != 'E') {
            split = k;
            break;
        }
    }

    const bool has_i = text.back() == 'i';
    if (split == std::string::npos) {
        if (!has_i) return {parse_double_all(text), 0.0};
        return {0.0, parse_imag_magnitude(text.substr(0, text.size() - 1))};
    }
    if (!has_i) {
        throw std::invalid_argument("malformed complex literal: '" + text + "'");
    }
    double re = parse_double_all(text.substr(0, split));
    double im = parse_imag_magnitude(text.substr(split, text.size() - split - 1));
    return {re, im};
}

}  // namespace herschel
