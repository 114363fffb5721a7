#include "tropdesc/rational.hpp"

#include <ostream>

#include "tropdesc/errors.hpp"

namespace tropdesc {

namespace {

bool is_digits(std::string_view s) {
    if (s.empty()) return false;
    for (char c : s)
        if (c < '0' || c > '9') return false;
    return true;
}

// Canonical integer text: optional '-', no leading zeros, no "-0".
bool is_canonical_integer(std::string_view s, bool allow_sign) {
    bool negative = false;
    if (allow_sign && !s.empty() && s.front() == '-') {
        negative = true;
        s.remove_prefix(1);
    }
    if (!is_digits(s)) return false;
    if (s.size() > 1 && s.front() == '0') return false;
    if (negative && s == "0") return false;
    return true;
}

}  // namespace

Rational::Rational(std::int64_t n) : value_(static_cast<signed long>(n)) {}

Rational::Rational(const BigInt& n) : value_(n) {}

Rational::Rational(const BigInt& num, const BigInt& den) {
    if (den == 0) throw DomainError("rational with zero denominator");
    value_ = mpq_class(num, den);
    value_.canonicalize();
}

Rational& Rational::operator/=(const Rational& o) {
    if (o.is_zero()) throw DomainError("division by zero");
    value_ /= o.value_;
    return *this;
}

Rational Rational::operator-() const {
    Rational r;
    r.value_ = -value_;
    return r;
}

Rational Rational::parse(std::string_view text) {
    const auto slash = text.find('/');
    const auto num_text = text.substr(0, slash);
    if (!is_canonical_integer(num_text, true))
        throw ParseError("malformed rational '" + std::string(text) + "'");
    BigInt num(std::string(num_text), 10);
    if (slash == std::string_view::npos) return Rational(num);

    const auto den_text = text.substr(slash + 1);
    if (!is_canonical_integer(den_text, false))
        throw ParseError("malformed rational '" + std::string(text) + "'");
    BigInt den(std::string(den_text), 10);
    if (den <= 1) throw ParseError("non-canonical denominator in '" + std::string(text) + "'");
    BigInt g;
    mpz_gcd(g.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
    if (g != 1) throw ParseError("rational '" + std::string(text) + "' is not in lowest terms");
    return Rational(num, den);
}

std::string Rational::to_string() const {
    std::string s = value_.get_num().get_str();
    if (value_.get_den() != 1) s += "/" + value_.get_den().get_str();
    return s;
}

std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.to_string(); }

}  // namespace tropdesc
