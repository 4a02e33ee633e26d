#include "rlk/rational.hpp"

#include <cctype>
#include <ostream>
#include <sstream>

namespace rlk {

Rational::Rational(long n, long d) {
    if (d == 0) throw ValueError("rational with zero denominator");
    v_ = mpq_class(n, d);
    v_.canonicalize();
}

Rational& Rational::operator/=(const Rational& o) {
    if (o.is_zero()) throw ValueError("division by zero rational");
    v_ /= o.v_;
    return *this;
}

namespace {

bool is_integer_token(std::string_view s) {
    if (s.empty()) return false;
    std::size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
    if (i == s.size()) return false;
    for (; i < s.size(); ++i)
        if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
    return true;
}

}  // namespace

Rational Rational::parse(std::string_view text) {
    // Trim surrounding whitespace.
    while (!text.empty() && std::isspace(static_cast<unsigned char>(text.front()))) text.remove_prefix(1);
    while (!text.empty() && std::isspace(static_cast<unsigned char>(text.back()))) text.remove_suffix(1);
    if (text.empty()) throw ValueError("empty rational literal");
    if (text.find('.') != std::string_view::npos || text.find('e') != std::string_view::npos ||
        text.find('E') != std::string_view::npos)
        throw ValueError("decimal literal '" + std::string(text) + "' rejected; use p/q form");

    const auto slash = text.find('/');
    std::string_view num = text.substr(0, slash);
    std::string_view den = slash == std::string_view::npos ? std::string_view("1") : text.substr(slash + 1);
    if (!is_integer_token(num) || !is_integer_token(den))
        throw ValueError("malformed rational literal '" + std::string(text) + "'");

    mpz_class n(std::string(num), 10);
    mpz_class d(std::string(den), 10);
    if (d == 0) throw ValueError("rational literal '" + std::string(text) + "' has zero denominator");
    mpq_class q(n, d);
    q.canonicalize();
    return Rational(std::move(q));
}

std::string Rational::str() const {
    std::ostringstream os;
    os << v_;
    return os.str();
}

std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.v_; }

std::string to_string(const RationalVector& v) {
    std::string out = "(";
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i) out += ",";
        out += v[i].str();
    }
    out += ")";
    return out;
}

}  // namespace rlk
