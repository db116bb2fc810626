#include "mcgcoh/exact.hpp"

#include <cmath>

#include "mcgcoh/errors.hpp"

namespace mcgcoh {

namespace {

bool is_integer_literal(std::string_view s) {
    if (s.empty()) return false;
    std::size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
    if (i == s.size()) return false;
    for (; i < s.size(); ++i) {
        if (s[i] < '0' || s[i] > '9') return false;
    }
    return true;
}

Integer parse_integer(std::string_view s) {
    if (!is_integer_literal(s)) {
        throw ParseError("not an integer: '" + std::string(s) + "'");
    }
    if (s[0] == '+') s.remove_prefix(1);
    return Integer(std::string(s), 10);
}

}  // namespace

Rational parse_rational(std::string_view text) {
    auto slash = text.find('/');
    Integer num = parse_integer(text.substr(0, slash));
    Integer den = 1;
    if (slash != std::string_view::npos) {
        std::string_view d = text.substr(slash + 1);
        if (!d.empty() && d[0] == '-') throw ParseError("negative denominator: '" + std::string(text) + "'");
        den = parse_integer(d);
    }
    if (den == 0) throw ParseError("zero denominator: '" + std::string(text) + "'");
    Rational q(num, den);
    q.canonicalize();
    return q;
}

std::string format_rational(const Rational& q) {
    return q.get_num().get_str() + "/" + q.get_den().get_str();
}

std::optional<Rational> exact_sqrt(const Rational& q) {
    if (sgn(q) < 0) return std::nullopt;
    if (mpz_perfect_square_p(q.get_num_mpz_t()) == 0 || mpz_perfect_square_p(q.get_den_mpz_t()) == 0) {
        return std::nullopt;
    }
    Rational r(sqrt(q.get_num()), sqrt(q.get_den()));
    r.canonicalize();
    return r;
}

Magnitude Magnitude::from_squared(Rational sq) {
    if (sgn(sq) < 0) throw DomainError("squared magnitude must be nonnegative");
    Magnitude m;
    m.squared_ = std::move(sq);
    return m;
}

Magnitude Magnitude::from_value(const Rational& v) {
    if (sgn(v) < 0) throw DomainError("magnitude must be nonnegative");
    return from_squared(v * v);
}

double Magnitude::value() const { return std::sqrt(squared_.get_d()); }

}  // namespace mcgcoh
