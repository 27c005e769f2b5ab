#include "rigidcert/rational.hpp"

namespace rigidcert {

Rational::Rational(long n, long d) : Rational(mpz_class(n), mpz_class(d)) {}

Rational::Rational(const mpz_class& n, const mpz_class& d) {
    if (d == 0) throw Error("Rational: zero denominator");
    q_ = mpq_class(n, d);
    q_.canonicalize();
}

Rational& Rational::operator/=(const Rational& o) {
    if (o.is_zero()) throw Error("Rational: division by zero");
    q_ /= o.q_;
    return *this;
}

Rational Rational::from_string(const std::string& s) {
    const auto parse_int = [&](const std::string& t) -> mpz_class {
        if (t.empty() || (t.size() == 1 && t[0] == '-'))
            throw ParseError("invalid rational: '" + s + "'");
        for (size_t i = 0; i < t.size(); ++i) {
            const char c = t[i];
            if (!((c >= '0' && c <= '9') || (c == '-' && i == 0)))
                throw ParseError("invalid rational: '" + s + "'");
        }
        return mpz_class(t);
    };
    const auto slash = s.find('/');
    if (slash == std::string::npos) return Rational(parse_int(s), 1);
    const mpz_class num = parse_int(s.substr(0, slash));
    const mpz_class den = parse_int(s.substr(slash + 1));
    if (den <= 0) throw ParseError("invalid rational (denominator must be positive): '" + s + "'");
    return Rational(num, den);
}

std::string Rational::to_string() const {
    if (is_integer()) return num().get_str();
    return num().get_str() + "/" + den().get_str();
}

bool is_zero_vector(const VecQ& v) {
    for (const auto& x : v)
        if (!x.is_zero()) return false;
    return true;
}

VecQ canonical_direction(const VecQ& v) {
    if (is_zero_vector(v)) return v;
    mpz_class den_lcm = 1;
    for (const auto& x : v)
        if (!x.is_zero()) mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), x.den().get_mpz_t());
    std::vector<mpz_class> ints;
    ints.reserve(v.size());
    mpz_class g = 0;
    for (const auto& x : v) {
        mpz_class n = x.num() * (den_lcm / x.den());
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), n.get_mpz_t());
        ints.push_back(std::move(n));
    }
    int lead = 1;
    for (const auto& n : ints) {
        const int s = mpz_sgn(n.get_mpz_t());
        if (s != 0) { lead = s; break; }
    }
    VecQ out;
    out.reserve(v.size());
    for (const auto& n : ints) out.emplace_back(lead < 0 ? mpz_class(-n / g) : mpz_class(n / g), mpz_class(1));
    return out;
}

} // namespace rigidcert
