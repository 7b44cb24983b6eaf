#include "trip/rational.hpp"

#include <cctype>

namespace trip {

namespace {

std::string trim(std::string_view s) {
    size_t a = 0, b = s.size();
    while (a < b && std::isspace(static_cast<unsigned char>(s[a]))) ++a;
    while (b > a && std::isspace(static_cast<unsigned char>(s[b - 1]))) --b;
    return std::string(s.substr(a, b - a));
}

bool all_digits(const std::string& s, size_t from) {
    if (from >= s.size()) return false;
    for (size_t i = from; i < s.size(); ++i)
        if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
    return true;
}

Integer parse_integer(const std::string& s) {
    size_t start = (!s.empty() && (s[0] == '-' || s[0] == '+')) ? 1 : 0;
    if (!all_digits(s, start)) throw ParseError("bad integer: '" + s + "'");
    return Integer(s[0] == '+' ? s.substr(1) : s, 10);
}

}  // namespace

Rational parse_rational(std::string_view text) {
    std::string s = trim(text);
    if (s.empty()) throw ParseError("empty rational");
    if (auto slash = s.find('/'); slash != std::string::npos) {
        Integer num = parse_integer(trim(s.substr(0, slash)));
        std::string ds = trim(s.substr(slash + 1));
        if (!all_digits(ds, 0)) throw ParseError("bad denominator: '" + ds + "'");
        Integer den(ds, 10);
        if (den == 0) throw ParseError("zero denominator");
        Rational q(num, den);
        q.canonicalize();
        return q;
    }
    if (auto dot = s.find('.'); dot != std::string::npos) {
        std::string ip = s.substr(0, dot), fp = s.substr(dot + 1);
        bool neg = !ip.empty() && ip[0] == '-';
        if (!ip.empty() && (ip[0] == '-' || ip[0] == '+')) ip = ip.substr(1);
        if (ip.empty()) ip = "0";
        if (!all_digits(ip, 0) || (!fp.empty() && !all_digits(fp, 0)))
            throw ParseError("bad decimal: '" + s + "'");
        Integer scale;
        mpz_ui_pow_ui(scale.get_mpz_t(), 10, fp.size());
        Integer num(ip + fp, 10);
        Rational q(neg ? Integer(-num) : num, scale);
        q.canonicalize();
        return q;
    }
    return Rational(parse_integer(s));
}

std::string to_string(const Rational& q) { return q.get_str(); }
std::string to_string(const Integer& z) { return z.get_str(); }

Integer floor_div(const Rational& q) {
    Integer r;
    mpz_fdiv_q(r.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
    return r;
}

Integer ceil_div(const Rational& q) {
    Integer r;
    mpz_cdiv_q(r.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
    return r;
}

Rational abs_value(const Rational& q) { return q < 0 ? Rational(-q) : q; }

std::string to_decimal(const Rational& q, int digits) {
    Integer scale;
    mpz_ui_pow_ui(scale.get_mpz_t(), 10, static_cast<unsigned long>(digits));
    Rational a = abs_value(q) * scale;
    Integer t;
    mpz_tdiv_q(t.get_mpz_t(), a.get_num_mpz_t(), a.get_den_mpz_t());
    std::string s = t.get_str();
    if (digits > 0) {
        if (s.size() <= static_cast<size_t>(digits)) s.insert(0, digits + 1 - s.size(), '0');
        s.insert(s.size() - digits, ".");
    }
    if (q < 0 && t != 0) s.insert(0, "-");
    return s;
}

}  // namespace trip
