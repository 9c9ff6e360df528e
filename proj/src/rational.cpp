#include "homlr/rational.hpp"

#include <cctype>

namespace homlr {

namespace {

bool digits_only(const std::string& s) {
    if (s.empty()) return false;
    for (char c : s)
        if (!std::isdigit(static_cast<unsigned char>(c))) return false;
    return true;
}

bool valid_integer(const std::string& s) {
    if (s.empty()) return false;
    if (s[0] == '-' || s[0] == '+') return digits_only(s.substr(1));
    return digits_only(s);
}

} // namespace

Rational Rational::parse(const std::string& s) {
    auto slash = s.find('/');
    std::string num = (slash == std::string::npos) ? s : s.substr(0, slash);
    std::string den = (slash == std::string::npos) ? "1" : s.substr(slash + 1);
    if (!valid_integer(num) || !digits_only(den))
        throw SchemaError("malformed rational '" + s + "'");
    mpz_class n(num), d(den);
    if (d == 0) throw SchemaError("zero denominator in '" + s + "'");
    mpq_class q(n, d);
    q.canonicalize();
    return Rational(q);
}

std::string Rational::str() const {
    if (v_.get_den() == 1) return v_.get_num().get_str();
    return v_.get_num().get_str() + "/" + v_.get_den().get_str();
}

} // namespace homlr
