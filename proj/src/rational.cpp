#include "rational.hpp"

namespace sw {

bool rat_is_integer(const Rat& r) { return r.get_den() == 1; }

long rat_to_long(const Rat& r) {
    if (!rat_is_integer(r)) fail(Code::internal, "rational is not an integer: " + rat_str(r));
    if (!r.get_num().fits_slong_p())
        fail(Code::internal, "integer out of range: " + rat_str(r));
    return r.get_num().get_si();
}

mpz_class rat_floor(const Rat& r) {
    mpz_class q;
    mpz_fdiv_q(q.get_mpz_t(), r.get_num_mpz_t(), r.get_den_mpz_t());
    return q;
}

Rat parse_rat(const std::string& in) {
    // Normalize U+2212 (minus sign) to ASCII '-'.
    std::string s;
    for (size_t i = 0; i < in.size();) {
        if (in.compare(i, 3, "\xe2\x88\x92") == 0) {
            s += '-';
            i += 3;
        } else {
            s += in[i];
            ++i;
        }
    }
    // Strip whitespace.
    std::string t;
    for (char c : s)
        if (c != ' ' && c != '\t') t += c;
    if (t.empty()) fail(Code::parse_error, "empty rational");
    size_t pos = 0;
    bool neg = false;
    if (t[pos] == '-') {
        neg = true;
        ++pos;
    } else if (t[pos] == '+') {
        ++pos;
    }
    std::string num, den = "1";
    size_t slash = t.find('/', pos);
    if (slash == std::string::npos) {
        num = t.substr(pos);
    } else {
        num = t.substr(pos, slash - pos);
        den = t.substr(slash + 1);
    }
    auto digits = [](const std::string& d) {
        if (d.empty()) return false;
        for (char c : d)
            if (c < '0' || c > '9') return false;
        return true;
    };
    if (!digits(num) || !digits(den) || den == "0")
        fail(Code::parse_error, "bad rational: '" + in + "'");
    Rat r{mpz_class(num), mpz_class(den)};
    r.canonicalize();
    if (neg) r = -r;
    return r;
}

std::string rat_str(const Rat& r) { return r.get_str(); }

Rat binomial(const Rat& x, unsigned k) {
    Rat result(1);
    for (unsigned i = 0; i < k; ++i) {
        result *= x - Rat(static_cast<long>(i));
        result /= Rat(static_cast<long>(i) + 1);
    }
    return result;
}

}  // namespace sw
