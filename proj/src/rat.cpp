#include "qasep/rat.hpp"

#include <cctype>

namespace qasep {

Rat make_rat(const Int& num, const Int& den) {
    if (den == 0) throw ParameterError("rational with zero denominator");
    if (den < 0) return Rat(-num) / Rat(-den);
    return Rat(num) / Rat(den);
}

Rat parse_rat(std::string_view text) {
    auto trim = [](std::string_view s) {
        while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
        while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
        return s;
    };
    auto parse_int = [](std::string_view s) -> Int {
        if (s.empty()) throw ParameterError("empty integer in rational literal");
        std::size_t i = 0;
        if (s[0] == '+' || s[0] == '-') i = 1;
        if (i == s.size()) throw ParameterError("sign without digits in rational literal");
        for (std::size_t j = i; j < s.size(); ++j)
            if (!std::isdigit(static_cast<unsigned char>(s[j])))
                throw ParameterError("invalid rational literal: '" + std::string(s) + "'");
        return Int(std::string(s));
    };
    std::string_view s = trim(text);
    if (s.empty()) throw ParameterError("empty rational literal");
    auto slash = s.find('/');
    if (slash == std::string_view::npos) return Rat(parse_int(s));
    Int num = parse_int(trim(s.substr(0, slash)));
    Int den = parse_int(trim(s.substr(slash + 1)));
    return make_rat(num, den);
}

std::string rat_str(const Rat& x) {
    std::string out = numerator(x).str();
    if (denominator(x) != 1) {
        out += '/';
        out += denominator(x).str();
    }
    return out;
}

double rat_to_double(const Rat& x) { return x.convert_to<double>(); }

Rat rat_pow(const Rat& x, long long e) {
    if (e == 0) return Rat(1);
    if (x == 0) {
        if (e < 0) throw DivisionError("0 raised to a negative power");
        return Rat(0);
    }
    bool invert = e < 0;
    unsigned long long n = invert ? static_cast<unsigned long long>(-e) : static_cast<unsigned long long>(e);
    Rat base = x, acc(1);
    while (n > 0) {
        if (n & 1u) acc *= base;
        base *= base;
        n >>= 1u;
    }
    return invert ? Rat(1) / acc : acc;
}

Rat qint(int n, const Rat& q) {
    Rat acc(0), p(1);
    for (int i = 0; i < n; ++i) {
        acc += p;
        p *= q;
    }
    return acc;
}

int rat_sign(const Rat& x) {
    if (x == 0) return 0;
    return x < 0 ? -1 : 1;
}

bool rat_sqrt_exact(const Rat& x, Rat& root) {
    if (x < 0) return false;
    Int n = numerator(x), d = denominator(x);
    Int sn = sqrt(n), sd = sqrt(d);
    if (sn * sn != n || sd * sd != d) return false;
    root = make_rat(sn, sd);
    return true;
}

} // namespace qasep
