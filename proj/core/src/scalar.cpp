//
// Project     : qsu2
// Module      : scalar
//

#include "qsu2/scalar.hpp"

#include <charconv>

namespace qsu2 {

std::string HalfInt::str() const {
    if (twice % 2 == 0)
        return std::to_string(twice / 2);
    return std::to_string(twice) + "/2";
}

std::optional<HalfInt> parse_half_int(const std::string& text) {
    auto parse_int = [](std::string_view s, int& out) {
        auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), out);
        return ec == std::errc{} && ptr == s.data() + s.size();
    };
    std::string_view s(text);
    auto slash = s.find('/');
    if (slash == std::string_view::npos) {
        int n = 0;
        if (!parse_int(s, n))
            return std::nullopt;
        return HalfInt::whole(n);
    }
    int num = 0, den = 0;
    if (!parse_int(s.substr(0, slash), num) || !parse_int(s.substr(slash + 1), den))
        return std::nullopt;
    if (den == 2)
        return HalfInt(num);
    if (den == 1)
        return HalfInt::whole(num);
    return std::nullopt;
}

PodlesC PodlesC::value(double c) {
    if (!(c >= 0.0))
        throw std::invalid_argument("Podles parameter c must be >= 0, got " + std::to_string(c));
    return PodlesC{true, c};
}

std::string PodlesC::str() const {
    return finite ? std::to_string(c) : std::string("inf");
}

std::optional<PodlesC> parse_podles_c(const std::string& text) {
    if (text == "inf" || text == "Inf" || text == "INF" || text == "infinity" || text == "Infinite")
        return PodlesC::infinite();
    try {
        size_t pos = 0;
        double v = std::stod(text, &pos);
        if (pos != text.size() || !(v >= 0.0))
            return std::nullopt;
        return PodlesC::value(v);
    } catch (const std::exception&) {
        return std::nullopt;
    }
}

QParam::QParam(double q_value, PodlesC c_value) : q(q_value), c(c_value) {
    if (!(q > 0.0 && q < 1.0))
        throw std::invalid_argument("deformation parameter requires 0 < q < 1, got " + std::to_string(q));
    if (c.finite && !(c.c >= 0.0))
        throw std::invalid_argument("Podles parameter c must be >= 0");
}

double qint(double x, double q) {
    return (std::pow(q, x) - std::pow(q, -x)) / (q - 1.0 / q);
}

double qpow_halfint(double q, HalfInt x) {
    // One square root, then an exact integer power; avoids pow(q, 0.5*k) drift.
    const double s = std::sqrt(q);
    return std::pow(s, x.twice);
}

} // namespace qsu2
