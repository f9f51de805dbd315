#include "abelsub/gauss.hpp"

#include <cctype>
#include <stdexcept>

#include "abelsub/error.hpp"

namespace abelsub {

GaussScalar& GaussScalar::operator/=(const GaussScalar& o) {
    mpq_class n = o.norm();
    if (sgn(n) == 0) throw std::domain_error("division by zero Gaussian rational");
    // (a + bi) / (c + di) = (a + bi)(c - di) / (c^2 + d^2)
    mpq_class r = (re_ * o.re_ + im_ * o.im_) / n;
    mpq_class i = (im_ * o.re_ - re_ * o.im_) / n;
    re_ = std::move(r);
    im_ = std::move(i);
    return *this;
}

std::string GaussScalar::to_string() const {
    if (sgn(im_) == 0) return re_.get_str();
    if (sgn(re_) == 0) return im_.get_str() + " i";
    mpq_class mag = abs(im_);
    return re_.get_str() + (sgn(im_) < 0 ? "-" : "+") + mag.get_str() + " i";
}

namespace {

mpq_class parse_rational(std::string_view s, std::string_view whole) {
    if (s.empty() || s == "+" || s == "-") throw ParseError("bad rational in '" + std::string(whole) + "'");
    std::string t(s);
    if (t.front() == '+') t.erase(0, 1);
    for (char c : t)
        if (!(std::isdigit(static_cast<unsigned char>(c)) || c == '/' || c == '-'))
            throw ParseError("bad rational '" + t + "' in '" + std::string(whole) + "'");
    auto slash = t.find('/');
    if (slash != std::string::npos) {
        auto den = t.substr(slash + 1);
        if (den.empty() || den.find_first_not_of('0') == std::string::npos)
            throw ParseError("zero or missing denominator in '" + std::string(whole) + "'");
    }
    mpq_class q;
    if (q.set_str(t, 10) != 0) throw ParseError("bad rational '" + t + "' in '" + std::string(whole) + "'");
    q.canonicalize();
    return q;
}

}  // namespace

GaussScalar GaussScalar::parse(std::string_view text) {
    std::string s;
    for (char c : text)
        if (!std::isspace(static_cast<unsigned char>(c))) s += c;
    if (s.empty()) throw ParseError("empty scalar");
    if (s.back() != 'i') return GaussScalar(parse_rational(s, text));

    s.pop_back();
    // split at the last sign that is not the leading one
    std::size_t split = std::string::npos;
    for (std::size_t k = s.size(); k-- > 1;)
        if ((s[k] == '+' || s[k] == '-') && s[k - 1] != '/') {
            split = k;
            break;
        }
    std::string re_part = split == std::string::npos ? "" : s.substr(0, split);
    std::string im_part = split == std::string::npos ? s : s.substr(split);
    if (im_part.empty() || im_part == "+") im_part = "1";
    if (im_part == "-") im_part = "-1";
    mpq_class re = re_part.empty() ? mpq_class(0) : parse_rational(re_part, text);
    return GaussScalar(re, parse_rational(im_part, text));
}

}  // namespace abelsub
