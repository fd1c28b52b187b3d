#include "configres/arith/class_poly.hpp"

#include <algorithm>
#include <cctype>

#include "configres/errors.hpp"

namespace configres {

ClassPoly::ClassPoly(std::vector<std::int64_t> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

void ClassPoly::trim() {
    while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

ClassPoly ClassPoly::monomial(unsigned degree, std::int64_t coeff) {
    std::vector<std::int64_t> c(degree + 1, 0);
    c[degree] = coeff;
    return ClassPoly(std::move(c));
}

ClassPoly ClassPoly::projective_space(int k) {
    if (k < 0) return {};
    return ClassPoly(std::vector<std::int64_t>(static_cast<std::size_t>(k) + 1, 1));
}

ClassPoly& ClassPoly::operator+=(const ClassPoly& rhs) {
    if (coeffs_.size() < rhs.coeffs_.size()) coeffs_.resize(rhs.coeffs_.size(), 0);
    for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i) coeffs_[i] += rhs.coeffs_[i];
    trim();
    return *this;
}

ClassPoly& ClassPoly::operator-=(const ClassPoly& rhs) {
    if (coeffs_.size() < rhs.coeffs_.size()) coeffs_.resize(rhs.coeffs_.size(), 0);
    for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i) coeffs_[i] -= rhs.coeffs_[i];
    trim();
    return *this;
}

ClassPoly operator*(const ClassPoly& a, const ClassPoly& b) {
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<std::int64_t> c(a.coeffs_.size() + b.coeffs_.size() - 1, 0);
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i)
        for (std::size_t j = 0; j < b.coeffs_.size(); ++j) c[i + j] += a.coeffs_[i] * b.coeffs_[j];
    return ClassPoly(std::move(c));
}

std::int64_t ClassPoly::evaluate(std::int64_t t) const {
    std::int64_t v = 0;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) v = v * t + *it;
    return v;
}

bool ClassPoly::divide_by_t_minus_one(ClassPoly& out) const {
    if (coeffs_.empty()) {
        out = {};
        return true;
    }
    // synthetic division by the root 1, from the top coefficient down
    std::vector<std::int64_t> q(coeffs_.size() - 1, 0);
    std::int64_t carry = 0;
    for (std::size_t i = coeffs_.size(); i-- > 1;) {
        carry += coeffs_[i];
        q[i - 1] = carry;
    }
    if (carry + coeffs_[0] != 0) return false;
    out = ClassPoly(std::move(q));
    return true;
}

std::string ClassPoly::to_string(char symbol) const {
    if (coeffs_.empty()) return "0";
    std::string out;
    for (std::size_t i = coeffs_.size(); i-- > 0;) {
        std::int64_t c = coeffs_[i];
        if (c == 0) continue;
        if (c < 0) out += '-';
        else if (!out.empty()) out += '+';
        std::int64_t a = c < 0 ? -c : c;
        if (i == 0 || a != 1) out += std::to_string(a);
        if (i >= 1) out += symbol;
        if (i >= 2) out += '^' + std::to_string(i);
    }
    return out;
}

ClassPoly parse_class_poly(const std::string& text, char symbol) {
    std::vector<std::int64_t> coeffs;
    std::size_t pos = 0;
    std::string s;
    for (char ch : text)
        if (!std::isspace(static_cast<unsigned char>(ch))) s += ch;
    if (s == "0") return {};
    while (pos < s.size()) {
        int sign = 1;
        if (s[pos] == '+' || s[pos] == '-') {
            sign = s[pos] == '-' ? -1 : 1;
            ++pos;
        }
        std::int64_t coeff = 1;
        std::size_t start = pos;
        while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
        if (pos > start) coeff = std::stoll(s.substr(start, pos - start));
        unsigned degree = 0;
        if (pos < s.size() && s[pos] == symbol) {
            ++pos;
            degree = 1;
            if (pos < s.size() && s[pos] == '^') {
                ++pos;
                std::size_t es = pos;
                while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
                if (pos == es) throw Error(ErrorCode::ParseError, "bad exponent in '" + text + "'");
                degree = static_cast<unsigned>(std::stoul(s.substr(es, pos - es)));
            }
        } else if (pos == start) {
            throw Error(ErrorCode::ParseError, "bad class polynomial '" + text + "'");
        }
        if (coeffs.size() <= degree) coeffs.resize(degree + 1, 0);
        coeffs[degree] += sign * coeff;
    }
    return ClassPoly(std::move(coeffs));
}

}  // namespace configres
