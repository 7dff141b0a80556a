#pragma once

// Text formats shared by the CLI and the tests:
//   polynomial  [c0,c1,...]            (low-to-high coefficients)
//   curve       p=<int>; g=<int>; f=[f0,...,f_{2g+2}]
//   divisor     u=[...]; v=[...]; n=<int>

#include <cctype>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "hec/curve.hpp"
#include "hec/divisor.hpp"
#include "hec/poly.hpp"

namespace hec {

class ParseError : public std::runtime_error {
public:
    explicit ParseError(const std::string& what) : std::runtime_error(what) {}
};

namespace io_detail {

inline std::string strip(const std::string& s) {
    std::size_t a = 0, b = s.size();
    while (a < b && std::isspace(static_cast<unsigned char>(s[a]))) ++a;
    while (b > a && std::isspace(static_cast<unsigned char>(s[b - 1]))) --b;
    return s.substr(a, b - a);
}

inline std::uint64_t parse_u64(const std::string& s) {
    const std::string t = strip(s);
    if (t.empty()) throw ParseError("empty integer");
    std::size_t pos = 0;
    std::uint64_t v;
    try {
        v = std::stoull(t, &pos);
    } catch (const std::exception&) {
        throw ParseError("bad integer '" + t + "'");
    }
    if (pos != t.size()) throw ParseError("bad integer '" + t + "'");
    return v;
}

// Splits "key=value; key=value; ..." on ';' then '='.
inline std::vector<std::pair<std::string, std::string>> key_values(const std::string& s) {
    std::vector<std::pair<std::string, std::string>> out;
    std::stringstream ss(s);
    std::string part;
    while (std::getline(ss, part, ';')) {
        part = strip(part);
        if (part.empty()) continue;
        auto eq = part.find('=');
        if (eq == std::string::npos) throw ParseError("expected key=value in '" + part + "'");
        out.emplace_back(strip(part.substr(0, eq)), strip(part.substr(eq + 1)));
    }
    return out;
}

}  // namespace io_detail

inline std::vector<Fp> parse_coeff_list(const std::string& s) {
    const std::string t = io_detail::strip(s);
    if (t.size() < 2 || t.front() != '[' || t.back() != ']')
        throw ParseError("expected [c0,c1,...], got '" + t + "'");
    std::vector<Fp> out;
    std::string body = t.substr(1, t.size() - 2);
    if (io_detail::strip(body).empty()) return out;
    std::stringstream ss(body);
    std::string item;
    while (std::getline(ss, item, ',')) out.push_back(io_detail::parse_u64(item));
    return out;
}

inline Poly parse_poly(const std::string& s, const FieldCtx& F) {
    auto raw = parse_coeff_list(s);
    for (auto& c : raw) c = F.reduce(c);
    return Poly(std::move(raw));
}

inline std::string format_poly(const Poly& a) {
    std::string out = "[";
    for (std::size_t i = 0; i < a.coeffs().size(); ++i) {
        if (i) out += ",";
        out += std::to_string(a.coeff(i));
    }
    return out + "]";
}

inline std::string format_divisor(const BalancedDivisor& d) {
    return "u=" + format_poly(d.u) + "; v=" + format_poly(d.v) + "; n=" + std::to_string(d.n);
}

inline BalancedDivisor parse_divisor(const std::string& s, const FieldCtx& F) {
    Poly u, v;
    int n = 0;
    bool have_u = false, have_v = false, have_n = false;
    for (auto& [key, val] : io_detail::key_values(s)) {
        if (key == "u") {
            u = parse_poly(val, F);
            have_u = true;
        } else if (key == "v") {
            v = parse_poly(val, F);
            have_v = true;
        } else if (key == "n") {
            n = static_cast<int>(io_detail::parse_u64(val));
            have_n = true;
        } else {
            throw ParseError("unknown divisor field '" + key + "'");
        }
    }
    if (!have_u || !have_v || !have_n) throw ParseError("divisor needs u=, v=, n=");
    return BalancedDivisor{u, v, n};
}

inline std::string format_curve(const CurveModel& c) {
    return "p=" + std::to_string(c.p()) + "; g=" + std::to_string(c.genus()) +
           "; f=" + format_poly(c.f());
}

inline CurveModel parse_curve(const std::string& s) {
    std::uint64_t p = 0;
    int g = 3;
    std::string fstr;
    for (auto& [key, val] : io_detail::key_values(s)) {
        if (key == "p")
            p = io_detail::parse_u64(val);
        else if (key == "g")
            g = static_cast<int>(io_detail::parse_u64(val));
        else if (key == "f")
            fstr = val;
        else
            throw ParseError("unknown curve field '" + key + "'");
    }
    if (p == 0 || fstr.empty()) throw ParseError("curve needs p= and f=");
    FieldCtx F(p);
    auto raw = parse_coeff_list(fstr);
    if (raw.size() != static_cast<std::size_t>(2 * g + 3))
        throw ParseError("f needs exactly 2g+3 coefficients");
    for (auto& c : raw) c = F.reduce(c);
    return new_curve(F, g, raw);
}

}  // namespace hec
