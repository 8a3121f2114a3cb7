#include "chaincodes/serialize.hpp"

#include <sstream>

namespace chaincodes {

std::string to_decimal(const BigInt& v) { return v.str(); }

nlohmann::json to_json(const Poly& p) {
    nlohmann::json a = nlohmann::json::array();
    for (const auto& c : p.coeffs()) a.push_back(c.bits);
    return a;
}

nlohmann::json to_json(const RPoly& p) {
    nlohmann::json a = nlohmann::json::array();
    for (const auto& r : p.coeffs) {
        nlohmann::json digits = nlohmann::json::array();
        for (const auto& c : r) digits.push_back(c.bits);
        a.push_back(std::move(digits));
    }
    return a;
}

nlohmann::json to_json(const Params& p) {
    return {{"m", p.m},
            {"n", p.n},
            {"k", p.k},
            {"lambda", p.lambda},
            {"delta", p.delta.bits},
            {"alpha", p.alpha.bits},
            {"delta0", p.delta0.bits},
            {"alpha0", p.alpha0.bits},
            {"reduction", p.F().reduction()}};
}

nlohmann::json to_json(const IdealDescriptor& d) {
    return {{"factor", d.j}, {"family", static_cast<int>(d.family)}, {"s", d.s}, {"t", d.t}, {"h", to_json(d.h)}};
}

nlohmann::json to_json(const CodeDescriptor& c) {
    nlohmann::json a = nlohmann::json::array();
    for (const auto& d : c.components) a.push_back(to_json(d));
    return a;
}

std::string to_string(const RPoly& p) {
    const std::size_t digits = p.coeffs.empty() ? 0 : p.coeffs.front().size();
    std::ostringstream os;
    bool first = true;
    for (std::size_t j = 0; j < digits; ++j) {
        std::vector<FieldElem> c;
        for (const auto& r : p.coeffs) c.push_back(r[j]);
        const Poly pj(std::move(c));
        if (pj.is_zero()) continue;
        if (!first) os << " + ";
        first = false;
        if (j == 0) {
            os << '(' << pj.to_string() << ')';
        } else {
            os << 'u';
            if (j > 1) os << '^' << j;
            os << "*(" << pj.to_string() << ')';
        }
    }
    return first ? "0" : os.str();
}

std::string to_hex(const Bits& v, int dim) {
    static constexpr char kDigits[] = "0123456789abcdef";
    std::string s;
    for (int nib = (dim + 3) / 4 - 1; nib >= 0; --nib) {
        int val = 0;
        for (int b = 3; b >= 0; --b) {
            const int i = nib * 4 + b;
            val = (val << 1) | ((i < dim && v.test(i)) ? 1 : 0);
        }
        s.push_back(kDigits[val]);
    }
    return s;
}

std::string csv_header() { return "index,factor,family,s,t,h"; }

std::string csv_row(std::uint64_t index, const IdealDescriptor& d) {
    std::ostringstream os;
    os << index << ',' << d.j << ',' << static_cast<int>(d.family) << ',' << d.s << ',' << d.t << ',';
    bool first = true;
    for (const auto& c : d.h.coeffs()) {
        if (!first) os << ' ';
        os << c.bits;
        first = false;
    }
    return os.str();
}

}  // namespace chaincodes
