#include "qps/specparse.hpp"

#include <cmath>
#include <fstream>

#include <json.hpp>

#include "qps/qosc.hpp"

namespace qps::parse {

namespace {

int parse_index(const std::string& text, std::size_t pos) {
    if (pos >= text.size()) throw ParseError("missing index", pos);
    std::size_t used = 0;
    int v;
    try {
        v = std::stoi(text.substr(pos), &used);
    } catch (const std::exception&) {
        throw ParseError("malformed index", pos);
    }
    if (pos + used != text.size()) throw ParseError("trailing characters", pos + used);
    return v;
}

}  // namespace

wk::StateVec parse_state_spec(const std::string& text, int dim) {
    if (dim < 2) throw std::invalid_argument("parse_state_spec: dim >= 2 required");
    const auto colon = text.find(':');
    if (colon == std::string::npos) throw ParseError("expected '<kind>:<arg>'", 0);
    const std::string kind = text.substr(0, colon);
    using linalg::cd;
    if (kind == "fock") {
        const int n = parse_index(text, colon + 1);
        if (n < 0 || n >= dim) throw ParseError("fock index out of range", colon + 1);
        return wk::StateVec::fock(dim, n);
    }
    if (kind == "split") {
        const int n = parse_index(text, colon + 1);
        if (n < 1 || n >= dim)
            throw ParseError("split index out of range (1 <= n < dim)", colon + 1);
        std::vector<cd> a(dim, cd{0.0, 0.0});
        const double s = 1.0 / std::sqrt(2.0);
        a[n] = cd{s, 0.0};
        a[n - 1] = cd{s, 0.0};
        return wk::StateVec(dim, std::move(a));
    }
    if (kind == "phase") {
        const int r = parse_index(text, colon + 1);
        if (r < 0 || r >= dim) throw ParseError("phase index out of range", colon + 1);
        const qosc::PhaseOp p = qosc::phase_operator(dim);
        std::vector<cd> a(dim);
        for (int i = 0; i < dim; ++i) a[i] = p.phase_states.at(i, r);
        return wk::StateVec(dim, std::move(a));
    }
    if (kind == "amps") {
        const std::string path = text.substr(colon + 1);
        std::ifstream in(path);
        if (!in) throw ParseError("cannot open amplitude file '" + path + "'", colon + 1);
        nlohmann::json j;
        try {
            in >> j;
        } catch (const std::exception& e) {
            throw ParseError(std::string("bad JSON: ") + e.what(), colon + 1);
        }
        if (!j.is_array() || static_cast<int>(j.size()) != dim)
            throw ParseError("amps file must hold exactly dim [re,im] pairs", colon + 1);
        std::vector<cd> a(dim);
        double nrm = 0.0;
        for (int i = 0; i < dim; ++i) {
            if (!j[i].is_array() || j[i].size() != 2)
                throw ParseError("entry " + std::to_string(i) + " is not [re,im]",
                                 colon + 1);
            a[i] = cd{j[i][0].get<double>(), j[i][1].get<double>()};
            nrm += std::norm(a[i]);
        }
        nrm = std::sqrt(nrm);
        if (nrm < 1e-300) throw ParseError("zero amplitude vector", colon + 1);
        for (auto& z : a) z /= nrm;
        return wk::StateVec(dim, std::move(a));
    }
    throw ParseError("unknown state kind '" + kind + "'", 0);
}

namespace {

struct HamParser {
    const std::string& s;
    std::size_t pos = 0;

    explicit HamParser(const std::string& text) : s(text) {}

    void skip_ws() {
        while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) ++pos;
    }

    bool peek_is(char c) {
        skip_ws();
        return pos < s.size() && s[pos] == c;
    }

    double parse_number() {
        skip_ws();
        std::size_t used = 0;
        double v;
        try {
            v = std::stod(s.substr(pos), &used);
        } catch (const std::exception&) {
            throw ParseError("expected a number", pos);
        }
        pos += used;
        return v;
    }

    // term := [number ['*']] ['n' ['^' int]]
    void parse_term(double sign, std::vector<double>& coeffs) {
        skip_ws();
        double coef = 1.0;
        bool saw_coef = false, saw_star = false;
        if (pos < s.size() &&
            (std::isdigit(static_cast<unsigned char>(s[pos])) || s[pos] == '.')) {
            coef = parse_number();
            saw_coef = true;
            if (peek_is('*')) {
                ++pos;
                saw_star = true;
            }
        }
        int power = 0;
        skip_ws();
        if (saw_star && (pos >= s.size() || s[pos] != 'n'))
            throw ParseError("expected 'n' after '*'", pos);
        if (pos < s.size() && s[pos] == 'n') {
            ++pos;
            power = 1;
            if (peek_is('^')) {
                ++pos;
                skip_ws();
                std::size_t used = 0;
                try {
                    power = std::stoi(s.substr(pos), &used);
                } catch (const std::exception&) {
                    throw ParseError("expected an integer exponent", pos);
                }
                pos += used;
                if (power < 0) throw ParseError("negative exponent", pos);
            }
        } else if (!saw_coef) {
            throw ParseError("expected a coefficient or 'n'", pos);
        }
        if (power > 4) throw ParseError("degree above 4 is not supported", pos);
        if (static_cast<int>(coeffs.size()) <= power) coeffs.resize(power + 1, 0.0);
        coeffs[power] += sign * coef;
    }
};

}  // namespace

aa::SpectrumFn parse_hamiltonian(const std::string& text) {
    HamParser p(text);
    std::vector<double> coeffs{0.0};
    double sign = 1.0;
    p.skip_ws();
    if (p.pos >= text.size()) throw ParseError("empty spectrum", 0);
    if (p.peek_is('-')) {
        ++p.pos;
        sign = -1.0;
    } else if (p.peek_is('+')) {
        ++p.pos;
    }
    p.parse_term(sign, coeffs);
    while (true) {
        p.skip_ws();
        if (p.pos >= text.size()) break;
        if (text[p.pos] == '+') sign = 1.0;
        else if (text[p.pos] == '-') sign = -1.0;
        else throw ParseError("expected '+' or '-'", p.pos);
        ++p.pos;
        p.parse_term(sign, coeffs);
    }
    return aa::SpectrumFn{std::move(coeffs)};
}

}  // namespace qps::parse
