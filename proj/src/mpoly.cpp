#include "graphpoly/mpoly.hpp"

#include <limits>
#include <sstream>
#include <stdexcept>

#include "graphpoly/limits.hpp"

namespace graphpoly {

namespace {

constexpr const char* kVarNames[kNumVars] = {"x", "y", "z", "w"};

Exponents add_exponents(const Exponents& a, const Exponents& b) {
    Exponents r{};
    for (int v = 0; v < kNumVars; ++v) r[v] = a[v] + b[v];
    return r;
}

bool divides(const Exponents& d, const Exponents& e) {
    for (int v = 0; v < kNumVars; ++v) {
        if (d[v] > e[v]) return false;
    }
    return true;
}

std::string monomial_text(const Exponents& e) {
    std::string out;
    for (int v = 0; v < kNumVars; ++v) {
        if (e[v] == 0) continue;
        if (!out.empty()) out += '*';
        out += kVarNames[v];
        if (e[v] > 1) out += "^" + std::to_string(e[v]);
    }
    return out;
}

}  // namespace

MPoly MPoly::variable(Var v) {
    Exponents e{};
    e[static_cast<int>(v)] = 1;
    return monomial(Integer(1), e);
}

MPoly MPoly::monomial(const Integer& c, const Exponents& e) {
    MPoly p;
    p.add_term(e, c);
    return p;
}

void MPoly::add_term(const Exponents& e, const Integer& c) {
    if (c == 0) return;
    auto [it, inserted] = terms_.try_emplace(e, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

Integer MPoly::coefficient(const Exponents& e) const {
    auto it = terms_.find(e);
    return it == terms_.end() ? Integer(0) : it->second;
}

unsigned MPoly::degree(Var v) const {
    unsigned d = 0;
    for (const auto& [e, c] : terms_) d = std::max<unsigned>(d, e[static_cast<int>(v)]);
    return d;
}

unsigned MPoly::total_degree() const {
    unsigned d = 0;
    for (const auto& [e, c] : terms_) {
        unsigned s = 0;
        for (auto k : e) s += k;
        d = std::max(d, s);
    }
    return d;
}

MPoly& MPoly::operator+=(const MPoly& o) {
    for (const auto& [e, c] : o.terms_) add_term(e, c);
    return *this;
}

MPoly& MPoly::operator-=(const MPoly& o) {
    for (const auto& [e, c] : o.terms_) add_term(e, Integer(-c));
    return *this;
}

MPoly operator*(const MPoly& a, const MPoly& b) {
    MPoly r;
    if (a.is_zero() || b.is_zero()) return r;
    Integer prod;
    for (const auto& [ea, ca] : a.terms_) {
        for (const auto& [eb, cb] : b.terms_) {
            mpz_mul(prod.get_mpz_t(), ca.get_mpz_t(), cb.get_mpz_t());
            auto [it, inserted] = r.terms_.try_emplace(add_exponents(ea, eb), prod);
            if (!inserted) it->second += prod;
        }
    }
    std::erase_if(r.terms_, [](const auto& t) { return t.second == 0; });
    return r;
}

MPoly& MPoly::operator*=(const MPoly& o) {
    *this = *this * o;
    return *this;
}

MPoly MPoly::operator-() const {
    MPoly r = *this;
    for (auto& [e, c] : r.terms_) c = -c;
    return r;
}

MPoly MPoly::pow(unsigned k) const {
    MPoly result(1L);
    MPoly base = *this;
    while (k > 0) {
        if (k & 1U) result *= base;
        k >>= 1U;
        if (k > 0) base *= base;
    }
    return result;
}

Rational MPoly::eval(const Assignment& point) const {
    std::array<const Rational*, kNumVars> value{};
    for (int v = 0; v < kNumVars; ++v) {
        auto it = point.find(static_cast<Var>(v));
        if (it != point.end()) value[v] = &it->second;
    }
    Rational sum = 0;
    for (const auto& [e, c] : terms_) {
        Rational term = c;
        for (int v = 0; v < kNumVars; ++v) {
            if (e[v] == 0) continue;
            if (value[v] == nullptr) {
                throw std::invalid_argument(std::string("eval: variable ") + kVarNames[v] +
                                            " is not assigned");
            }
            Rational p;
            mpz_pow_ui(p.get_num_mpz_t(), value[v]->get_num_mpz_t(), e[v]);
            mpz_pow_ui(p.get_den_mpz_t(), value[v]->get_den_mpz_t(), e[v]);
            term *= p;
        }
        sum += term;
    }
    return sum;
}

MPoly MPoly::substitute(const Substitution& sub) const {
    // powers[v][k] == sub[v]^k, grown on demand
    std::array<std::vector<MPoly>, kNumVars> powers;
    std::array<bool, kNumVars> mapped{};
    for (const auto& [v, q] : sub) {
        int i = static_cast<int>(v);
        mapped[i] = true;
        powers[i].push_back(MPoly(1L));
        powers[i].push_back(q);
    }
    MPoly result;
    for (const auto& [e, c] : terms_) {
        Exponents kept{};
        MPoly term = MPoly::monomial(c, kept);
        for (int v = 0; v < kNumVars; ++v) {
            if (e[v] == 0) continue;
            if (!mapped[v]) {
                kept[v] = e[v];
                continue;
            }
            auto& pw = powers[v];
            while (pw.size() <= e[v]) pw.push_back(pw.back() * pw[1]);
            term *= pw[e[v]];
        }
        if (kept != Exponents{}) term *= MPoly::monomial(Integer(1), kept);
        result += term;
    }
    return result;
}

std::string MPoly::to_string() const {
    if (terms_.empty()) return "0";
    std::string out;
    bool first = true;
    for (const auto& [e, c] : terms_) {
        std::string mono = monomial_text(e);
        Integer mag = abs(c);
        std::string body;
        if (mono.empty()) {
            body = mag.get_str();
        } else if (mag == 1) {
            body = mono;
        } else {
            body = mag.get_str() + mono;
        }
        if (first) {
            out = (c < 0 ? "-" : "") + body;
            first = false;
        } else {
            out += (c < 0 ? " - " : " + ") + body;
        }
    }
    return out;
}

nlohmann::json integer_to_json(const Integer& v) {
    if (v.fits_slong_p()) return static_cast<std::int64_t>(v.get_si());
    return v.get_str();
}

nlohmann::json rational_to_json(const Rational& v) {
    if (v.get_den() == 1) return integer_to_json(v.get_num());
    return v.get_str();
}

nlohmann::json MPoly::to_json() const {
    bool with_w = uses(Var::w);
    nlohmann::json arr = nlohmann::json::array();
    for (const auto& [e, c] : terms_) {
        nlohmann::json ex = {e[0], e[1], e[2]};
        if (with_w) ex.push_back(e[3]);
        arr.push_back({integer_to_json(c), ex});
    }
    return arr;
}

std::ostream& operator<<(std::ostream& os, const MPoly& p) { return os << p.to_string(); }

MPoly exact_div(const MPoly& p, const MPoly& q) {
    if (q.is_zero()) throw std::invalid_argument("exact_div: division by the zero polynomial");
    const auto& [lead_e, lead_c] = q.leading_term();
    MPoly quotient;
    MPoly rem = p;
    Integer coeff;
    while (!rem.is_zero()) {
        const auto& [re, rc] = rem.leading_term();
        if (!divides(lead_e, re) || !mpz_divisible_p(rc.get_mpz_t(), lead_c.get_mpz_t())) {
            throw IdentityViolation("exact_div: nonzero remainder dividing " + p.to_string() +
                                    " by " + q.to_string());
        }
        mpz_divexact(coeff.get_mpz_t(), rc.get_mpz_t(), lead_c.get_mpz_t());
        Exponents e{};
        for (int v = 0; v < kNumVars; ++v) e[v] = re[v] - lead_e[v];
        MPoly t = MPoly::monomial(coeff, e);
        quotient += t;
        rem -= t * q;
    }
    return quotient;
}

MPoly falling_factorial(unsigned i) {
    MPoly r(1L);
    for (unsigned j = 0; j < i; ++j) r *= X() - MPoly(static_cast<long>(j));
    return r;
}

MPoly assemble_from_falling(const FallingCoeffs& b) {
    MPoly r;
    MPoly ff(1L);
    for (std::size_t i = 1; i <= b.size(); ++i) {
        ff *= X() - MPoly(static_cast<long>(i - 1));
        if (b.at(i) != 0) r += MPoly(b.at(i)) * ff;
    }
    return r;
}

}  // namespace graphpoly
