#include "cluskit/laurent.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>
#include <stdexcept>

namespace cluskit {

LaurentPoly LaurentPoly::constant(int nvars, const mpz_class& c) {
    LaurentPoly p(nvars);
    p.add_term(ExponentVec(nvars, 0), c);
    return p;
}

LaurentPoly LaurentPoly::variable(int nvars, int i) {
    if (i < 0 || i >= nvars)
        throw std::invalid_argument("variable index out of range");
    ExponentVec e(nvars, 0);
    e[i] = 1;
    return monomial(nvars, e, 1);
}

LaurentPoly LaurentPoly::monomial(int nvars, const ExponentVec& e, const mpz_class& c) {
    if (static_cast<int>(e.size()) != nvars)
        throw std::invalid_argument("exponent vector length does not match variable count");
    LaurentPoly p(nvars);
    p.add_term(e, c);
    return p;
}

void LaurentPoly::add_term(const ExponentVec& e, const mpz_class& c) {
    if (c == 0) return;
    auto it = terms_.find(e);
    if (it == terms_.end()) {
        terms_.emplace(e, c);
    } else {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

void LaurentPoly::check_same_space(const LaurentPoly& o) const {
    if (nvars_ != o.nvars_)
        throw std::invalid_argument("Laurent polynomials over different variable counts");
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& o) {
    check_same_space(o);
    for (const auto& [e, c] : o.terms_) add_term(e, c);
    return *this;
}

LaurentPoly& LaurentPoly::operator-=(const LaurentPoly& o) {
    check_same_space(o);
    for (const auto& [e, c] : o.terms_) add_term(e, -c);
    return *this;
}

LaurentPoly LaurentPoly::operator+(const LaurentPoly& o) const {
    LaurentPoly r = *this;
    r += o;
    return r;
}

LaurentPoly LaurentPoly::operator-(const LaurentPoly& o) const {
    LaurentPoly r = *this;
    r -= o;
    return r;
}

LaurentPoly LaurentPoly::operator-() const {
    LaurentPoly r(nvars_);
    for (const auto& [e, c] : terms_) r.terms_.emplace(e, -c);
    return r;
}

LaurentPoly LaurentPoly::operator*(const LaurentPoly& o) const {
    check_same_space(o);
    LaurentPoly r(nvars_);
    ExponentVec e(nvars_);
    for (const auto& [ea, ca] : terms_) {
        for (const auto& [eb, cb] : o.terms_) {
            for (int i = 0; i < nvars_; ++i) e[i] = ea[i] + eb[i];
            r.add_term(e, ca * cb);
        }
    }
    return r;
}

LaurentPoly LaurentPoly::pow(int k) const {
    if (k < 0) throw std::invalid_argument("negative power of a Laurent polynomial");
    LaurentPoly acc = constant(nvars_, 1);
    LaurentPoly base = *this;
    while (k > 0) {
        if (k & 1) acc = acc * base;
        k >>= 1;
        if (k) base = base * base;
    }
    return acc;
}

ExponentVec LaurentPoly::min_exponents() const {
    if (terms_.empty())
        throw std::domain_error("min_exponents of the zero polynomial");
    ExponentVec m = terms_.begin()->first;
    for (const auto& [e, c] : terms_)
        for (int i = 0; i < nvars_; ++i) m[i] = std::min(m[i], e[i]);
    return m;
}

ExponentVec LaurentPoly::max_exponents() const {
    if (terms_.empty())
        throw std::domain_error("max_exponents of the zero polynomial");
    ExponentVec m = terms_.begin()->first;
    for (const auto& [e, c] : terms_)
        for (int i = 0; i < nvars_; ++i) m[i] = std::max(m[i], e[i]);
    return m;
}

bool LaurentPoly::is_polynomial() const {
    for (const auto& [e, c] : terms_)
        for (int x : e)
            if (x < 0) return false;
    return true;
}

std::optional<int> LaurentPoly::as_single_variable() const {
    if (terms_.size() != 1) return std::nullopt;
    const auto& [e, c] = *terms_.begin();
    if (c != 1) return std::nullopt;
    int idx = -1;
    for (int i = 0; i < nvars_; ++i) {
        if (e[i] == 0) continue;
        if (e[i] != 1 || idx >= 0) return std::nullopt;
        idx = i;
    }
    if (idx < 0) return std::nullopt;
    return idx;
}

std::string LaurentPoly::str() const {
    if (terms_.empty()) return "0";
    std::ostringstream out;
    bool first = true;
    for (const auto& [e, c] : terms_) {
        mpz_class mag = abs(c);
        if (first) {
            if (c < 0) out << "-";
            first = false;
        } else {
            out << (c < 0 ? " - " : " + ");
        }
        std::string vars;
        for (int i = 0; i < nvars_; ++i) {
            if (e[i] == 0) continue;
            if (!vars.empty()) vars += "*";
            vars += "x" + std::to_string(i + 1);
            if (e[i] != 1) vars += "^" + std::to_string(e[i]);
        }
        if (vars.empty()) {
            out << mag.get_str();
        } else if (mag == 1) {
            out << vars;
        } else {
            out << mag.get_str() << "*" << vars;
        }
    }
    return out.str();
}

namespace {

[[noreturn]] void parse_fail(const std::string& text, const std::string& why) {
    throw std::invalid_argument("cannot parse Laurent polynomial \"" + text + "\": " + why);
}

}  // namespace

LaurentPoly LaurentPoly::parse(const std::string& text, int nvars) {
    std::string s;
    s.reserve(text.size());
    for (char ch : text)
        if (!std::isspace(static_cast<unsigned char>(ch))) s += ch;
    if (s.empty()) parse_fail(text, "empty input");
    if (s == "0") return LaurentPoly(nvars);

    LaurentPoly result(nvars);
    std::size_t pos = 0;
    int sign = 1;
    if (s[0] == '-') {
        sign = -1;
        pos = 1;
    } else if (s[0] == '+') {
        pos = 1;
    }
    while (pos < s.size()) {
        // term boundary: next top-level '+' or '-' not directly after '^'
        std::size_t end = pos;
        while (end < s.size()) {
            char ch = s[end];
            if ((ch == '+' || ch == '-') && end > pos && s[end - 1] != '^') break;
            ++end;
        }
        std::string term = s.substr(pos, end - pos);
        if (term.empty()) parse_fail(text, "empty term");

        mpz_class coeff = sign;
        ExponentVec e(nvars, 0);
        std::size_t fpos = 0;
        bool saw_factor = false;
        while (fpos < term.size()) {
            std::size_t fend = term.find('*', fpos);
            if (fend == std::string::npos) fend = term.size();
            std::string factor = term.substr(fpos, fend - fpos);
            if (factor.empty()) parse_fail(text, "empty factor in term \"" + term + "\"");
            if (std::isdigit(static_cast<unsigned char>(factor[0]))) {
                for (char ch : factor)
                    if (!std::isdigit(static_cast<unsigned char>(ch)))
                        parse_fail(text, "bad integer literal \"" + factor + "\"");
                coeff *= mpz_class(factor);
            } else if (factor[0] == 'x') {
                std::size_t caret = factor.find('^');
                std::string idx_str = factor.substr(1, caret == std::string::npos
                                                           ? std::string::npos
                                                           : caret - 1);
                if (idx_str.empty()) parse_fail(text, "missing variable index in \"" + factor + "\"");
                int idx = 0;
                try {
                    idx = std::stoi(idx_str);
                } catch (const std::exception&) {
                    parse_fail(text, "bad variable index in \"" + factor + "\"");
                }
                if (idx < 1 || idx > nvars)
                    parse_fail(text, "variable x" + idx_str + " outside x1..x" +
                                         std::to_string(nvars));
                int exp = 1;
                if (caret != std::string::npos) {
                    std::string exp_str = factor.substr(caret + 1);
                    try {
                        exp = std::stoi(exp_str);
                    } catch (const std::exception&) {
                        parse_fail(text, "bad exponent in \"" + factor + "\"");
                    }
                }
                e[idx - 1] += exp;
            } else {
                parse_fail(text, "unexpected factor \"" + factor + "\"");
            }
            saw_factor = true;
            fpos = fend + 1;
        }
        if (!saw_factor) parse_fail(text, "empty term");
        result.add_term(e, coeff);

        pos = end;
        if (pos < s.size()) {
            sign = (s[pos] == '-') ? -1 : 1;
            ++pos;
            if (pos >= s.size()) parse_fail(text, "dangling sign");
        }
    }
    return result;
}

int compare(const LaurentPoly& a, const LaurentPoly& b) {
    if (a.term_count() != b.term_count())
        return a.term_count() < b.term_count() ? -1 : 1;
    auto ia = a.terms().begin();
    auto ib = b.terms().begin();
    for (; ia != a.terms().end(); ++ia, ++ib) {
        if (ia->first != ib->first) return ia->first < ib->first ? -1 : 1;
        int c = cmp(ia->second, ib->second);
        if (c != 0) return c;
    }
    return 0;
}

std::optional<LaurentPoly> exact_div(const LaurentPoly& a, const LaurentPoly& b,
                                     LaurentPoly* remainder) {
    if (b.is_zero()) throw std::domain_error("division by the zero polynomial");
    if (a.nvars() != b.nvars())
        throw std::invalid_argument("exact_div over different variable counts");
    const int n = a.nvars();
    if (a.is_zero()) return LaurentPoly(n);

    // If a = q*b then, per variable, min/max exponents of q are pinned by
    // min(q) = min(a)-min(b) and max(q) = max(a)-max(b) (lowest/highest parts
    // multiply without cancellation over an integral domain).  Every quotient
    // monomial produced below must land in that box; successive quotient
    // monomials strictly decrease lexicographically, so the loop terminates
    // even when the division is not exact.
    ExponentVec lo(n), hi(n);
    {
        ExponentVec amin = a.min_exponents(), amax = a.max_exponents();
        ExponentVec bmin = b.min_exponents(), bmax = b.max_exponents();
        for (int i = 0; i < n; ++i) {
            lo[i] = amin[i] - bmin[i];
            hi[i] = amax[i] - bmax[i];
        }
    }
    auto in_box = [&](const ExponentVec& e) {
        for (int i = 0; i < n; ++i)
            if (e[i] < lo[i] || e[i] > hi[i]) return false;
        return true;
    };

    const auto& bt = *b.terms().rbegin();  // lex-leading term of b
    LaurentPoly r = a;
    LaurentPoly q(n);
    ExponentVec me(n);
    while (!r.is_zero()) {
        const auto& rt = *r.terms().rbegin();
        for (int i = 0; i < n; ++i) me[i] = rt.first[i] - bt.first[i];
        if (!in_box(me) || !mpz_divisible_p(rt.second.get_mpz_t(), bt.second.get_mpz_t())) {
            if (remainder) *remainder = r;
            return std::nullopt;
        }
        mpz_class mc;
        mpz_divexact(mc.get_mpz_t(), rt.second.get_mpz_t(), bt.second.get_mpz_t());
        LaurentPoly m = LaurentPoly::monomial(n, me, mc);
        q += m;
        r -= m * b;
    }
    return q;
}

ReducedForm reduced_form(const LaurentPoly& u) {
    if (u.is_zero()) throw std::domain_error("reduced_form of the zero polynomial");
    ExponentVec mins = u.min_exponents();
    ExponentVec d(u.nvars());
    for (int i = 0; i < u.nvars(); ++i) d[i] = -mins[i];
    LaurentPoly shift = LaurentPoly::monomial(u.nvars(), d, 1);
    return ReducedForm{u * shift, d};
}

bool positivity_check(const LaurentPoly& f) {
    if (!f.is_polynomial())
        throw std::invalid_argument("positivity_check requires a genuine polynomial");
    const int n = f.nvars();
    // f(e_i) with e_i = all ones except 0 in slot i: only terms free of x_i survive.
    for (int i = 0; i < n; ++i) {
        mpz_class value = 0;
        for (const auto& [e, c] : f.terms())
            if (e[i] == 0) value += c;
        if (value <= 0) return false;
    }
    return true;
}

LaurentPoly monomial_of_dimvector(const ExponentVec& d) {
    for (int x : d)
        if (x < 0)
            throw std::invalid_argument("monomial_of_dimvector requires nonnegative entries");
    return LaurentPoly::monomial(static_cast<int>(d.size()), d, 1);
}

}  // namespace cluskit
