#include "splitbound/laurent.hpp"

#include <boost/multiprecision/cpp_int.hpp>

#include <algorithm>
#include <cctype>
#include <sstream>

namespace splitbound {

using Rational = boost::multiprecision::cpp_rational;

LaurentPoly LaurentPoly::constant(int arity, Int c) {
    LaurentPoly p(arity);
    p.add_term(Monomial(arity, 0), c);
    return p;
}

LaurentPoly LaurentPoly::term(int arity, int var, int power, Int c) {
    if (var < 0 || var >= arity) throw std::invalid_argument("variable index out of range");
    LaurentPoly p(arity);
    Monomial m(arity, 0);
    m[var] = power;
    p.add_term(m, c);
    return p;
}

LaurentPoly LaurentPoly::monomial(Monomial m, Int c) {
    LaurentPoly p(static_cast<int>(m.size()));
    p.add_term(m, c);
    return p;
}

Int LaurentPoly::coeff(const Monomial& m) const {
    auto it = terms_.find(m);
    return it == terms_.end() ? Int(0) : it->second;
}

void LaurentPoly::add_term(const Monomial& m, const Int& c) {
    if (static_cast<int>(m.size()) != arity_)
        throw std::invalid_argument("monomial arity mismatch");
    if (c == 0) return;
    auto [it, inserted] = terms_.emplace(m, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

LaurentPoly LaurentPoly::operator-() const {
    LaurentPoly r(arity_);
    for (const auto& [m, c] : terms_) r.terms_.emplace(m, -c);
    return r;
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& rhs) {
    if (arity_ != rhs.arity_) throw std::invalid_argument("arity mismatch in +");
    for (const auto& [m, c] : rhs.terms_) add_term(m, c);
    return *this;
}

LaurentPoly& LaurentPoly::operator-=(const LaurentPoly& rhs) {
    if (arity_ != rhs.arity_) throw std::invalid_argument("arity mismatch in -");
    for (const auto& [m, c] : rhs.terms_) add_term(m, -c);
    return *this;
}

LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
    if (a.arity_ != b.arity_) throw std::invalid_argument("arity mismatch in *");
    LaurentPoly r(a.arity_);
    Monomial m(a.arity_);
    for (const auto& [ma, ca] : a.terms_) {
        for (const auto& [mb, cb] : b.terms_) {
            for (int i = 0; i < a.arity_; ++i) m[i] = ma[i] + mb[i];
            r.add_term(m, ca * cb);
        }
    }
    return r;
}

LaurentPoly LaurentPoly::substitute_one(int var) const {
    if (var < 0 || var >= arity_) throw std::invalid_argument("variable index out of range");
    LaurentPoly r(arity_);
    for (const auto& [m0, c] : terms_) {
        Monomial m = m0;
        m[var] = 0;
        r.add_term(m, c);
    }
    return r;
}

LaurentPoly LaurentPoly::eliminate_var(int var) const {
    if (var < 0 || var >= arity_) throw std::invalid_argument("variable index out of range");
    LaurentPoly r(arity_ - 1);
    for (const auto& [m, c] : terms_) {
        Monomial k;
        k.reserve(arity_ - 1);
        for (int i = 0; i < arity_; ++i)
            if (i != var) k.push_back(m[i]);
        r.add_term(k, c);
    }
    return r;
}

LaurentPoly LaurentPoly::invert_var(int var) const {
    if (var < 0 || var >= arity_) throw std::invalid_argument("variable index out of range");
    LaurentPoly r(arity_);
    for (const auto& [m0, c] : terms_) {
        Monomial m = m0;
        m[var] = -m[var];
        r.add_term(m, c);
    }
    return r;
}

LaurentPoly LaurentPoly::embed(int arity, int var) const {
    if (arity_ != 1) throw std::invalid_argument("embed expects an arity-1 polynomial");
    LaurentPoly r(arity);
    for (const auto& [m, c] : terms_) {
        Monomial k(arity, 0);
        k[var] = m[0];
        r.add_term(k, c);
    }
    return r;
}

LaurentPoly LaurentPoly::permute_vars(const std::vector<int>& perm) const {
    if (static_cast<int>(perm.size()) != arity_)
        throw std::invalid_argument("permutation arity mismatch");
    LaurentPoly r(arity_);
    Monomial k(arity_);
    for (const auto& [m, c] : terms_) {
        for (int i = 0; i < arity_; ++i) k[i] = m[perm[i]];
        r.add_term(k, c);
    }
    return r;
}

Int LaurentPoly::evaluate(const std::vector<Int>& values) const {
    if (static_cast<int>(values.size()) != arity_)
        throw std::invalid_argument("evaluate arity mismatch");
    Rational acc = 0;
    for (const auto& [m, c] : terms_) {
        Rational t = Rational(c);
        for (int i = 0; i < arity_; ++i) {
            if (m[i] == 0) continue;
            if (values[i] == 0) throw std::domain_error("evaluate at 0 with negative exponent");
            Int p = boost::multiprecision::pow(values[i], static_cast<unsigned>(std::abs(m[i])));
            if (m[i] > 0)
                t *= Rational(p);
            else
                t /= Rational(p);
        }
        acc += t;
    }
    if (boost::multiprecision::denominator(acc) != 1)
        throw std::domain_error("non-integral evaluation");
    return boost::multiprecision::numerator(acc);
}

LaurentPoly LaurentPoly::normalize() const {
    if (terms_.empty()) return *this;
    Monomial shift(arity_, 0);
    for (int i = 0; i < arity_; ++i) {
        int lo = terms_.begin()->first[i];
        for (const auto& [m, c] : terms_) lo = std::min(lo, m[i]);
        shift[i] = lo;
    }
    LaurentPoly r(arity_);
    for (const auto& [m0, c] : terms_) {
        Monomial m = m0;
        for (int i = 0; i < arity_; ++i) m[i] -= shift[i];
        r.terms_.emplace(std::move(m), c);
    }
    // std::map orders keys lexicographically; the leading (lex-max) term is last.
    if (r.terms_.rbegin()->second < 0) return -r;
    return r;
}

bool unit_equal(const LaurentPoly& p, const LaurentPoly& q) {
    return p.normalize() == q.normalize();
}

namespace {

// Ordinary-polynomial exact division helper over Q, lex order, single divisor.
// Inputs must have nonnegative exponents. Returns false if division leaves a
// remainder; quotient accumulates in `q`.
bool poly_divide(std::map<Monomial, Rational> n, const std::map<Monomial, Rational>& d,
                 std::map<Monomial, Rational>& q, int arity) {
    const auto& [dlead, dlc] = *d.rbegin();
    while (!n.empty()) {
        const auto& [nlead, nlc] = *n.rbegin();
        Monomial qm(arity);
        for (int i = 0; i < arity; ++i) {
            qm[i] = nlead[i] - dlead[i];
            if (qm[i] < 0) return false;
        }
        Rational qc = nlc / dlc;
        q[qm] += qc;
        if (q[qm] == 0) q.erase(qm);
        // n -= (qc * x^qm) * d
        Monomial t(arity);
        for (const auto& [dm, dc] : d) {
            for (int i = 0; i < arity; ++i) t[i] = qm[i] + dm[i];
            auto it = n.find(t);
            Rational nv = (it == n.end() ? Rational(0) : it->second) - qc * dc;
            if (nv == 0) {
                if (it != n.end()) n.erase(it);
            } else if (it == n.end()) {
                n.emplace(t, nv);
            } else {
                it->second = nv;
            }
        }
    }
    return true;
}

std::map<Monomial, Rational> shifted_rational_terms(const LaurentPoly& p) {
    LaurentPoly s = p.normalize();
    std::map<Monomial, Rational> out;
    for (const auto& [m, c] : s.terms()) out.emplace(m, Rational(c));
    return out;
}

}  // namespace

bool divides(const LaurentPoly& d, const LaurentPoly& n) {
    if (d.arity() != n.arity()) throw std::invalid_argument("arity mismatch in divides");
    if (d.is_zero()) throw std::invalid_argument("division by zero polynomial");
    if (n.is_zero()) return true;
    // Shift both to ordinary polynomials (unit factors are irrelevant to
    // divisibility), divide over Q, then check integrality of the quotient:
    // by Gauss's lemma this certifies divisibility over Z as well.
    auto dn = shifted_rational_terms(d);
    auto nn = shifted_rational_terms(n);
    std::map<Monomial, Rational> q;
    if (!poly_divide(std::move(nn), dn, q, d.arity())) return false;
    for (const auto& [m, c] : q)
        if (boost::multiprecision::denominator(c) != 1) return false;
    return true;
}

LaurentPoly exact_quotient(const LaurentPoly& n, const LaurentPoly& d) {
    if (d.arity() != n.arity()) throw std::invalid_argument("arity mismatch in quotient");
    if (d.is_zero()) throw std::invalid_argument("division by zero polynomial");
    const int arity = d.arity();
    if (n.is_zero()) return LaurentPoly(arity);
    // Work with shifted copies; restore the unit offset afterwards.
    Monomial nlo(arity, 0), dlo(arity, 0);
    auto min_exps = [&](const LaurentPoly& p, Monomial& lo) {
        lo = p.terms().begin()->first;
        for (const auto& [m, c] : p.terms())
            for (int i = 0; i < arity; ++i) lo[i] = std::min(lo[i], m[i]);
    };
    min_exps(n, nlo);
    min_exps(d, dlo);
    auto nn = shifted_rational_terms(n);
    auto dn = shifted_rational_terms(d);
    bool nneg = n.terms().rbegin()->second < 0;  // sign stripped by normalize()
    bool dneg = d.terms().rbegin()->second < 0;
    std::map<Monomial, Rational> q;
    if (!poly_divide(std::move(nn), dn, q, arity))
        throw std::domain_error("inexact polynomial division");
    LaurentPoly out(arity);
    for (const auto& [m, c] : q) {
        if (boost::multiprecision::denominator(c) != 1)
            throw std::domain_error("inexact polynomial division (rational quotient)");
        Monomial k(arity);
        for (int i = 0; i < arity; ++i) k[i] = m[i] + nlo[i] - dlo[i];
        Int ic = boost::multiprecision::numerator(c);
        out.add_term(k, (nneg != dneg) ? -ic : ic);
    }
    return out;
}

namespace {

LaurentPoly cofactor_det(const std::vector<std::vector<LaurentPoly>>& m, std::vector<int> cols,
                         int row, int arity) {
    if (cols.empty()) return LaurentPoly::constant(arity, 1);
    LaurentPoly acc(arity);
    for (std::size_t k = 0; k < cols.size(); ++k) {
        const LaurentPoly& e = m[row][cols[k]];
        if (e.is_zero()) continue;
        std::vector<int> rest;
        rest.reserve(cols.size() - 1);
        for (std::size_t j = 0; j < cols.size(); ++j)
            if (j != k) rest.push_back(cols[j]);
        LaurentPoly sub = cofactor_det(m, std::move(rest), row + 1, arity);
        LaurentPoly contrib = e * sub;
        if (k % 2 == 0)
            acc += contrib;
        else
            acc -= contrib;
    }
    return acc;
}

}  // namespace

LaurentPoly determinant(const std::vector<std::vector<LaurentPoly>>& m) {
    const std::size_t n = m.size();
    if (n == 0) throw std::invalid_argument("determinant of empty matrix");
    int arity = m[0][0].arity();
    for (const auto& row : m)
        if (row.size() != n) throw std::invalid_argument("determinant of non-square matrix");

    if (n <= 4) {
        std::vector<int> cols(n);
        for (std::size_t i = 0; i < n; ++i) cols[i] = static_cast<int>(i);
        return cofactor_det(m, cols, 0, arity);
    }

    // Bareiss fraction-free elimination; divisions are exact in any integral domain.
    std::vector<std::vector<LaurentPoly>> a = m;
    LaurentPoly prev = LaurentPoly::constant(arity, 1);
    int sign = 1;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (a[k][k].is_zero()) {
            std::size_t p = k + 1;
            while (p < n && a[p][k].is_zero()) ++p;
            if (p == n) return LaurentPoly(arity);
            std::swap(a[k], a[p]);
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i) {
            for (std::size_t j = k + 1; j < n; ++j) {
                LaurentPoly num = a[i][j] * a[k][k] - a[i][k] * a[k][j];
                a[i][j] = exact_quotient(num, prev);
            }
            a[i][k] = LaurentPoly(arity);
        }
        prev = a[k][k];
    }
    LaurentPoly det = a[n - 1][n - 1];
    return sign < 0 ? -det : det;
}

std::vector<std::string> variable_names(int arity) {
    if (arity == 1) return {"t"};
    if (arity == 2) return {"s", "t"};
    if (arity == 3) return {"s", "t", "u"};
    std::vector<std::string> names;
    for (int i = 1; i <= arity; ++i) names.push_back("t" + std::to_string(i));
    return names;
}

std::string LaurentPoly::to_string() const {
    if (terms_.empty()) return "0";
    auto names = variable_names(arity_);
    // Display order: total degree descending, then lex descending.
    std::vector<std::pair<Monomial, Int>> items(terms_.begin(), terms_.end());
    std::sort(items.begin(), items.end(), [](const auto& a, const auto& b) {
        long da = 0, db = 0;
        for (int e : a.first) da += e;
        for (int e : b.first) db += e;
        if (da != db) return da > db;
        return a.first > b.first;
    });
    std::ostringstream os;
    bool first = true;
    for (const auto& [m, c] : items) {
        Int ac = c < 0 ? Int(-c) : c;
        if (first) {
            if (c < 0) os << "-";
            first = false;
        } else {
            os << (c < 0 ? " - " : " + ");
        }
        bool all_zero = std::all_of(m.begin(), m.end(), [](int e) { return e == 0; });
        if (ac != 1 || all_zero) os << ac.str();
        for (int i = 0; i < arity_; ++i) {
            if (m[i] == 0) continue;
            os << names[i];
            if (m[i] != 1) os << "^" << m[i];
        }
    }
    return os.str();
}

std::string LaurentPoly::machine_string() const {
    std::ostringstream os;
    for (const auto& [m, c] : terms_) {
        for (int i = 0; i < arity_; ++i) {
            if (i) os << ",";
            os << m[i];
        }
        os << ":" << c.str() << "\n";
    }
    return os.str();
}

namespace {

int var_index(const std::string& name, int arity) {
    auto names = variable_names(arity);
    for (int i = 0; i < arity; ++i)
        if (names[i] == name) return i;
    throw std::invalid_argument("unknown variable '" + name + "'");
}

}  // namespace

LaurentPoly LaurentPoly::parse(const std::string& text, int arity) {
    LaurentPoly out(arity);
    std::size_t i = 0;
    auto skip_ws = [&] {
        while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
    };
    skip_ws();
    if (i == text.size()) throw std::invalid_argument("empty polynomial");
    bool any = false;
    while (true) {
        skip_ws();
        if (i == text.size()) break;
        int sign = 1;
        if (text[i] == '+' || text[i] == '-') {
            if (text[i] == '-') sign = -1;
            ++i;
            skip_ws();
        } else if (any) {
            throw std::invalid_argument("expected '+' or '-' between terms");
        }
        Int coeff = 1;
        bool saw_digits = false;
        if (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) {
            std::string num;
            while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) num += text[i++];
            coeff = Int(num);
            saw_digits = true;
        }
        Monomial m(arity, 0);
        bool saw_var = false;
        while (true) {
            skip_ws();
            if (i < text.size() && text[i] == '*') {
                ++i;
                skip_ws();
            }
            if (i >= text.size() || !std::isalpha(static_cast<unsigned char>(text[i]))) break;
            std::string name(1, text[i++]);
            while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) name += text[i++];
            int exp = 1;
            if (i < text.size() && text[i] == '^') {
                ++i;
                int esign = 1;
                if (i < text.size() && (text[i] == '-' || text[i] == '+')) {
                    if (text[i] == '-') esign = -1;
                    ++i;
                }
                if (i >= text.size() || !std::isdigit(static_cast<unsigned char>(text[i])))
                    throw std::invalid_argument("malformed exponent");
                std::string num;
                while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) num += text[i++];
                exp = esign * std::stoi(num);
            }
            m[var_index(name, arity)] += exp;
            saw_var = true;
        }
        if (!saw_digits && !saw_var) throw std::invalid_argument("malformed term");
        out.add_term(m, sign * coeff);
        any = true;
    }
    if (!any) throw std::invalid_argument("empty polynomial");
    return out;
}

}  // namespace splitbound
