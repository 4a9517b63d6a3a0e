#include "orbcdga/poly.hpp"

#include <algorithm>
#include <sstream>

#include "orbcdga/errors.hpp"

namespace orbcdga {

long total_degree(const Exps& e) {
    long d = 0;
    for (int x : e) d += x;
    return d;
}

bool GrlexLess::operator()(const Exps& a, const Exps& b) const {
    long da = total_degree(a), db = total_degree(b);
    if (da != db) return da < db;
    return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
}

MultiPoly MultiPoly::constant(std::vector<std::string> vars, const Rat& c) {
    MultiPoly p(std::move(vars));
    p.add_term(Exps(p.vars_.size(), 0), c);
    return p;
}

MultiPoly MultiPoly::variable(std::vector<std::string> vars, std::size_t idx,
                              int exp) {
    MultiPoly p(std::move(vars));
    if (idx >= p.vars_.size()) throw InputError("MultiPoly: variable index out of range");
    Exps e(p.vars_.size(), 0);
    e[idx] = exp;
    p.add_term(e, Rat(1));
    return p;
}

bool MultiPoly::is_constant() const {
    if (terms_.empty()) return true;
    return terms_.size() == 1 && total_degree(terms_.begin()->first) == 0;
}

Rat MultiPoly::constant_term() const {
    Exps zero(vars_.size(), 0);
    auto it = terms_.find(zero);
    return it == terms_.end() ? Rat(0) : it->second;
}

void MultiPoly::add_term(const Exps& e, const Rat& c) {
    if (e.size() != vars_.size()) throw InputError("MultiPoly: exponent arity mismatch");
    if (c == 0) return;
    auto [it, inserted] = terms_.emplace(e, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

const Exps& MultiPoly::leading_exps() const {
    if (terms_.empty()) throw VerificationError("leading term of zero polynomial");
    return terms_.rbegin()->first;
}

const Rat& MultiPoly::leading_coeff() const {
    if (terms_.empty()) throw VerificationError("leading term of zero polynomial");
    return terms_.rbegin()->second;
}

namespace {
void check_same_ring(const MultiPoly& a, const MultiPoly& b) {
    if (a.vars() != b.vars())
        throw InputError("MultiPoly: mixed variable lists");
}
}  // namespace

MultiPoly operator+(const MultiPoly& a, const MultiPoly& b) {
    check_same_ring(a, b);
    MultiPoly r = a;
    for (const auto& [e, c] : b.terms()) r.add_term(e, c);
    return r;
}

MultiPoly operator-(const MultiPoly& a, const MultiPoly& b) {
    check_same_ring(a, b);
    MultiPoly r = a;
    for (const auto& [e, c] : b.terms()) r.add_term(e, -c);
    return r;
}

MultiPoly operator-(const MultiPoly& a) {
    MultiPoly r(a.vars());
    for (const auto& [e, c] : a.terms()) r.add_term(e, -c);
    return r;
}

MultiPoly operator*(const MultiPoly& a, const MultiPoly& b) {
    check_same_ring(a, b);
    MultiPoly r(a.vars());
    for (const auto& [ea, ca] : a.terms()) {
        for (const auto& [eb, cb] : b.terms()) {
            Exps e(ea.size());
            for (std::size_t i = 0; i < e.size(); ++i) e[i] = ea[i] + eb[i];
            r.add_term(e, ca * cb);
        }
    }
    return r;
}

MultiPoly scale(const MultiPoly& a, const Rat& c) {
    MultiPoly r(a.vars());
    if (c == 0) return r;
    for (const auto& [e, k] : a.terms()) r.add_term(e, k * c);
    return r;
}

MultiPoly poly_pow(const MultiPoly& a, long n) {
    if (n < 0) throw InputError("poly_pow: negative exponent");
    MultiPoly result = MultiPoly::constant(a.vars(), Rat(1));
    MultiPoly base = a;
    while (n > 0) {
        if (n & 1) result = result * base;
        base = base * base;
        n >>= 1;
    }
    return result;
}

MultiPoly substitute(const MultiPoly& f, const std::vector<MultiPoly>& images) {
    if (images.size() != f.vars().size())
        throw InputError("substitute: image count mismatch");
    std::vector<std::string> target_vars =
        images.empty() ? f.vars() : images.front().vars();
    MultiPoly r(target_vars);
    for (const auto& [e, c] : f.terms()) {
        MultiPoly term = MultiPoly::constant(target_vars, c);
        for (std::size_t i = 0; i < e.size(); ++i)
            if (e[i] != 0) term = term * poly_pow(images[i], e[i]);
        r = r + term;
    }
    return r;
}

MultiPoly extend_vars(const MultiPoly& f, const std::vector<std::string>& vars) {
    std::vector<std::size_t> pos(f.vars().size());
    for (std::size_t i = 0; i < f.vars().size(); ++i) {
        auto it = std::find(vars.begin(), vars.end(), f.vars()[i]);
        if (it == vars.end())
            throw InputError("extend_vars: " + f.vars()[i] + " missing from target list");
        pos[i] = static_cast<std::size_t>(it - vars.begin());
    }
    MultiPoly r(vars);
    for (const auto& [e, c] : f.terms()) {
        Exps e2(vars.size(), 0);
        for (std::size_t i = 0; i < e.size(); ++i) e2[pos[i]] = e[i];
        r.add_term(e2, c);
    }
    return r;
}

std::string to_string(const MultiPoly& f) {
    if (f.is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    // print leading term first
    for (auto it = f.terms().rbegin(); it != f.terms().rend(); ++it) {
        const auto& [e, c] = *it;
        Rat a = c;
        if (!first) {
            os << (a < 0 ? " - " : " + ");
            if (a < 0) a = -a;
        }
        first = false;
        bool unit_coeff = (a == 1);
        bool has_vars = total_degree(e) > 0;
        if (!unit_coeff || !has_vars) os << a;
        bool started = !unit_coeff || !has_vars;
        for (std::size_t i = 0; i < e.size(); ++i) {
            if (e[i] == 0) continue;
            if (started) os << "*";
            os << f.vars()[i];
            if (e[i] != 1) os << "^" << e[i];
            started = true;
        }
    }
    return os.str();
}

}  // namespace orbcdga
