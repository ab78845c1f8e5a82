#include "sfd/polynomial.hpp"

#include <algorithm>
#include <stdexcept>

namespace sfd {

std::uint64_t Monomial::total_degree() const {
    std::uint64_t d = 0;
    for (std::uint32_t e : exps_) d += e;
    return d;
}

bool Monomial::is_unit() const {
    return std::all_of(exps_.begin(), exps_.end(), [](std::uint32_t e) { return e == 0; });
}

bool Monomial::divides(const Monomial& other) const {
    if (exps_.size() != other.exps_.size()) return false;
    for (std::size_t i = 0; i < exps_.size(); ++i)
        if (exps_[i] > other.exps_[i]) return false;
    return true;
}

Monomial Monomial::operator*(const Monomial& other) const {
    std::vector<std::uint32_t> e(exps_);
    for (std::size_t i = 0; i < e.size(); ++i) e[i] += other.exps_[i];
    return Monomial(std::move(e));
}

Monomial Monomial::operator/(const Monomial& other) const {
    std::vector<std::uint32_t> e(exps_);
    for (std::size_t i = 0; i < e.size(); ++i) e[i] -= other.exps_[i];
    return Monomial(std::move(e));
}

bool GrlexDescending::operator()(const Monomial& a, const Monomial& b) const {
    std::uint64_t da = a.total_degree(), db = b.total_degree();
    if (da != db) return da > db;
    return a.exponents() > b.exponents();
}

Polynomial::Polynomial(int arity) : arity_(arity) {
    if (arity < 1 || arity > kMaxArity)
        throw std::invalid_argument("polynomial arity must be in [1, " +
                                    std::to_string(kMaxArity) + "]");
}

Polynomial Polynomial::constant(mpz_class value, int arity) {
    Polynomial p(arity);
    if (value != 0) p.terms_.emplace(Monomial::unit(arity), std::move(value));
    return p;
}

Polynomial Polynomial::variable(int index, int arity) {
    Polynomial p(arity);
    if (index < 1 || index > arity) throw std::invalid_argument("variable index out of range");
    std::vector<std::uint32_t> e(arity, 0);
    e[index - 1] = 1;
    p.terms_.emplace(Monomial(std::move(e)), mpz_class(1));
    return p;
}

Polynomial Polynomial::from_terms(int arity, std::vector<std::pair<Monomial, mpz_class>> terms) {
    Polynomial p(arity);
    for (auto& [m, c] : terms) p.add_term(m, c);
    return p;
}

bool Polynomial::is_constant() const {
    return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.is_unit());
}

std::uint64_t Polynomial::total_degree() const {
    // First term has maximal degree in graded order.
    return terms_.empty() ? 0 : terms_.begin()->first.total_degree();
}

std::uint32_t Polynomial::degree_in(int var) const {
    if (var < 1 || var > arity_) throw std::invalid_argument("variable index out of range");
    std::uint32_t d = 0;
    for (const auto& [m, c] : terms_) d = std::max(d, m.exponent(var));
    return d;
}

const mpz_class& Polynomial::leading_coefficient() const {
    static const mpz_class zero(0);
    return terms_.empty() ? zero : terms_.begin()->second;
}

mpz_class Polynomial::coefficient(const Monomial& m) const {
    auto it = terms_.find(m);
    return it == terms_.end() ? mpz_class(0) : it->second;
}

void Polynomial::add_term(const Monomial& m, const mpz_class& c) {
    if (m.arity() != arity_) throw std::invalid_argument("monomial arity mismatch");
    if (c == 0) return;
    auto [it, inserted] = terms_.emplace(m, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

Polynomial Polynomial::operator-() const {
    Polynomial r(arity_);
    for (const auto& [m, c] : terms_) r.terms_.emplace(m, -c);
    return r;
}

Polynomial Polynomial::operator+(const Polynomial& other) const {
    if (arity_ != other.arity_) throw std::invalid_argument("arity mismatch");
    Polynomial r(*this);
    for (const auto& [m, c] : other.terms_) r.add_term(m, c);
    return r;
}

Polynomial Polynomial::operator-(const Polynomial& other) const {
    if (arity_ != other.arity_) throw std::invalid_argument("arity mismatch");
    Polynomial r(*this);
    for (const auto& [m, c] : other.terms_) r.add_term(m, -c);
    return r;
}

Polynomial Polynomial::operator*(const Polynomial& other) const {
    if (arity_ != other.arity_) throw std::invalid_argument("arity mismatch");
    Polynomial r(arity_);
    for (const auto& [ma, ca] : terms_)
        for (const auto& [mb, cb] : other.terms_) r.add_term(ma * mb, ca * cb);
    return r;
}

Polynomial Polynomial::operator*(const mpz_class& scalar) const {
    Polynomial r(arity_);
    if (scalar == 0) return r;
    for (const auto& [m, c] : terms_) r.terms_.emplace(m, c * scalar);
    return r;
}

Polynomial Polynomial::pow(std::uint32_t exponent) const {
    Polynomial result = constant(1, arity_);
    Polynomial base(*this);
    while (exponent > 0) {
        if (exponent & 1u) result = result * base;
        exponent >>= 1u;
        if (exponent > 0) base = base * base;
    }
    return result;
}

Polynomial Polynomial::derivative(int var) const {
    if (var < 1 || var > arity_) throw std::invalid_argument("variable index out of range");
    Polynomial r(arity_);
    for (const auto& [m, c] : terms_) {
        std::uint32_t e = m.exponent(var);
        if (e == 0) continue;
        std::vector<std::uint32_t> exps = m.exponents();
        exps[var - 1] = e - 1;
        r.add_term(Monomial(std::move(exps)), c * e);
    }
    return r;
}

mpz_class Polynomial::content() const {
    mpz_class g(0);
    for (const auto& [m, c] : terms_) {
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
        if (g == 1) break;
    }
    return g;
}

Polynomial Polynomial::primitive_part() const {
    if (terms_.empty()) return Polynomial(arity_);
    mpz_class c = content();
    if (leading_coefficient() < 0) c = -c;
    Polynomial r(arity_);
    for (const auto& [m, coeff] : terms_) {
        mpz_class q;
        mpz_divexact(q.get_mpz_t(), coeff.get_mpz_t(), c.get_mpz_t());
        r.terms_.emplace(m, std::move(q));
    }
    return r;
}

Polynomial Polynomial::extended_to(int new_arity) const {
    if (new_arity < arity_) throw std::invalid_argument("cannot shrink arity");
    if (new_arity == arity_) return *this;
    Polynomial r(new_arity);
    for (const auto& [m, c] : terms_) {
        std::vector<std::uint32_t> e = m.exponents();
        e.resize(new_arity, 0);
        r.terms_.emplace(Monomial(std::move(e)), c);
    }
    return r;
}

Polynomial Polynomial::substituted(const std::vector<Polynomial>& subs) const {
    if (static_cast<int>(subs.size()) != arity_)
        throw std::invalid_argument("substitution arity mismatch");
    int out_arity = subs.empty() ? 1 : subs[0].arity();
    for (const Polynomial& s : subs)
        if (s.arity() != out_arity) throw std::invalid_argument("substituents must share arity");

    // Dense power cache per variable, up to its degree in this polynomial.
    std::vector<std::vector<Polynomial>> powers(arity_);
    for (int v = 1; v <= arity_; ++v) {
        std::uint32_t d = degree_in(v);
        auto& cache = powers[v - 1];
        cache.reserve(d + 1);
        cache.push_back(constant(1, out_arity));
        for (std::uint32_t e = 1; e <= d; ++e) cache.push_back(cache.back() * subs[v - 1]);
    }

    Polynomial result(out_arity);
    for (const auto& [m, c] : terms_) {
        Polynomial term = constant(c, out_arity);
        for (int v = 1; v <= arity_; ++v) {
            std::uint32_t e = m.exponent(v);
            if (e > 0) term = term * powers[v - 1][e];
        }
        result = result + term;
    }
    return result;
}

Polynomial Polynomial::shifted(std::span<const mpz_class> offsets) const {
    if (static_cast<int>(offsets.size()) != arity_)
        throw std::invalid_argument("shift arity mismatch");
    std::vector<Polynomial> subs;
    subs.reserve(arity_);
    for (int v = 1; v <= arity_; ++v)
        subs.push_back(variable(v, arity_) + constant(offsets[v - 1], arity_));
    return substituted(subs);
}

mpz_class Polynomial::evaluate(std::span<const mpz_class> point) const {
    if (static_cast<int>(point.size()) != arity_)
        throw std::invalid_argument("evaluation point arity mismatch");

    std::vector<std::vector<mpz_class>> powers(arity_);
    for (int v = 1; v <= arity_; ++v) {
        std::uint32_t d = degree_in(v);
        auto& cache = powers[v - 1];
        cache.reserve(d + 1);
        cache.emplace_back(1);
        for (std::uint32_t e = 1; e <= d; ++e) cache.push_back(cache.back() * point[v - 1]);
    }

    mpz_class acc(0), term;
    for (const auto& [m, c] : terms_) {
        term = c;
        for (int v = 1; v <= arity_; ++v) {
            std::uint32_t e = m.exponent(v);
            if (e > 0) term *= powers[v - 1][e];
        }
        acc += term;
    }
    return acc;
}

mpz_class Polynomial::evaluate_mod(std::span<const mpz_class> point, const mpz_class& m) const {
    if (static_cast<int>(point.size()) != arity_)
        throw std::invalid_argument("evaluation point arity mismatch");
    if (m < 2) throw std::invalid_argument("modulus must be >= 2");

    std::vector<std::vector<mpz_class>> powers(arity_);
    for (int v = 1; v <= arity_; ++v) {
        std::uint32_t d = degree_in(v);
        auto& cache = powers[v - 1];
        cache.reserve(d + 1);
        cache.emplace_back(1);
        mpz_class reduced;
        mpz_fdiv_r(reduced.get_mpz_t(), point[v - 1].get_mpz_t(), m.get_mpz_t());
        for (std::uint32_t e = 1; e <= d; ++e) {
            mpz_class next = cache.back() * reduced;
            mpz_fdiv_r(next.get_mpz_t(), next.get_mpz_t(), m.get_mpz_t());
            cache.push_back(std::move(next));
        }
    }

    mpz_class acc(0), term;
    for (const auto& [mono, c] : terms_) {
        mpz_fdiv_r(term.get_mpz_t(), c.get_mpz_t(), m.get_mpz_t());
        for (int v = 1; v <= arity_; ++v) {
            std::uint32_t e = mono.exponent(v);
            if (e > 0) {
                term *= powers[v - 1][e];
                mpz_fdiv_r(term.get_mpz_t(), term.get_mpz_t(), m.get_mpz_t());
            }
        }
        acc += term;
        if (acc >= m) acc -= m;
    }
    return acc;
}

std::string Polynomial::to_string() const {
    if (terms_.empty()) return "0";
    std::string out;
    bool first = true;
    for (const auto& [m, c] : terms_) {
        bool negative = c < 0;
        if (first) {
            if (negative) out += "-";
        } else {
            out += negative ? " - " : " + ";
        }
        first = false;

        mpz_class a = abs(c);
        if (m.is_unit()) {
            out += a.get_str();
            continue;
        }
        bool printed = false;
        if (a != 1) {
            out += a.get_str();
            printed = true;
        }
        for (int v = 1; v <= arity_; ++v) {
            std::uint32_t e = m.exponent(v);
            if (e == 0) continue;
            if (printed) out += "*";
            out += "x" + std::to_string(v);
            if (e > 1) out += "^" + std::to_string(e);
            printed = true;
        }
    }
    return out;
}

}  // namespace sfd
