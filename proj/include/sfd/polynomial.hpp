#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <map>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace sfd {

// Variables are X1..X9; box enumeration beyond four variables is infeasible
// anyway, so the cap costs nothing and keeps exponent vectors small.
inline constexpr int kMaxArity = 9;

// Exponent vector of a single term. Its length always equals the owning
// polynomial's arity.
class Monomial {
public:
    Monomial() = default;
    explicit Monomial(std::vector<std::uint32_t> exponents) : exps_(std::move(exponents)) {}

    static Monomial unit(int arity) { return Monomial(std::vector<std::uint32_t>(arity, 0)); }

    int arity() const { return static_cast<int>(exps_.size()); }
    // var is 1-based, matching the X1..X9 naming.
    std::uint32_t exponent(int var) const { return exps_[var - 1]; }
    const std::vector<std::uint32_t>& exponents() const { return exps_; }

    std::uint64_t total_degree() const;
    bool is_unit() const;

    bool divides(const Monomial& other) const;
    Monomial operator*(const Monomial& other) const;
    // Componentwise difference; caller must ensure other.divides(*this).
    Monomial operator/(const Monomial& other) const;

    bool operator==(const Monomial& other) const = default;

private:
    std::vector<std::uint32_t> exps_;
};

// Canonical term order: graded-lexicographic, descending. Higher total degree
// first; ties broken by the lexicographically larger exponent vector. Keeping
// the term map in this order makes printing and leading-term selection
// deterministic.
struct GrlexDescending {
    bool operator()(const Monomial& a, const Monomial& b) const;
};

// Sparse multivariate polynomial with arbitrary-precision integer
// coefficients. Immutable in spirit: all operations return new values, so
// instances are safe to share across threads.
//
// Invariants: no stored coefficient is zero; no two terms share an exponent
// vector; the zero polynomial has an empty term map.
class Polynomial {
public:
    using TermMap = std::map<Monomial, mpz_class, GrlexDescending>;

    // Zero polynomial of the given arity.
    explicit Polynomial(int arity = 1);

    static Polynomial constant(mpz_class value, int arity = 1);
    // X_index (1-based) as a polynomial of the given arity.
    static Polynomial variable(int index, int arity);
    static Polynomial from_terms(int arity, std::vector<std::pair<Monomial, mpz_class>> terms);

    int arity() const { return arity_; }
    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const;
    std::size_t term_count() const { return terms_.size(); }
    const TermMap& terms() const { return terms_; }

    std::uint64_t total_degree() const;  // 0 for constants and for the zero polynomial
    std::uint32_t degree_in(int var) const;
    // Coefficient of the first term in canonical order; 0 for the zero polynomial.
    const mpz_class& leading_coefficient() const;
    mpz_class coefficient(const Monomial& m) const;

    // Accumulates c * m into the term map, erasing the entry if it cancels.
    void add_term(const Monomial& m, const mpz_class& c);

    Polynomial operator-() const;
    Polynomial operator+(const Polynomial& other) const;
    Polynomial operator-(const Polynomial& other) const;
    Polynomial operator*(const Polynomial& other) const;
    Polynomial operator*(const mpz_class& scalar) const;
    Polynomial pow(std::uint32_t exponent) const;
    bool operator==(const Polynomial& other) const = default;

    // Formal partial derivative with respect to X_var (1-based).
    Polynomial derivative(int var) const;

    // gcd of all coefficients, >= 0; 0 for the zero polynomial.
    mpz_class content() const;
    // P / content, sign-normalized so the leading coefficient is positive.
    // Note P == +-content() * primitive_part(); the sign is dropped.
    Polynomial primitive_part() const;

    // Same terms viewed in a larger arity (exponent vectors padded with zeros).
    Polynomial extended_to(int new_arity) const;

    // P(subs[0], ..., subs[s-1]); all substituents must share one arity.
    Polynomial substituted(const std::vector<Polynomial>& subs) const;
    // P(X1 + c1, ..., Xs + cs).
    Polynomial shifted(std::span<const mpz_class> offsets) const;

    // Exact evaluation; point.size() must equal arity().
    mpz_class evaluate(std::span<const mpz_class> point) const;
    // evaluate(point) mod m, all intermediates reduced; result in [0, m).
    mpz_class evaluate_mod(std::span<const mpz_class> point, const mpz_class& m) const;

    // Canonical text form, e.g. "x1^2 + x1*x2 - 3". Parses back to the same
    // term map.
    std::string to_string() const;

private:
    int arity_;
    TermMap terms_;
};

inline Polynomial operator*(const mpz_class& scalar, const Polynomial& p) { return p * scalar; }

inline std::string to_canonical_string(const Polynomial& p) { return p.to_string(); }

}  // namespace sfd
