// Exact arithmetic in Q(a): reduced fractions of integer-coefficient
// univariate polynomials in one formal parameter `a`.
#ifndef HOPFYB_SCALAR_HPP
#define HOPFYB_SCALAR_HPP

#include <gmpxx.h>

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace hopfyb {

struct parse_error : std::runtime_error {
    std::size_t offset;
    parse_error(const std::string& what, std::size_t off)
        : std::runtime_error(what + " (at byte " + std::to_string(off) + ")"), offset(off) {}
};

struct zero_division_error : std::runtime_error {
    std::string operand;  // printed form of the offending value
    explicit zero_division_error(std::string op)
        : std::runtime_error("division by zero (operand " + op + ")"), operand(std::move(op)) {}
};

struct pole_error : std::runtime_error {
    mpq_class point;
    explicit pole_error(const mpq_class& v)
        : std::runtime_error("denominator vanishes at a = " + v.get_str()), point(v) {}
};

// Integer-coefficient polynomial in `a`. Coefficients ascending by power,
// no trailing zeros; the zero polynomial is the empty vector.
class Poly {
  public:
    Poly() = default;
    explicit Poly(const mpz_class& c);
    explicit Poly(std::vector<mpz_class> coeffs);
    static Poly variable();

    bool is_zero() const { return c_.empty(); }
    bool is_one() const { return c_.size() == 1 && c_[0] == 1; }
    int degree() const { return static_cast<int>(c_.size()) - 1; }  // -1 for zero
    const mpz_class& lc() const { return c_.back(); }
    const std::vector<mpz_class>& coeffs() const { return c_; }
    mpz_class coeff(std::size_t k) const { return k < c_.size() ? c_[k] : mpz_class(0); }

    mpz_class content() const;  // gcd of coefficients, >= 0
    Poly primitive_part() const;

    Poly operator+(const Poly& o) const;
    Poly operator-(const Poly& o) const;
    Poly operator*(const Poly& o) const;
    Poly operator-() const;
    Poly mul_scalar(const mpz_class& k) const;
    Poly div_exact(const Poly& d) const;  // requires exact divisibility

    mpq_class eval(const mpq_class& v) const;

    bool operator==(const Poly& o) const { return c_ == o.c_; }
    bool operator!=(const Poly& o) const { return c_ != o.c_; }

  private:
    std::vector<mpz_class> c_;
    void trim();
};

// gcd of the primitive parts over Z[a]; result primitive with positive lc.
Poly poly_gcd(const Poly& x, const Poly& y);

// Element of Q(a) in canonical form: numerator/denominator integer
// polynomials with unit polynomial gcd, coprime integer contents, and
// positive leading coefficient in the denominator.
class Scalar {
  public:
    Scalar() : num_(), den_(mpz_class(1)) {}  // zero
    Scalar(long v) : num_(v == 0 ? Poly() : Poly(mpz_class(v))), den_(mpz_class(1)) {}
    Scalar(long num, long den);
    explicit Scalar(const mpq_class& q);
    static Scalar parameter();  // the formal parameter a
    static Scalar make(Poly num, Poly den);

    bool is_zero() const { return num_.is_zero(); }
    bool is_one() const { return num_.is_one() && den_.is_one(); }
    bool is_constant() const { return num_.degree() <= 0 && den_.degree() <= 0; }

    Scalar operator+(const Scalar& o) const;
    Scalar operator-(const Scalar& o) const;
    Scalar operator*(const Scalar& o) const;
    Scalar operator/(const Scalar& o) const;
    Scalar operator-() const;
    Scalar& operator+=(const Scalar& o) { return *this = *this + o; }
    Scalar& operator-=(const Scalar& o) { return *this = *this - o; }
    Scalar& operator*=(const Scalar& o) { return *this = *this * o; }
    Scalar inverse() const;

    bool operator==(const Scalar& o) const { return num_ == o.num_ && den_ == o.den_; }
    bool operator!=(const Scalar& o) const { return !(*this == o); }

    const Poly& num() const { return num_; }
    const Poly& den() const { return den_; }

    std::string str() const;
    mpq_class eval(const mpq_class& v) const;
    Scalar substitute(const Scalar& v) const;  // a := v, exact

  private:
    Poly num_, den_;
    Scalar(Poly n, Poly d, int /*canonical_tag*/) : num_(std::move(n)), den_(std::move(d)) {}
};

// Parses the scalar grammar:
//   expr   := ('+'|'-')? term (('+'|'-') term)*
//   term   := factor ('*' factor)*
//   factor := atom ('^' uint)? ('/' '(' expr ')')?
//           | '(' expr ')' ('^' uint)? ('/' '(' expr ')')?
//   atom   := uint | uint '/' uint | 'a'
// Whitespace is ignored.
Scalar parse_scalar(std::string_view text);

inline std::string to_string(const Scalar& s) { return s.str(); }

}  // namespace hopfyb

#endif
