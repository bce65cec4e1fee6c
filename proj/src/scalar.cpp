#include "hopfyb/scalar.hpp"

#include <cctype>
#include <utility>

namespace hopfyb {

Poly::Poly(const mpz_class& c) {
    if (c != 0) c_.push_back(c);
}

Poly::Poly(std::vector<mpz_class> coeffs) : c_(std::move(coeffs)) { trim(); }

Poly Poly::variable() {
    Poly p;
    p.c_ = {mpz_class(0), mpz_class(1)};
    return p;
}

void Poly::trim() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

mpz_class Poly::content() const {
    mpz_class g = 0;
    for (const auto& c : c_) {
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
        if (g == 1) break;
    }
    return g;
}

Poly Poly::primitive_part() const {
    if (is_zero()) return *this;
    mpz_class g = content();
    if (g == 1) return *this;
    Poly r = *this;
    for (auto& c : r.c_) mpz_divexact(c.get_mpz_t(), c.get_mpz_t(), g.get_mpz_t());
    return r;
}

Poly Poly::operator+(const Poly& o) const {
    Poly r;
    r.c_.resize(std::max(c_.size(), o.c_.size()));
    for (std::size_t i = 0; i < r.c_.size(); ++i) {
        if (i < c_.size()) r.c_[i] += c_[i];
        if (i < o.c_.size()) r.c_[i] += o.c_[i];
    }
    r.trim();
    return r;
}

Poly Poly::operator-(const Poly& o) const { return *this + (-o); }

Poly Poly::operator-() const {
    Poly r = *this;
    for (auto& c : r.c_) c = -c;
    return r;
}

Poly Poly::mul_scalar(const mpz_class& k) const {
    if (k == 0) return Poly();
    Poly r = *this;
    for (auto& c : r.c_) c *= k;
    return r;
}

Poly Poly::operator*(const Poly& o) const {
    if (is_zero() || o.is_zero()) return Poly();
    Poly r;
    r.c_.assign(c_.size() + o.c_.size() - 1, mpz_class(0));
    for (std::size_t i = 0; i < c_.size(); ++i)
        for (std::size_t j = 0; j < o.c_.size(); ++j) r.c_[i + j] += c_[i] * o.c_[j];
    r.trim();
    return r;
}

Poly Poly::div_exact(const Poly& d) const {
    if (d.is_zero()) throw zero_division_error("0");
    if (is_zero()) return Poly();
    if (degree() < d.degree()) throw std::logic_error("div_exact: divisor degree exceeds dividend");
    // long division; remainder must come out zero
    std::vector<mpz_class> rem = c_;
    int dd = d.degree();
    std::vector<mpz_class> q(c_.size() - d.c_.size() + 1, mpz_class(0));
    for (int k = static_cast<int>(rem.size()) - 1 - dd; k >= 0; --k) {
        mpz_class t;
        mpz_divexact(t.get_mpz_t(), rem[k + dd].get_mpz_t(), d.lc().get_mpz_t());
        q[k] = t;
        for (int i = 0; i <= dd; ++i) rem[k + i] -= t * d.c_[i];
    }
    return Poly(std::move(q));
}

mpq_class Poly::eval(const mpq_class& v) const {
    mpq_class acc = 0;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * v + mpq_class(*it);
    return acc;
}

namespace {

// pseudo-remainder of a by b (b nonzero, deg a >= deg b)
Poly prem(const Poly& a, const Poly& b) {
    Poly r = a;
    const int db = b.degree();
    while (!r.is_zero() && r.degree() >= db) {
        int shift = r.degree() - db;
        mpz_class t = r.lc();
        // r := lc(b)*r - lc(r)*x^shift*b
        Poly scaled = b.mul_scalar(t);
        std::vector<mpz_class> sh(static_cast<std::size_t>(shift), mpz_class(0));
        for (const auto& c : scaled.coeffs()) sh.push_back(c);
        r = r.mul_scalar(b.lc()) - Poly(std::move(sh));
    }
    return r;
}

}  // namespace

Poly poly_gcd(const Poly& x, const Poly& y) {
    Poly a = x.primitive_part(), b = y.primitive_part();
    if (a.is_zero()) std::swap(a, b);
    if (b.is_zero()) {
        if (a.is_zero()) return a;
        return a.lc() < 0 ? -a : a;
    }
    if (a.degree() < b.degree()) std::swap(a, b);
    while (!b.is_zero()) {
        Poly r = prem(a, b).primitive_part();
        a = std::move(b);
        b = std::move(r);
    }
    return a.lc() < 0 ? -a : a;
}

Scalar Scalar::make(Poly num, Poly den) {
    if (den.is_zero()) throw zero_division_error(Scalar(std::move(num), Poly(mpz_class(1)), 0).str());
    if (num.is_zero()) return Scalar(Poly(), Poly(mpz_class(1)), 0);
    Poly g = poly_gcd(num, den);
    if (g.degree() > 0) {
        // primitive gcd of primitive parts divides both over Z[a] up to content
        mpz_class cn = num.content(), cd = den.content();
        num = num.primitive_part().div_exact(g).mul_scalar(cn);
        den = den.primitive_part().div_exact(g).mul_scalar(cd);
    }
    mpz_class cn = num.content(), cd = den.content(), cg;
    mpz_gcd(cg.get_mpz_t(), cn.get_mpz_t(), cd.get_mpz_t());
    if (cg > 1) {
        num = num.div_exact(Poly(cg));
        den = den.div_exact(Poly(cg));
    }
    if (den.lc() < 0) {
        num = -num;
        den = -den;
    }
    return Scalar(std::move(num), std::move(den), 0);
}

Scalar::Scalar(long num, long den) { *this = make(Poly(mpz_class(num)), Poly(mpz_class(den))); }

Scalar::Scalar(const mpq_class& q) {
    *this = make(Poly(mpz_class(q.get_num())), Poly(mpz_class(q.get_den())));
}

Scalar Scalar::parameter() { return Scalar(Poly::variable(), Poly(mpz_class(1)), 0); }

Scalar Scalar::operator+(const Scalar& o) const {
    if (is_zero()) return o;
    if (o.is_zero()) return *this;
    if (den_.is_one() && o.den_.is_one()) return Scalar(num_ + o.num_, den_, 0);
    return make(num_ * o.den_ + o.num_ * den_, den_ * o.den_);
}

Scalar Scalar::operator-(const Scalar& o) const { return *this + (-o); }

Scalar Scalar::operator-() const {
    Scalar r = *this;
    r.num_ = -r.num_;
    return r;
}

Scalar Scalar::operator*(const Scalar& o) const {
    if (is_zero() || o.is_zero()) return Scalar();
    if (den_.is_one() && o.den_.is_one()) {
        // product of canonical integral fractions stays canonical
        return Scalar(num_ * o.num_, den_, 0);
    }
    return make(num_ * o.num_, den_ * o.den_);
}

Scalar Scalar::inverse() const {
    if (is_zero()) throw zero_division_error(str());
    return make(den_, num_);
}

Scalar Scalar::operator/(const Scalar& o) const {
    if (o.is_zero()) throw zero_division_error(o.str());
    if (is_zero()) return Scalar();
    return make(num_ * o.den_, den_ * o.num_);
}

mpq_class Scalar::eval(const mpq_class& v) const {
    mpq_class d = den_.eval(v);
    if (d == 0) throw pole_error(v);
    mpq_class r = num_.eval(v) / d;
    r.canonicalize();
    return r;
}

Scalar Scalar::substitute(const Scalar& v) const {
    Scalar n, d, p(1);
    for (const auto& c : num_.coeffs()) {
        n += p * Scalar(mpq_class(c));
        p = p * v;
    }
    p = Scalar(1);
    for (const auto& c : den_.coeffs()) {
        d += p * Scalar(mpq_class(c));
        p = p * v;
    }
    if (d.is_zero()) throw zero_division_error(str());
    return n / d;
}

namespace {

std::string poly_str(const Poly& p) {
    if (p.is_zero()) return "0";
    std::string out;
    for (int k = p.degree(); k >= 0; --k) {
        mpz_class c = p.coeff(static_cast<std::size_t>(k));
        if (c == 0) continue;
        bool neg = c < 0;
        mpz_class mag = neg ? mpz_class(-c) : c;
        if (out.empty()) {
            if (neg) out += '-';
        } else {
            out += neg ? '-' : '+';
        }
        if (k == 0) {
            out += mag.get_str();
        } else {
            if (mag != 1) {
                out += mag.get_str();
                out += '*';
            }
            out += (k == 1) ? "a" : "a^" + std::to_string(k);
        }
    }
    return out;
}

int nonzero_terms(const Poly& p) {
    int n = 0;
    for (const auto& c : p.coeffs())
        if (c != 0) ++n;
    return n;
}

}  // namespace

std::string Scalar::str() const {
    if (den_.is_one()) return poly_str(num_);
    if (num_.degree() <= 0 && den_.degree() <= 0)
        return num_.coeff(0).get_str() + "/" + den_.coeff(0).get_str();
    std::string n = poly_str(num_);
    if (nonzero_terms(num_) > 1) n = "(" + n + ")";
    return n + "/(" + poly_str(den_) + ")";
}

// ---------------------------------------------------------------------------
// parser

namespace {

class ScalarParser {
  public:
    explicit ScalarParser(std::string_view s) : s_(s) {}

    Scalar run() {
        Scalar v = expr();
        skip_ws();
        if (pos_ != s_.size()) fail("unexpected trailing input");
        return v;
    }

  private:
    std::string_view s_;
    std::size_t pos_ = 0;

    [[noreturn]] void fail(const std::string& msg) const { throw parse_error(msg, pos_); }

    void skip_ws() {
        while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    }

    bool eat(char c) {
        skip_ws();
        if (pos_ < s_.size() && s_[pos_] == c) {
            ++pos_;
            return true;
        }
        return false;
    }

    char peek() {
        skip_ws();
        return pos_ < s_.size() ? s_[pos_] : '\0';
    }

    mpz_class uint_lit() {
        skip_ws();
        std::size_t start = pos_;
        while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
        if (pos_ == start) fail("expected integer");
        return mpz_class(std::string(s_.substr(start, pos_ - start)), 10);
    }

    unsigned long exp_lit() {
        mpz_class e = uint_lit();
        if (!e.fits_ulong_p()) fail("exponent too large");
        return e.get_ui();
    }

    Scalar expr() {
        bool neg = false;
        skip_ws();
        if (peek() == '-') {
            ++pos_;
            neg = true;
        } else if (peek() == '+') {
            ++pos_;
        }
        Scalar acc = term();
        if (neg) acc = -acc;
        for (;;) {
            char c = peek();
            if (c == '+') {
                ++pos_;
                acc += term();
            } else if (c == '-') {
                ++pos_;
                acc -= term();
            } else {
                return acc;
            }
        }
    }

    Scalar term() {
        Scalar acc = factor();
        while (peek() == '*') {
            ++pos_;
            acc *= factor();
        }
        return acc;
    }

    Scalar pow(const Scalar& base, unsigned long e) {
        Scalar r(1);
        for (unsigned long i = 0; i < e; ++i) r *= base;
        return r;
    }

    Scalar factor() {
        Scalar v;
        bool integer_atom = false;
        char c = peek();
        if (c == '(') {
            ++pos_;
            v = expr();
            if (!eat(')')) fail("expected ')'");
        } else if (c == 'a') {
            ++pos_;
            v = Scalar::parameter();
        } else if (std::isdigit(static_cast<unsigned char>(c))) {
            v = Scalar(mpq_class(uint_lit()));
            integer_atom = true;
        } else {
            fail("expected integer, 'a' or '('");
        }
        // rational atom: uint '/' uint (a '/(' quotient is handled below)
        if (integer_atom && peek() == '/') {
            std::size_t save = pos_;
            ++pos_;
            if (std::isdigit(static_cast<unsigned char>(peek()))) {
                mpz_class d = uint_lit();
                if (d == 0) throw zero_division_error(v.str() + "/0");
                v = v / Scalar(mpq_class(d));
            } else {
                pos_ = save;
            }
        }
        if (peek() == '^') {
            ++pos_;
            v = pow(v, exp_lit());
        }
        if (peek() == '/') {
            ++pos_;
            if (!eat('(')) fail("expected '(' after '/'");
            Scalar d = expr();
            if (!eat(')')) fail("expected ')'");
            if (d.is_zero()) throw zero_division_error("0");
            v = v / d;
        }
        return v;
    }
};

}  // namespace

Scalar parse_scalar(std::string_view text) { return ScalarParser(text).run(); }

}  // namespace hopfyb
