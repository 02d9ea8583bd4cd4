#include "enumstat/poly_text.hpp"

#include "enumstat/errors.hpp"

#include <algorithm>
#include <cctype>
#include <optional>
#include <sstream>
#include <vector>

namespace enumstat {

namespace {

bool canonical_before(const Monomial& x, const Monomial& y)
{
    if (int c = cmp(x.exponent(Variable::A), y.exponent(Variable::A)); c != 0) return c < 0;
    if (int c = cmp(x.exponent(Variable::C), y.exponent(Variable::C)); c != 0) return c > 0;
    return cmp(x.exponent(Variable::P), y.exponent(Variable::P)) > 0;
}

void write_term(std::ostream& out, const Rational& magnitude, const Monomial& m)
{
    bool first = true;
    if (magnitude != 1 || m.is_constant()) {
        out << to_string(magnitude);
        first = false;
    }
    for (Variable v : {Variable::C, Variable::P, Variable::A}) {
        const Rational& e = m.exponent(v);
        if (e == 0) continue;
        if (!first) out << '*';
        out << variable_symbol(v);
        if (e != 1) out << '^' << to_string(e);
        first = false;
    }
}

}  // namespace

std::string print_canonical(const Polynomial& x)
{
    if (x.is_zero()) return "0";

    std::vector<const Polynomial::TermMap::value_type*> terms;
    terms.reserve(x.size());
    for (const auto& t : x.terms()) terms.push_back(&t);
    std::sort(terms.begin(), terms.end(), [](auto* l, auto* r) { return canonical_before(l->first, r->first); });

    std::ostringstream out;
    const Rational* group = nullptr;
    for (const auto* t : terms) {
        const auto& [m, coeff] = *t;
        bool negative = coeff < 0;
        if (group == nullptr) {
            if (negative) out << '-';
        } else {
            bool new_group = m.exponent(Variable::A) != *group;
            out << (negative ? " -" : " +") << (new_group ? "\n" : " ");
        }
        write_term(out, negative ? Rational(-coeff) : coeff, m);
        group = &m.exponent(Variable::A);
    }
    return out.str();
}

namespace {

class PolyParser {
public:
    explicit PolyParser(std::string_view src) : src_(src) {}

    Polynomial parse()
    {
        Polynomial result;
        skip_space();
        if (at_end()) error("empty input");
        bool negative = accept('-');
        for (;;) {
            auto [coeff, monomial] = parse_term();
            result.add_term(negative ? Rational(-coeff) : coeff, monomial);
            skip_space();
            if (at_end()) break;
            if (accept('+')) {
                negative = false;
            } else if (accept('-')) {
                negative = true;
            } else {
                error("expected '+' or '-'");
            }
        }
        return result;
    }

private:
    std::pair<Rational, Monomial> parse_term()
    {
        skip_space();
        Rational coeff = 1;
        RationalVector exps{Rational(0), Rational(0), Rational(0)};
        if (peek_digit()) {
            coeff = parse_number(false);
            skip_space();
            if (!accept('*')) return {coeff, Monomial()};
        }
        do {
            skip_space();
            auto v = parse_variable();
            Rational e = 1;
            skip_space();
            if (accept('^')) {
                skip_space();
                e = parse_number(true);
            }
            at(exps, v) += e;
            skip_space();
        } while (accept('*'));
        return {coeff, Monomial(std::move(exps))};
    }

    Variable parse_variable()
    {
        if (!at_end()) {
            switch (src_[pos_]) {
                case 'a': ++pos_; return Variable::A;
                case 'p': ++pos_; return Variable::P;
                case 'c': ++pos_; return Variable::C;
                default: break;
            }
        }
        error("expected variable a, p or c");
    }

    Rational parse_number(bool allow_sign)
    {
        bool negative = allow_sign && accept('-');
        skip_space();
        Integer num = parse_digits();
        Integer den = 1;
        skip_space();
        if (accept('/')) {
            skip_space();
            std::size_t at_den = pos_;
            den = parse_digits();
            if (den == 0) error("zero denominator", at_den);
        }
        if (negative) num = -num;
        return make_rational(num, den);
    }

    Integer parse_digits()
    {
        std::size_t start = pos_;
        while (peek_digit()) ++pos_;
        if (start == pos_) error("expected digits");
        return Integer(std::string(src_.substr(start, pos_ - start)), 10);
    }

    bool peek_digit() const { return !at_end() && std::isdigit(static_cast<unsigned char>(src_[pos_])); }
    bool at_end() const { return pos_ >= src_.size(); }

    bool accept(char ch)
    {
        if (at_end() || src_[pos_] != ch) return false;
        ++pos_;
        return true;
    }

    void skip_space()
    {
        while (!at_end() && std::isspace(static_cast<unsigned char>(src_[pos_]))) ++pos_;
    }

    [[noreturn]] void error(const std::string& what) const { error(what, pos_); }

    [[noreturn]] void error(const std::string& what, std::size_t where) const
    {
        std::string found = where < src_.size() ? "'" + std::string(1, src_[where]) + "'" : "end of input";
        throw ParseError("polynomial parse error at offset " + std::to_string(where) + ": " + what + ", found " +
                             found,
                         where);
    }

    std::string_view src_;
    std::size_t pos_ = 0;
};

}  // namespace

Polynomial parse_polynomial(std::string_view src)
{
    return PolyParser(src).parse();
}

}  // namespace enumstat
