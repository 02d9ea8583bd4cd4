#include "enumstat/enumerator.hpp"

#include "enumstat/errors.hpp"

namespace enumstat {

Polynomial monomial_from_record(const FellowRecord& record)
{
    auto z = [](std::int64_t v) { return Rational(Integer(static_cast<long>(v))); };
    return Polynomial::term(1, Monomial(z(record.age), z(record.publications), z(record.citations)));
}

Polynomial build_enumerator(const Corpus& corpus)
{
    Polynomial sum;
    for (const auto& record : corpus.records) {
        Polynomial term = monomial_from_record(record);
        for (const auto& [m, coeff] : term.terms()) sum.add_term(coeff, m);
    }
    return sum;
}

Polynomial normalize(const Polynomial& enumerator)
{
    Rational total = enumerator.value_at_ones();
    if (total == 0) throw ContractError("cannot normalize: enumerator sums to zero");
    return scale(enumerator, Rational(1) / total);
}

}  // namespace enumstat
