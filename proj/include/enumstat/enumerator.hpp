#pragma once

#include "enumstat/corpus.hpp"
#include "enumstat/polynomial.hpp"

namespace enumstat {

/// a^age p^publications c^citations with coefficient 1.
[[nodiscard]] Polynomial monomial_from_record(const FellowRecord& record);

/// Weight enumerator of the corpus: the sum of every record's monomial.
/// Identical triples merge into one term whose coefficient is their count.
[[nodiscard]] Polynomial build_enumerator(const Corpus& corpus);

/// Enumerator divided by its value at (1,1,1), so the coefficients form a
/// probability distribution. Throws ContractError for the zero polynomial.
[[nodiscard]] Polynomial normalize(const Polynomial& enumerator);

}  // namespace enumstat
