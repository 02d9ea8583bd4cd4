#pragma once

#include "enumstat/corpus.hpp"
#include "enumstat/polynomial.hpp"

#include <fstream>
#include <random>
#include <sstream>
#include <string>

namespace enumstat::testing {

inline std::string data_path(const std::string& name)
{
    return std::string(ENUMSTAT_DATA_DIR) + "/" + name;
}

inline std::string test_data_path(const std::string& name)
{
    return std::string(ENUMSTAT_TEST_DATA_DIR) + "/" + name;
}

inline std::string read_file(const std::string& path)
{
    std::ifstream in(path, std::ios::binary);
    std::stringstream buffer;
    buffer << in.rdbuf();
    return buffer.str();
}

inline const Corpus& shipped_corpus()
{
    static const Corpus corpus =
        load_corpus_file(data_path("ams_fellows_2022.records"), InputFormat::record_lines);
    return corpus;
}

inline FellowRecord make_record(std::int64_t age, std::int64_t pubs, std::int64_t cites, std::string name = "x")
{
    return FellowRecord{std::move(name), 1900, 1900 + age, age, pubs, cites};
}

/// N records with each coordinate uniform in [0, max_value]; birth years are
/// spread so identity keys stay unique.
inline Corpus random_corpus(std::mt19937_64& rng, std::size_t n, std::int64_t max_value)
{
    std::uniform_int_distribution<std::int64_t> value(0, max_value);
    Corpus corpus;
    for (std::size_t i = 0; i < n; ++i) {
        std::int64_t age = value(rng);
        FellowRecord r{"r" + std::to_string(i), 1000 + static_cast<std::int64_t>(i) * 200, 0, age, value(rng),
                       value(rng)};
        r.death_year = r.birth_year + age;
        corpus.records.push_back(r);
    }
    return corpus;
}

/// Small polynomials with signed fractional coefficients and exponents.
inline Polynomial random_polynomial(std::mt19937_64& rng)
{
    std::uniform_int_distribution<int> terms(0, 8);
    std::uniform_int_distribution<long> num(-50, 50);
    std::uniform_int_distribution<long> den(1, 7);
    std::uniform_int_distribution<int> fractional(0, 3);
    auto rational = [&](bool allow_fraction) {
        long d = allow_fraction ? den(rng) : 1;
        return make_rational(Integer(num(rng)), Integer(d));
    };
    Polynomial p;
    int n = terms(rng);
    for (int i = 0; i < n; ++i) {
        bool frac = fractional(rng) == 0;
        p.add_term(rational(true), Monomial(rational(frac), rational(frac), rational(frac)));
    }
    return p;
}

}  // namespace enumstat::testing
