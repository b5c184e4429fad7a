#pragma once

#include <string>
#include <vector>

#include "polab/io.hpp"

namespace polab {

// Computes the value an `expect` line asks about, as text comparable with the
// expected value. Throws ParseError for unknown properties or bad arguments.
std::string evaluate(const Document& d, const Expectation& x);

// Names accepted by evaluate(), with their argument shapes.
const std::vector<std::pair<std::string, std::string>>& property_vocabulary();

struct FixtureRow {
    std::string file, label, expected, actual, cite;
    int line = 0;
    bool pass = false;
};
// Every expectation of one document; evaluation errors become failing rows.
std::vector<FixtureRow> run_expectations(const Document& d, const std::string& file);

}  // namespace polab
