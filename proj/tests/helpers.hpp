#pragma once

#include <sstream>
#include <string>
#include <vector>

#include "sea/cli.hpp"
#include "sea/finite_model.hpp"

namespace helpers {

struct CliResult {
    int code = 0;
    std::string out;
    std::string err;
};

inline CliResult run_cli(const std::vector<std::string>& args) {
    std::vector<const char*> argv;
    argv.push_back("seatool");
    for (const auto& a : args) argv.push_back(a.c_str());
    std::ostringstream out, err;
    CliResult r;
    r.code = sea::run_cli(int(argv.size()), argv.data(), out, err);
    r.out = out.str();
    r.err = err.str();
    return r;
}

// {0, 1} with the only possible structure
inline sea::FiniteModelData chain2_data(bool with_product) {
    sea::FiniteModelData d;
    d.name = "chain2";
    d.labels = {"0", "1"};
    d.zero_label = "0";
    d.one_label = "1";
    d.sum_triples = {{"0", "0", "0", 0}, {"0", "1", "1", 0}, {"1", "0", "1", 0}};
    d.has_product = with_product;
    if (with_product)
        d.product_triples = {{"0", "0", "0", 0},
                             {"0", "1", "0", 0},
                             {"1", "0", "0", 0},
                             {"1", "1", "1", 0}};
    return d;
}

// {0, h, 1} with h + h = 1: the three-element effect algebra
inline sea::FiniteModelData chain3_data() {
    sea::FiniteModelData d;
    d.name = "chain3";
    d.labels = {"0", "h", "1"};
    d.zero_label = "0";
    d.one_label = "1";
    d.sum_triples = {{"0", "0", "0", 0}, {"0", "h", "h", 0}, {"h", "0", "h", 0},
                     {"0", "1", "1", 0}, {"1", "0", "1", 0}, {"h", "h", "1", 0}};
    return d;
}

} // namespace helpers
