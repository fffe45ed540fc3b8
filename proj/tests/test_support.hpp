#pragma once

#include "afbd/eval.hpp"
#include "afbd/framework.hpp"
#include "afbd/gadgets.hpp"
#include "afbd/labeling.hpp"
#include "afbd/oracle.hpp"

#include <cstdint>
#include <random>
#include <string>
#include <vector>

namespace afbd::test {

/// The five-argument, eleven-attack running example.
inline Framework running_example() {
    return make_framework({"1", "2", "3", "4", "5"},
                          {{"1", "2"}, {"1", "4"}, {"2", "1"}, {"2", "3"}, {"2", "5"}, {"3", "2"},
                           {"3", "4"}, {"4", "1"}, {"4", "2"}, {"4", "3"}, {"5", "4"}});
}

inline const char* running_example_apx =
    "arg(1).\narg(2).\narg(3).\narg(4).\narg(5).\n"
    "att(1,2).\natt(1,4).\natt(2,1).\natt(2,3).\natt(2,5).\natt(3,2).\n"
    "att(3,4).\natt(4,1).\natt(4,2).\natt(4,3).\natt(5,4).\n";

/// One row of the worked propagation table for backdoor {2,4} of the
/// running example: labels of 2 and 4, propagated labels of 1, 3 and 5, the
/// resulting in-set and whether it is a complete extension.
struct PropagationRow {
    Label l2, l4;
    Label l1, l3, l5;
    ArgumentSet in;
    bool complete;
};

inline std::vector<PropagationRow> propagation_table() {
    constexpr auto I = Label::In, O = Label::Out, U = Label::Und;
    return {
        {I, I, O, O, O, {"2", "4"}, false},
        {I, O, O, O, O, {"2"}, false},
        {I, U, O, O, O, {"2"}, false},
        {O, I, O, O, I, {"4", "5"}, false},
        {O, O, I, I, I, {"1", "3", "5"}, true},
        {O, U, U, U, I, {"5"}, false},
        {U, I, O, O, U, {"4"}, false},
        {U, O, U, U, U, {}, true},
        {U, U, U, U, U, {}, true},
    };
}

/// Seeded corpus of random frameworks: n in [1, max_n], p cycling through
/// {0.1, 0.2, 0.3}.
inline std::vector<Framework> random_corpus(std::size_t count, std::size_t max_n, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    const double probs[] = {0.1, 0.2, 0.3};
    std::vector<Framework> out;
    for (std::size_t i = 0; i < count; ++i) {
        const std::size_t n = 1 + rng() % max_n;
        out.push_back(generate_random(n, probs[i % 3], rng()));
    }
    return out;
}

/// Exact admissible sets by exhaustion; lets evaluation run through any class.
class OracleSubSolver final : public AdmissibleSubSolver {
public:
    ExtensionSet admissible(const Framework& g) const override {
        return enumerate_oracle(g, Semantics::Adm);
    }
};

/// All 2^n subsets of the framework's arguments.
inline std::vector<ArgumentSet> all_subsets(const Framework& f) {
    std::vector<ArgumentSet> out;
    const std::uint64_t total = std::uint64_t{1} << f.size();
    for (std::uint64_t bits = 0; bits < total; ++bits) {
        std::vector<std::string> names;
        for (std::size_t i = 0; i < f.size(); ++i)
            if ((bits >> i) & 1U) names.push_back(f.names()[i]);
        out.emplace_back(std::move(names));
    }
    return out;
}

} // namespace afbd::test
