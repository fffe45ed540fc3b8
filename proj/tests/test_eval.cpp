#include "test_support.hpp"

#include "afbd/backdoor.hpp"
#include "afbd/error.hpp"
#include "afbd/eval.hpp"

#include <doctest.h>

using namespace afbd;
using afbd::test::running_example;

namespace {

const EvenCycleFreeSubSolver acyc_sub(FragmentClass::Acyc);
const EvenCycleFreeSubSolver noeven_sub(FragmentClass::Noeven);
const afbd::test::OracleSubSolver oracle_sub;

class UncheckedEmptySubSolver final : public AdmissibleSubSolver {
public:
    ExtensionSet admissible(const Framework&) const override { return ExtensionSet{{}}; }
} const unchecked_sub;

constexpr Semantics non_adm[] = {Semantics::Com, Semantics::Prf, Semantics::Sem, Semantics::Stb};

} // namespace

TEST_SUITE("eval") {

TEST_CASE("labelings of a backdoor follow the table's row order") {
    const auto table = afbd::test::propagation_table();
    const auto ls = backdoor_labelings(ArgumentSet{"4", "2"});
    REQUIRE(ls.size() == table.size());
    for (std::size_t i = 0; i < ls.size(); ++i)
        CHECK(ls[i] == PartialLabeling{{"2", table[i].l2}, {"4", table[i].l4}});
    CHECK(backdoor_labelings(ArgumentSet{}).size() == 1);
    CHECK(backdoor_labelings(ArgumentSet{"a", "b", "c", "d"}).size() == 81);
}

TEST_CASE("com_star on single labelings") {
    const auto f = running_example();
    CHECK(com_star(f, {{"2", Label::Out}, {"4", Label::Out}}, acyc_sub) == ExtensionSet{{"1", "3", "5"}});
    CHECK(com_star(f, {{"2", Label::In}, {"4", Label::In}}, acyc_sub) == ExtensionSet{{"2", "4"}});
    CHECK(com_star(f, {{"2", Label::Und}, {"4", Label::Und}}, acyc_sub) == ExtensionSet{{}});
}

TEST_CASE("com_star over a whole backdoor") {
    const auto f = running_example();
    const ExtensionSet expected{{}, {"2"}, {"2", "4"}, {"4"}, {"4", "5"}, {"5"}, {"1", "3", "5"}};
    CHECK(com_star_all(f, ArgumentSet{"2", "4"}, acyc_sub) == expected);
    // ∅ is not an Acyc backdoor here, so the checking sub-solver refuses; one
    // that answers {∅} without looking gives in(propagated ∅) ∪ ∅ = ∅.
    CHECK_THROWS_AS(com_star_all(f, ArgumentSet{}, acyc_sub), Unsupported);
    CHECK(com_star_all(f, ArgumentSet{}, unchecked_sub) == ExtensionSet{{}});

    auto dag = make_framework({"a", "b", "c"}, {{"a", "b"}, {"b", "c"}});
    CHECK(com_star_all(dag, ArgumentSet{}, acyc_sub) == ExtensionSet{{"a", "c"}});
}

TEST_CASE("complete extensions and the semantics derived from them") {
    const auto f = running_example();
    const ArgumentSet b{"2", "4"};
    CHECK(complete_via_backdoor(f, b, acyc_sub) == ExtensionSet{{}, {"1", "3", "5"}});
    CHECK(extensions_via_backdoor(f, b, acyc_sub, Semantics::Com) == ExtensionSet{{}, {"1", "3", "5"}});
    for (auto sigma : {Semantics::Prf, Semantics::Sem, Semantics::Stb})
        CHECK(extensions_via_backdoor(f, b, acyc_sub, sigma) == ExtensionSet{{"1", "3", "5"}});
    CHECK_THROWS_AS(extensions_via_backdoor(f, b, acyc_sub, Semantics::Adm), Unsupported);

    auto dag = make_framework({"a", "b", "c"}, {{"a", "b"}, {"b", "c"}});
    CHECK(complete_via_backdoor(dag, ArgumentSet{}, acyc_sub) == ExtensionSet{{"a", "c"}});
    CHECK(complete_via_backdoor(Framework{}, ArgumentSet{}, acyc_sub) == ExtensionSet{{}});
}

TEST_CASE("acceptance on the running example") {
    const auto f = running_example();
    CHECK(credulous(f, Semantics::Com, "3", FragmentClass::Acyc, 2));
    CHECK_FALSE(credulous(f, Semantics::Adm, "4", FragmentClass::Acyc, 2));
    CHECK(credulous(f, Semantics::Adm, "1", FragmentClass::Acyc, 2));
    for (auto x : {"1", "2", "3", "4", "5"}) {
        CHECK_FALSE(skeptical(f, Semantics::Com, x, FragmentClass::Acyc, 2));
        CHECK_FALSE(skeptical(f, Semantics::Adm, x, FragmentClass::Noeven, 2));
    }
    CHECK(skeptical(f, Semantics::Stb, "5", FragmentClass::Acyc, 2));
    CHECK(skeptical(f, Semantics::Stb, "5", FragmentClass::Noeven, 2));

    auto r = decide_via_backdoor(f, AcceptanceMode::Credulous, Semantics::Com, "5", FragmentClass::Acyc, 2);
    CHECK(r.accepted);
    CHECK(r.witness == ArgumentSet{"1", "3", "5"});
    CHECK(r.backdoor.members == ArgumentSet{"2", "4"});

    r = decide_via_backdoor(f, AcceptanceMode::Skeptical, Semantics::Com, "1", FragmentClass::Acyc, 2);
    CHECK_FALSE(r.accepted);
    CHECK(r.witness == ArgumentSet{});

    r = decide_via_backdoor(f, AcceptanceMode::Skeptical, Semantics::Adm, "1", FragmentClass::Acyc, 2);
    CHECK_FALSE(r.accepted);
    CHECK(r.witness == ArgumentSet{});
}

TEST_CASE("acyclic frameworks accept their unattacked arguments") {
    auto dag = make_framework({"a", "b", "c"}, {{"a", "b"}, {"b", "c"}});
    for (auto sigma : all_semantics) CHECK(credulous(dag, sigma, "a", FragmentClass::Acyc, 0));
}

TEST_CASE("errors") {
    const auto f = running_example();
    CHECK_THROWS_AS(credulous(f, Semantics::Com, "1", FragmentClass::Acyc, 1), BudgetExceeded);
    CHECK_THROWS_AS(credulous(f, Semantics::Com, "9", FragmentClass::Acyc, 2), DomainError);
    CHECK_THROWS_AS(credulous(f, Semantics::Com, "1", FragmentClass::Sym, 2), Unsupported);
    CHECK_THROWS_AS(EvenCycleFreeSubSolver(FragmentClass::Bip), Unsupported);
    // The sub-solver refuses frameworks outside its class.
    CHECK_THROWS_AS(acyc_sub.admissible(f), Unsupported);
    CHECK_THROWS_AS(noeven_sub.admissible(f), Unsupported);
}

TEST_CASE("backdoor pipeline agrees with the oracle") {
    for (const auto& f : afbd::test::random_corpus(150, 9, 71)) {
        for (auto c : {FragmentClass::Acyc, FragmentClass::Noeven}) {
            for (auto sigma : non_adm)
                CHECK(extensions_with_detection(f, sigma, c, f.size()) == enumerate_oracle(f, sigma));
            for (auto sigma : all_semantics)
                for (const auto& x : f.names()) {
                    CHECK(credulous(f, sigma, x, c, f.size()) == credulous_oracle(f, sigma, x));
                    CHECK(skeptical(f, sigma, x, c, f.size()) == skeptical_oracle(f, sigma, x));
                }
        }
    }
}

TEST_CASE("com_star covers com for backdoors into every class") {
    for (const auto& f : afbd::test::random_corpus(150, 9, 72)) {
        const auto com = enumerate_oracle(f, Semantics::Com);
        for (auto c : all_fragment_classes) {
            const auto b = detect(f, c, f.size());
            REQUIRE(b);
            CHECK(com.is_subset_of(com_star_all(f, b->members, oracle_sub)));
            CHECK(complete_via_backdoor(f, b->members, oracle_sub) == com);
        }
    }
}

TEST_CASE("the result does not depend on which backdoor is used") {
    std::mt19937_64 rng(73);
    for (const auto& f : afbd::test::random_corpus(100, 9, 74)) {
        const auto b = detect_acyc(f, f.size());
        REQUIRE(b);
        // Any superset of a backdoor is a backdoor too.
        std::vector<std::string> bigger(b->members.begin(), b->members.end());
        for (const auto& x : f.names())
            if (rng() % 4 == 0) bigger.push_back(x);
        const ArgumentSet b2(bigger);
        REQUIRE(recognize(remove(f, b2), FragmentClass::Acyc));
        CHECK(complete_via_backdoor(f, b->members, acyc_sub) == complete_via_backdoor(f, b2, acyc_sub));
    }
}

TEST_CASE("oracle sub-solver and the even-cycle-free strategy agree") {
    for (const auto& f : afbd::test::random_corpus(100, 9, 75)) {
        const auto b = detect(f, FragmentClass::Noeven, f.size());
        REQUIRE(b);
        CHECK(com_star_all(f, b->members, noeven_sub) == com_star_all(f, b->members, oracle_sub));
    }
}

} // TEST_SUITE
