#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "rsg/automaton_ops.hpp"
#include "rsg/errors.hpp"
#include "rsg/re.hpp"
#include "test_support.hpp"

using namespace rsg;
using namespace rsg::testing;

namespace {

Alphabet ab() { return Alphabet({"a", "b"}); }

// NFA for "words ending in a" over {a, b}: q0 loops on both, q0 -a-> q1 final.
Nfa ends_in_a() {
    return Nfa(ab(), 2, 0, {{0, 0, 0}, {0, 1, 0}, {0, 0, 1}}, {1});
}

Nfa reject_all(const Alphabet& alphabet) {
    std::vector<Transition> trans;
    for (Symbol s = 0; s < alphabet.size(); ++s) trans.push_back({0, s, 0});
    return Nfa(alphabet, 1, 0, std::move(trans), {});
}

Nfa accept_all(const Alphabet& alphabet) {
    std::vector<Transition> trans;
    for (Symbol s = 0; s < alphabet.size(); ++s) trans.push_back({0, s, 0});
    return Nfa(alphabet, 1, 0, std::move(trans), {0});
}

} // namespace

TEST_CASE("accepts on the ends-in-a automaton") {
    Nfa a = ends_in_a();
    CHECK_FALSE(accepts(a, Word{}));
    CHECK(accepts(a, parse_word(a.alphabet(), "b a")));
    CHECK_FALSE(accepts(a, parse_word(a.alphabet(), "a b")));
}

TEST_CASE("accepts rejects foreign symbols") {
    Nfa a = ends_in_a();
    CHECK_THROWS_AS(accepts(a, Word{5}), InputError);
}

TEST_CASE("accepts agrees with run enumeration on random automata") {
    std::mt19937 rng(7);
    Alphabet alphabet = ab();
    for (int i = 0; i < 30; ++i) {
        Nfa a = random_nfa(alphabet, 4, rng);
        for (const Word& w : all_words_up_to(alphabet.size(), 8))
            REQUIRE(accepts(a, w) == brute_accepts(a, w));
    }
}

TEST_CASE("determinize preserves the language and is complete") {
    Nfa a = ends_in_a();
    Dfa d = determinize(a);
    CHECK(d.num_states() == 2);
    for (const Word& w : all_words_up_to(2, 8)) CHECK(accepts(d, w) == accepts(a, w));

    Dfa again = determinize(d.as_nfa());
    CHECK(equivalent(again.as_nfa(), d.as_nfa()));
}

TEST_CASE("determinize of an automaton without finals rejects everything") {
    Nfa a = reject_all(ab());
    Dfa d = determinize(a);
    for (const Word& w : all_words_up_to(2, 5)) CHECK_FALSE(accepts(d, w));
}

TEST_CASE("complement flips membership and is an involution") {
    std::mt19937 rng(11);
    Alphabet alphabet = ab();
    for (int i = 0; i < 20; ++i) {
        Dfa d = determinize(random_nfa(alphabet, 4, rng));
        Dfa c = complement(d);
        for (const Word& w : all_words_up_to(2, 8)) CHECK(accepts(c, w) != accepts(d, w));
        CHECK(equivalent(complement(c).as_nfa(), d.as_nfa()));
    }
    Dfa all = determinize(accept_all(alphabet));
    Dfa none = complement(all);
    for (const Word& w : all_words_up_to(2, 4)) CHECK_FALSE(accepts(none, w));
}

TEST_CASE("boolean algebra laws by membership sampling") {
    std::mt19937 rng(13);
    Alphabet alphabet = ab();
    for (int i = 0; i < 25; ++i) {
        Nfa a = random_nfa(alphabet, 4, rng);
        Nfa b = random_nfa(alphabet, 4, rng);
        Dfa bd = determinize(b);
        Nfa inter = intersect(a, b);
        Nfa uni = union_of(a, b);
        Nfa diff = difference(a, bd);
        for (const Word& w : all_words_up_to(2, 6)) {
            bool in_a = accepts(a, w);
            bool in_b = accepts(b, w);
            REQUIRE(accepts(inter, w) == (in_a && in_b));
            REQUIRE(accepts(uni, w) == (in_a || in_b));
            REQUIRE(accepts(diff, w) == (in_a && !in_b));
        }
    }
}

TEST_CASE("intersect with itself and difference against own determinization") {
    Nfa a = ends_in_a();
    CHECK(equivalent(intersect(a, a), a));
    CHECK(is_empty(difference(a, determinize(a))));
}

TEST_CASE("intersect requires matching alphabets") {
    Nfa a = ends_in_a();
    Nfa other = reject_all(Alphabet({"x", "y"}));
    CHECK_THROWS_AS(intersect(a, other), InputError);
}

TEST_CASE("shortest_member basics") {
    Alphabet alphabet = ab();
    CHECK_FALSE(shortest_member(reject_all(alphabet)).has_value());

    // Accepts exactly {ab, ba, a}.
    re::Expr lang = re::Expr::alt({
        re::Expr::seq({re::Expr::sym(0), re::Expr::sym(1)}),
        re::Expr::seq({re::Expr::sym(1), re::Expr::sym(0)}),
        re::Expr::sym(0),
    });
    auto w = shortest_member(re::compile(lang, alphabet));
    REQUIRE(w.has_value());
    CHECK(*w == Word{0});

    // {ab, ba} with a < b: lexicographic tie-break picks ab.
    re::Expr tie = re::Expr::alt({
        re::Expr::seq({re::Expr::sym(0), re::Expr::sym(1)}),
        re::Expr::seq({re::Expr::sym(1), re::Expr::sym(0)}),
    });
    auto t = shortest_member(re::compile(tie, alphabet));
    REQUIRE(t.has_value());
    CHECK(*t == Word{0, 1});
}

TEST_CASE("minimize reaches the Myhill-Nerode size and preserves language") {
    Dfa d = determinize(ends_in_a());
    Dfa m = minimize(d);
    CHECK(m.num_states() == 2);
    for (const Word& w : all_words_up_to(2, 8)) CHECK(accepts(m, w) == accepts(d, w));
    CHECK(minimize(m).num_states() == m.num_states());

    std::mt19937 rng(17);
    Alphabet alphabet = ab();
    for (int i = 0; i < 20; ++i) {
        Dfa big = determinize(random_nfa(alphabet, 5, rng));
        Dfa small = minimize(big);
        CHECK(small.num_states() <= big.num_states());
        for (const Word& w : all_words_up_to(2, 8))
            REQUIRE(accepts(small, w) == accepts(big, w));
        CHECK(minimize(small).num_states() == small.num_states());
    }
}

TEST_CASE("enumerate_length slices") {
    Nfa a = ends_in_a();
    SUBCASE("n = 0 yields epsilon iff initial is final") {
        CHECK(enumerate_length(a, 0).empty());
        CHECK(enumerate_length(accept_all(ab()), 0) == std::vector<Word>{Word{}});
    }
    SUBCASE("fixed slice of ends-in-a") {
        auto words = enumerate_length(a, 2);
        REQUIRE(words.size() == 2);
        CHECK(words[0] == Word{0, 0}); // aa
        CHECK(words[1] == Word{1, 0}); // ba
    }
    SUBCASE("cardinality matches brute force") {
        std::mt19937 rng(23);
        for (int i = 0; i < 15; ++i) {
            Nfa r = random_nfa(ab(), 4, rng);
            for (int n = 0; n <= 8; ++n) {
                std::size_t count = 0;
                for (const Word& w : all_words_of_length(2, n))
                    if (brute_accepts(r, w)) ++count;
                auto slice = enumerate_length(r, n);
                REQUIRE(slice.size() == count);
                CHECK(std::is_sorted(slice.begin(), slice.end()));
                for (const Word& w : slice) REQUIRE(w.size() == static_cast<std::size_t>(n));
            }
        }
    }
    SUBCASE("budget violations surface as resource errors") {
        CHECK_THROWS_AS(enumerate_length(accept_all(ab()), 10, 100), BudgetError);
    }
}

TEST_CASE("emptiness agrees with the pumping-length bound") {
    std::mt19937 rng(29);
    Alphabet alphabet = ab();
    for (int i = 0; i < 25; ++i) {
        Nfa a = random_nfa(alphabet, 4, rng);
        int bound = determinize(a).num_states();
        bool any = false;
        for (int k = 0; k <= bound && !any; ++k)
            any = !enumerate_length(a, k).empty();
        CHECK(shortest_member(a).has_value() == any);
    }
}

TEST_CASE("expression combinators compile to the described languages") {
    Alphabet alphabet = ab();
    re::Expr expr = re::Expr::seq({
        re::Expr::star(re::Expr::any_of({0, 1})),
        re::Expr::sym(0),
    });
    Nfa a = re::compile(expr, alphabet);
    for (const Word& w : all_words_up_to(2, 6)) {
        bool expected = !w.empty() && w.back() == 0;
        CHECK(accepts(a, w) == expected);
    }
    CHECK(is_empty(re::compile(re::Expr::none(), alphabet)));
    CHECK(accepts(re::compile(re::Expr::epsilon(), alphabet), Word{}));
}
