#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <random>

#include "doctest.h"
#include "tiedlinks/braid.hpp"
#include "tiedlinks/errors.hpp"

using namespace tiedlinks;

TEST_CASE("parsing the braid grammar") {
    const TiedBraid hopf = parse_braid("s1 s1");
    CHECK(hopf.strands == 2);
    REQUIRE(hopf.letters.size() == 2);
    CHECK(hopf.letters[0] == BraidLetter::sigma(1));
    CHECK(hopf.letters[1] == BraidLetter::sigma(1));

    const TiedBraid h = parse_braid("e1 s1^-2");
    CHECK(h.strands == 2);
    REQUIRE(h.letters.size() == 2);
    CHECK(h.letters[0] == BraidLetter::eta(1));
    CHECK(h.letters[1] == BraidLetter::sigma(1, -2));

    const TiedBraid e = parse_braid("s1 s2^-1 s1 s2^-1");
    CHECK(e.strands == 3);
    CHECK(e.letters.size() == 4);

    const TiedBraid empty = parse_braid("");
    CHECK(empty.strands == 1);
    CHECK(empty.letters.empty());

    const TiedBraid wide = parse_braid("s1", 5);
    CHECK(wide.strands == 5);
}

TEST_CASE("parse errors carry positions") {
    CHECK_THROWS_AS(parse_braid("sX"), ParseError);
    CHECK_THROWS_AS(parse_braid("s1^0"), ParseError);
    CHECK_THROWS_AS(parse_braid("e1^2"), ParseError);
    CHECK_THROWS_AS(parse_braid("s1 q2"), ParseError);
    CHECK_THROWS_AS(parse_braid("s0"), ParseError);
    CHECK_THROWS_AS(parse_braid("s1x"), ParseError);
    // explicit strand count must exceed the maximum index
    CHECK_THROWS_AS(parse_braid("s2", 2), std::invalid_argument);
    try {
        parse_braid("s1 sX");
    } catch (const ParseError& err) {
        CHECK(err.position() == 4);
    }
}

TEST_CASE("render round-trips through parse") {
    std::mt19937_64 rng(3);
    for (int k = 0; k < 30; ++k) {
        const TiedBraid b = random_braid(2 + static_cast<int>(rng() % 4),
                                         static_cast<int>(rng() % 10), rng());
        const TiedBraid back = parse_braid(render(b), b.strands);
        CHECK(back == b);
    }
    CHECK(render(parse_braid("s1 s1^-2 e2 s3^4")) == "s1 s1^-2 e2 s3^4");
}

TEST_CASE("exponent sums sigma powers only") {
    CHECK(exponent(parse_braid("s1 s1")) == 2);
    CHECK(exponent(parse_braid("e1 s1^-2")) == -2);
    CHECK(exponent(parse_braid("s1 s2^-1 s1 s2^-1")) == 0);

    std::mt19937_64 rng(5);
    for (int k = 0; k < 20; ++k) {
        const TiedBraid x = random_braid(3, static_cast<int>(rng() % 8), rng());
        const TiedBraid y = random_braid(3, static_cast<int>(rng() % 8), rng());
        TiedBraid xy = x;
        xy.letters.insert(xy.letters.end(), y.letters.begin(), y.letters.end());
        CHECK(exponent(xy) == exponent(x) + exponent(y));
        if (!xy.letters.empty()) {
            CHECK(exponent(cyclic_rotate(xy, static_cast<long>(rng() % xy.letters.size()))) ==
                  exponent(xy));
        }
    }
}

TEST_CASE("markov moves") {
    const TiedBraid hopf = parse_braid("s1 s1");
    const TiedBraid stab = markov_move(hopf, MarkovMove::StabPos);
    CHECK(stab.strands == 3);
    REQUIRE(stab.letters.size() == 3);
    CHECK(stab.letters[2] == BraidLetter::sigma(2, 1));

    const TiedBraid stab_tied = markov_move(hopf, MarkovMove::StabPosTied);
    CHECK(stab_tied.strands == 3);
    REQUIRE(stab_tied.letters.size() == 4);
    CHECK(stab_tied.letters[2] == BraidLetter::sigma(2, 1));
    CHECK(stab_tied.letters[3] == BraidLetter::eta(2));

    const TiedBraid neg = markov_move(hopf, MarkovMove::StabNeg);
    CHECK(neg.letters.back() == BraidLetter::sigma(2, -1));

    const TiedBraid conj = conjugate(parse_braid("e1"), BraidLetter::sigma(1));
    REQUIRE(conj.letters.size() == 3);
    CHECK(conj.letters[0] == BraidLetter::sigma(1, 1));
    CHECK(conj.letters[1] == BraidLetter::eta(1));
    CHECK(conj.letters[2] == BraidLetter::sigma(1, -1));

    CHECK_THROWS_AS(conjugate(hopf, BraidLetter::eta(1)), std::invalid_argument);
}

TEST_CASE("cyclic rotation") {
    const TiedBraid b = parse_braid("s1 e1 s2");
    const TiedBraid r = cyclic_rotate(b, 1);
    REQUIRE(r.letters.size() == 3);
    CHECK(r.letters[0] == BraidLetter::eta(1));
    CHECK(r.letters[1] == BraidLetter::sigma(2));
    CHECK(r.letters[2] == BraidLetter::sigma(1));
    CHECK(cyclic_rotate(b, 0) == b);
    CHECK(cyclic_rotate(b, 3) == b);
    CHECK(cyclic_rotate(b, -1) == cyclic_rotate(b, 2));
}

TEST_CASE("skein variants") {
    const TiedBraid single = parse_braid("s1");
    const SkeinVariants v = skein_variants(single, 0);
    CHECK(v.plus == parse_braid("s1"));
    CHECK(v.minus == parse_braid("s1^-1"));
    CHECK(v.tied.letters == std::vector<BraidLetter>{BraidLetter::eta(1)});
    CHECK(v.plus_tied.letters ==
          std::vector<BraidLetter>{BraidLetter::eta(1), BraidLetter::sigma(1)});

    const TiedBraid hopf = parse_braid("s1 s1");
    const SkeinVariants v2 = skein_variants(hopf, 1);
    CHECK(v2.plus == hopf);
    CHECK(v2.minus == parse_braid("s1 s1^-1"));
    CHECK(v2.tied.letters ==
          std::vector<BraidLetter>{BraidLetter::sigma(1), BraidLetter::eta(1)});
    CHECK(v2.plus_tied.letters.size() == 3);

    // a negative site: the minus variant is the input itself
    const TiedBraid neg = parse_braid("s2^-1 s1");
    const SkeinVariants v3 = skein_variants(neg, 0);
    CHECK(v3.minus == neg);
    CHECK(v3.plus == parse_braid("s2 s1"));
    CHECK(v3.tied.letters[0] == BraidLetter::eta(2));
    CHECK(v3.plus_tied.letters[0] == BraidLetter::eta(2));
    CHECK(v3.plus_tied.letters[1] == BraidLetter::sigma(2));

    CHECK(tied_negative_variant(single, 0).letters ==
          std::vector<BraidLetter>{BraidLetter::eta(1), BraidLetter::sigma(1, -1)});

    CHECK_THROWS_AS(skein_variants(parse_braid("e1"), 0), std::invalid_argument);
    CHECK_THROWS_AS(skein_variants(parse_braid("s1^2"), 0), std::invalid_argument);
    CHECK_THROWS_AS(skein_variants(single, 3), std::invalid_argument);
}

TEST_CASE("random braids are deterministic and in range") {
    CHECK(random_braid(2, 0, 99).letters.empty());
    const TiedBraid a = random_braid(3, 5, 7);
    CHECK(a.letters.size() == 5);
    for (const auto& l : a.letters) {
        CHECK(l.index >= 1);
        CHECK(l.index <= 2);
        if (l.kind == BraidKind::Sigma) CHECK((l.power == 1 || l.power == -1));
    }
    CHECK(random_braid(3, 5, 7) == a);
    CHECK(random_braid(3, 5, 8) != a);
}
