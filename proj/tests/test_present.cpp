#include <doctest.h>

#include "corpus.hpp"
#include "swlink/present.hpp"

using namespace swlink;

TEST_CASE("FreeWord reduce") {
    FreeWord w = FreeWord::gen(0) * FreeWord::gen(1) * FreeWord::gen(1, -1) * FreeWord::gen(0, -1);
    CHECK(w.reduced().empty());
    CHECK(w.reduced().reduced() == w.reduced());
    FreeWord v = FreeWord::gen(0) * FreeWord::gen(0, -1) * FreeWord::gen(0);
    CHECK(v.reduced() == FreeWord::gen(0));
}

TEST_CASE("artin_action on generators") {
    FreeGroupEndo id = artin_action(parse_braid("3:"));
    for (int i = 0; i < 3; ++i) CHECK(id.images[i] == FreeWord::gen(i));

    FreeGroupEndo s = artin_action(parse_braid("2: 1"));
    CHECK(s.images[0] == FreeWord::gen(0) * FreeWord::gen(1) * FreeWord::gen(0, -1));
    CHECK(s.images[1] == FreeWord::gen(0));

    FreeGroupEndo c = artin_action(parse_braid("2: 1 -1"));
    CHECK(c.images[0].reduced() == FreeWord::gen(0));
    CHECK(c.images[1].reduced() == FreeWord::gen(1));
}

TEST_CASE("artin_action is invertible") {
    testing::Rng rng(23);
    for (int trial = 0; trial < 60; ++trial) {
        BraidWord b = testing::random_braid(rng, 5, 10);
        BraidWord inv;
        inv.strands = b.strands;
        for (auto it = b.letters.rbegin(); it != b.letters.rend(); ++it)
            inv.letters.push_back(-*it);
        FreeGroupEndo round = artin_action(inv).after(artin_action(b));
        for (int i = 0; i < b.strands; ++i)
            CHECK(round.images[i].reduced() == FreeWord::gen(i));
    }
}

TEST_CASE("artin_action fixes x1...xn up to conjugation") {
    testing::Rng rng(29);
    for (int trial = 0; trial < 60; ++trial) {
        BraidWord b = testing::random_braid(rng, 5, 10);
        FreeGroupEndo beta = artin_action(b);
        FreeWord prod;
        for (int i = 0; i < b.strands; ++i) prod = prod * FreeWord::gen(i);
        FreeWord image = beta.apply(prod).reduced();
        // image == w * prod * w^-1 for some w; peel matching conjugators.
        FreeWord target = prod;
        for (;;) {
            if (image == target) break;
            REQUIRE(image.letters.size() >= 2);
            auto first = image.letters.front();
            auto last = image.letters.back();
            REQUIRE(first.first == last.first);
            REQUIRE(first.second == -last.second);
            image.letters.erase(image.letters.begin());
            image.letters.pop_back();
            image = image.reduced();
        }
        CHECK(image == target);
    }
}

TEST_CASE("closed_braid_presentation shapes") {
    GroupPresentation unknot = closed_braid_presentation(parse_braid("1:"));
    CHECK(unknot.generators.size() == 1);
    CHECK(unknot.relators.empty());
    CHECK(unknot.generators[0].variable == "t");

    GroupPresentation tref = closed_braid_presentation(parse_braid("2: 1 1 1"));
    CHECK(tref.generators.size() == 2);
    CHECK(tref.relators.size() == 1);
    CHECK(tref.deficiency() == 1);
    CHECK(tref.generators[0].variable == "t");
    CHECK(tref.generators[1].variable == "t");

    GroupPresentation knot3 = closed_braid_presentation(parse_braid("3: 1 2"));
    CHECK(knot3.component_count() == 1);
    for (const auto& g : knot3.generators) CHECK(g.variable == "t");
}

TEST_CASE("braid_axis_presentation shapes") {
    GroupPresentation hopf = braid_axis_presentation(parse_braid("1:"));
    CHECK(hopf.generators.size() == 2);
    CHECK(hopf.relators.size() == 1);
    // a x a^-1 x^-1
    FreeWord expect = FreeWord::gen(1) * FreeWord::gen(0) * FreeWord::gen(1, -1) *
                      FreeWord::gen(0, -1);
    CHECK(hopf.relators[0] == expect);
    CHECK(hopf.generators[1].variable == "tau");

    GroupPresentation tref = braid_axis_presentation(parse_braid("2: 1 1 1"));
    CHECK(tref.generators.size() == 3);
    CHECK(tref.relators.size() == 2);
    CHECK(tref.deficiency() == 1);
    CHECK(tref.variables() == std::vector<std::string>{"t", "tau"});
}

TEST_CASE("component variables sort in component order") {
    CHECK(component_variable(0, 1) == "t");
    CHECK(component_variable(0, 3) == "t1");
    CHECK(component_variable(2, 3) == "t3");
    CHECK(component_variable(0, 12) == "t01");
    CHECK(component_variable(9, 12) == "t10");
    CHECK(component_variable(11, 12) == "t12");
    for (int k : {2, 5, 9, 10, 11, 26}) {
        std::vector<std::string> names;
        for (int c = 0; c < k; ++c) names.push_back(component_variable(c, k));
        CHECK(std::is_sorted(names.begin(), names.end()));
    }
}

#include "swlink/jsonio.hpp"

TEST_CASE("presentation debug JSON") {
    GroupPresentation hopf = braid_axis_presentation(parse_braid("1:"));
    Json j = presentation_to_json(hopf);
    CHECK(j.at("generators").size() == 2);
    CHECK(j.at("relators").size() == 1);
    // relators as signed 1-based ids
    CHECK(j.at("relators")[0] == Json::array({2, 1, -2, -1}));
    CHECK(j.at("abelianization").at("a") == Json("tau"));
    CHECK(j.at("abelianization").at("x1") == Json("t"));
}

TEST_CASE("presentation invariants hold for random braids") {
    testing::Rng rng(31);
    for (int trial = 0; trial < 80; ++trial) {
        BraidWord b = testing::random_braid(rng);
        GroupPresentation closed = closed_braid_presentation(b);
        CHECK(closed.deficiency() == 1);
        CHECK(closed.relators_abelianize_to_zero());

        GroupPresentation axis = braid_axis_presentation(b);
        CHECK(axis.deficiency() == 1);
        CHECK(axis.relators_abelianize_to_zero());
    }
}
