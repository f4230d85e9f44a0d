#include "motivic/verify.hpp"

#include <stdexcept>

#include "doctest.h"

using namespace motivic;

TEST_CASE("report accounting and rendering") {
    VerificationReport rep;
    rep.suite = "demo";
    rep.params.emplace_back("p", "3");
    rep.claims.push_back({"good", true, ""});
    rep.claims.push_back({"bad", false, "cell (1,2)"});
    rep.claims.push_back({"noted", true, "extra context"});

    CHECK(rep.passed() == 2);
    CHECK(rep.failed() == 1);
    CHECK(!rep.all_pass());

    std::string text = rep.text();
    CHECK(text.find("suite demo: 2/3 claims pass") != std::string::npos);
    CHECK(text.find("[FAIL] bad (witness: cell (1,2))") != std::string::npos);
    CHECK(text.find("[PASS] noted (note: extra context)") != std::string::npos);

    std::string json = rep.json();
    CHECK(json.find("\"status\": \"fail\"") != std::string::npos);
    CHECK(json.find("\"witness\": \"cell (1,2)\"") != std::string::npos);
    CHECK(json.find("\"passed\": 2") != std::string::npos);
    CHECK(rep.json() == json);
}

TEST_CASE("coarse bound suite passes and names its witnesses") {
    VerificationReport rep = verify_lemma_coarse(3, 40);
    CHECK(rep.all_pass());
    REQUIRE(rep.claims.size() == 3);
    CHECK(rep.claims[0].id == "coarse-bound");
    CHECK(rep.claims[1].id == "equality-at-tau0");
    CHECK(rep.claims[1].witness == "t0");
    CHECK(rep.claims[2].id == "equality-set");
    CHECK(verify_lemma_coarse(5, 40).all_pass());
    CHECK_THROWS_AS(verify_lemma_coarse(4, 10), std::invalid_argument);
}

TEST_CASE("cobar d2 suite passes on both sides") {
    for (Side side : {Side::Real, Side::C2}) {
        VerificationReport rep = verify_cobar_d2({3, side}, 3, 10, -6, 6);
        CHECK(rep.all_pass());
        CHECK(rep.claims.size() == 3);
        CHECK(rep.claims[0].id == "d2-zero-f1");
    }
}

TEST_CASE("cobar comparison suite passes") {
    VerificationReport rep = verify_cobar_map(3, 2, 10, -6, 6);
    CHECK(rep.all_pass());
    REQUIRE(rep.claims.size() == 3);
    CHECK(rep.claims[0].id == "chain-map");
    CHECK(rep.claims[1].id == "injective");
    CHECK(rep.claims[2].id == "cokernel-bound");
}

TEST_CASE("ext map suite passes") {
    VerificationReport rep = verify_ext_map(3, 2, 10, -5, 5);
    CHECK(rep.all_pass());
    REQUIRE(rep.claims.size() == 2);
    CHECK(rep.claims[0].id == "iso-above-cut");
    CHECK(rep.claims[1].id == "injective-on-cut");
}

TEST_CASE("uct suite passes on both sides and rejects classical") {
    CHECK(verify_uct({3, Side::Real}, 2, 10, -6, 6).all_pass());
    CHECK(verify_uct({3, Side::C2}, 2, 10, -6, 6).all_pass());
    CHECK_THROWS_AS(verify_uct({3, Side::Classical}, 1, 4, -2, 2), std::invalid_argument);
}

TEST_CASE("ranges suite passes") {
    VerificationReport rep = verify_ranges(23, 500, 40);
    CHECK(rep.all_pass());
    REQUIRE(rep.claims.size() == 4);
    CHECK(rep.claims[0].id == "domination");
    CHECK(rep.claims[1].id == "n0-exception");
    CHECK(rep.claims[2].id == "rational-plus-part");
    CHECK(rep.claims[2].witness.find("nonzero cells checked") != std::string::npos);
    CHECK(rep.claims[3].id == "origin-match");
}

TEST_CASE("split suite passes with the sign note") {
    VerificationReport rep = verify_split();
    CHECK(rep.all_pass());
    CHECK(rep.claims.size() == 12);
    bool noted = false;
    for (const ClaimResult& c : rep.claims)
        if (c.id == "e_plus^2 = -e_plus") {
            CHECK(c.pass);
            CHECK(c.witness.find("sign flag") != std::string::npos);
            noted = true;
        }
    CHECK(noted);
}
