#include <doctest.h>
#include <json.hpp>
#include <sstream>

#include "cli.hpp"

namespace {

struct Outcome
{
    int code;
    std::string out;
    std::string err;
};

Outcome invoke(std::vector<std::string> const & args)
{
    std::ostringstream out, err;
    int const code = mtlab::cli::run(args, out, err);
    return {code, out.str(), err.str()};
}

bool tsv_clean(std::string const & s)
{
    if (s.empty() || s.back() != '\n' || s.find('\r') != std::string::npos)
        return false;
    std::istringstream in(s);
    std::string line;
    while (std::getline(in, line)) {
        if (!line.empty() && (line.back() == ' ' || line.back() == '\t'))
            return false;
    }
    return true;
}

}  // namespace

TEST_CASE("single-shot commands")
{
    auto r = invoke({"monogenic", "--N", "3", "--A", "-1", "--B", "-1"});
    CHECK(r.code == 0);
    CHECK(r.out == "N\tA\tB\tverdict\twitness_prime\tcondition\n3\t-1\t-1\tMonogenic\tNA\tNA\n");

    r = invoke({"classnum", "--delta", "-23"});
    CHECK(r.code == 0);
    CHECK(r.out == "delta\tD\th\tmethod\tnarrow_h\tunit_norm\n-23\t-23\t3\tFormEnumeration\tNA\tNA\n");

    r = invoke({"disc", "--N", "3", "--A", "-3", "--B", "-1"});
    CHECK(r.code == 0);
    CHECK(r.out == "N\tA\tB\tdiscriminant\n3\t-3\t-1\t81\n");

    r = invoke({"order", "--a", "2", "--b", "1", "--D", "-23"});
    CHECK(r.code == 0);
    CHECK(r.out == "a\tb\tc\tD\torder\n2\t1\t3\t-23\t3\n");

    r = invoke({"irr", "--N", "7", "--A", "-1", "--B", "-42"});
    CHECK(r.code == 0);
    CHECK(r.out.find("Irreducible") != std::string::npos);
}

TEST_CASE("exit codes")
{
    CHECK(invoke({}).code == 3);
    CHECK(invoke({"frobnicate"}).code == 3);
    CHECK(invoke({"disc", "--N", "3", "--A", "x", "--B", "1"}).code == 3);
    CHECK(invoke({"disc", "--N", "3", "--A", "1"}).code == 3);
    CHECK(invoke({"table", "5"}).code == 3);
    CHECK(invoke({"scan", "main9"}).code == 3);
    CHECK(invoke({"scan", "main1", "--w", "3..1"}).code == 3);
    CHECK(invoke({"table", "1", "--format", "xml"}).code == 3);
    CHECK(invoke({"order", "--a", "2", "--b", "0", "--D", "-23"}).code == 3);
    CHECK(invoke({"--help"}).code == 0);

    // Unknown verdicts and uncertified inputs.
    CHECK(invoke({"irr", "--N", "4", "--A", "0", "--B", "4"}).code == 2);
    CHECK(invoke({"classnum", "--delta", "12"}).code == 2);

    // Slow rows are skipped with an explanation.
    auto r = invoke({"table", "3"});
    CHECK(r.code == 2);
    CHECK(r.err.find("--slow") != std::string::npos);
    r = invoke({"scan", "main3", "--N", "6", "--b", "2"});
    CHECK(r.code == 2);
}

TEST_CASE("TSV output is clean and deterministic")
{
    for (auto const & id : {"1", "2", "4"}) {
        auto const a = invoke({"table", id});
        auto const b = invoke({"table", id, "--seed", "99"});
        CHECK(tsv_clean(a.out));
        CHECK(a.out == b.out);
    }
    auto const s = invoke({"scan", "main2", "--a", "1..2", "--b", "2..4"});
    CHECK(s.code == 0);
    CHECK(tsv_clean(s.out));
    CHECK(s.out == invoke({"scan", "main2", "--a", "1..2", "--b", "2..4"}).out);
}

TEST_CASE("JSON records")
{
    auto r = invoke({"scan", "main1", "--w", "-1", "--format", "json"});
    REQUIRE(r.code == 0);
    auto const j = nlohmann::json::parse(r.out);
    REQUIRE(j.is_array());
    REQUIRE(j.size() == 1);
    auto const & rec = j[0];
    CHECK(rec["family"] == "Main1");
    CHECK(rec["params"]["w"] == "-1");
    CHECK(rec["trinomial"]["N"] == "3");
    CHECK(rec["trinomial"]["A"] == "1");
    CHECK(rec["trinomial"]["B"] == "-1");
    CHECK(rec["delta"] == "-31");
    CHECK(rec["irreducible"]["verdict"] == "Irreducible");
    CHECK(rec["irreducible"].contains("certificate"));
    CHECK(rec["monogenic"]["verdict"] == "Monogenic");
    CHECK(rec["D"] == "-31");
    CHECK(rec["h"]["value"] == "3");
    CHECK(rec["n_claimed"] == "3");
    CHECK(rec["claim_holds"] == true);

    r = invoke({"monogenic", "--N", "3", "--A", "-9", "--B", "-1", "--format", "json"});
    auto const m = nlohmann::json::parse(r.out);
    CHECK(m["monogenic"]["verdict"] == "NotMonogenic");
    CHECK(m["monogenic"]["witness_prime"] == "3");
    CHECK(m["monogenic"]["condition"] == "2");

    r = invoke({"scan", "main4", "--N", "7", "--b", "1", "--format", "json"});
    CHECK(r.code == 2);
    auto const s = nlohmann::json::parse(r.out);
    CHECK(s[0]["h"].is_null());
    CHECK(s[0]["claim_holds"] == "NotEvaluated");
}

TEST_CASE("verify on a family range")
{
    auto const r = invoke({"verify", "main4", "--N", "3", "--b", "2..4"});
    CHECK(r.code == 0);
    CHECK(r.out.find("n=7 h=42") != std::string::npos);
    CHECK(r.out.find("n=9 h=108") != std::string::npos);
    CHECK(r.out.find("n=11 h=396") != std::string::npos);
    CHECK(r.out.find("FAIL") == std::string::npos);

    auto const m1 = invoke({"verify", "main1", "--w", "-10..10"});
    CHECK(m1.code == 0);

    CHECK(invoke({"verify", "everything"}).code == 3);
}
