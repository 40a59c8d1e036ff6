#include "cli.hpp"
#include "oracles.hpp"
#include "poramsey/errors.hpp"
#include "poramsey/io.hpp"

#include <doctest.h>

#include <cstdlib>
#include <sstream>

using namespace poramsey;

namespace
{
    struct Result {
        int code;
        std::string out, err;
        io::Json json() const { return io::parse(out); }
    };

    std::string fixture(const std::string & name)
    {
        return std::string(PORAMSEY_FIXTURES) + "/" + name;
    }

    Result run(std::vector<std::string> args)
    {
        args.insert(args.begin(), "poramsey");
        std::vector<const char *> argv;
        for (const auto & a : args)
            argv.push_back(a.c_str());
        std::ostringstream out, err;
        const int code = cli::dispatch(static_cast<int>(argv.size()), argv.data(), out, err);
        return {code, out.str(), err.str()};
    }
}

TEST_SUITE("cli")
{
    TEST_CASE("json round trip")
    {
        for (int size = 1; size <= 3; ++size)
            for (int p = 1; p <= 2; ++p)
                for (const auto & s : oracle::structures_natural_first(size, p)) {
                    const auto text = io::to_json(s).dump();
                    CHECK(io::structure_from_json(io::parse(text)) == s);
                    CHECK(io::to_json(io::structure_from_json(io::parse(text))).dump() == text);
                }
        const auto j = io::to_json(Structure::chain(2));
        CHECK(j.dump() == R"({"p":1,"size":2,"partial_order":[[0,1]],"linear_orders":[[0,1]]})");
    }

    TEST_CASE("json input errors")
    {
        CHECK_THROWS_AS(io::parse("{\"p\": 1,"), InputError);
        CHECK_THROWS_AS(io::raw_structure_from_json(io::parse(R"({"size": 2})")), InputError);
        CHECK_THROWS_AS(io::raw_structure_from_json(io::parse(R"({"size": "two", "partial_order": [], "linear_orders": [[0,1]]})")), InputError);
        CHECK_THROWS_AS(io::structure_from_json(io::parse(R"({"size": 2, "partial_order": [[0,1]], "linear_orders": [[1,0]]})")), InvalidStructure);
        const auto raw = io::raw_structure_from_json(io::parse(R"({"size": 2, "partial_order": [], "linear_orders": [[0,1],[1,0]]})"));
        CHECK(raw.p == 2);
        CHECK(io::parse_anchor("0,2", 3) == AnchoredSequence({0, 2}, 3));
        CHECK_THROWS_AS(io::parse_int_list("1,x"), InputError);
    }

    TEST_CASE("dot export")
    {
        const auto dot = io::to_dot(Structure::chain(3));
        CHECK(dot.find("0 -> 1") != std::string::npos);
        CHECK(dot.find("1 -> 2") != std::string::npos);
        CHECK(dot.find("0 -> 2") == std::string::npos);
        CHECK(dot.find("L0 rank 2") != std::string::npos);
    }

    TEST_CASE("validate")
    {
        const auto ok = run({"validate", "--input", fixture("chain3.json")});
        CHECK(ok.code == 0);
        CHECK(ok.json()["ok"] == true);
        const auto hasse = run({"validate", "--input", fixture("chain3_hasse.json")});
        CHECK(hasse.json()["structure"] == ok.json()["structure"]);
        const auto bad = run({"validate", "--input", fixture("bad_order.json")});
        CHECK(bad.code == 1);
        CHECK(bad.json()["error"] == "order does not extend P");
        CHECK(run({"validate", "--input", fixture("malformed.json")}).code == 1);
        CHECK(run({"validate", "--input", fixture("missing.json")}).code == 1);
        CHECK(run({"validate"}).code == 1);
        CHECK(run({"no-such-command"}).code == 1);
        CHECK(run({"validate", "--input", fixture("chain3.json"), "--format", "dot"}).out.find("digraph") != std::string::npos);
    }

    TEST_CASE("witness verdicts exit 0 either way")
    {
        const auto six = run({"verify-witness", "--z", fixture("chain6.json"), "--x", fixture("chain2.json"), "--y", fixture("chain3.json"), "--d", "2"});
        CHECK(six.code == 0);
        CHECK(six.json()["verdict"] == "witness-holds");
        const auto five = run({"verify-witness", "--z", fixture("chain5.json"), "--x", fixture("chain2.json"), "--y", fixture("chain3.json"), "--d", "2"});
        CHECK(five.code == 0);
        CHECK(five.json()["verdict"] == "counterexample");
        CHECK(five.json()["coloring"].size() == 10);
    }

    TEST_CASE("infeasibility exits 2")
    {
        const auto r = run({"verify-witness", "--z", fixture("chain6.json"), "--x", fixture("chain2.json"), "--y", fixture("chain3.json"), "--d", "2",
            "--max-colorings", "1000"});
        CHECK(r.code == 2);
        CHECK_FALSE(r.err.empty());
        CHECK(run({"verify-product", "--n", "9", "--d", "3", "--k", "2", "--l", "3", "--m", "2"}).code == 2);
    }

    TEST_CASE("environment ceilings")
    {
        ::setenv("PORAMSEY_MAX_COLORINGS", "1000", 1);
        const auto r = run({"verify-witness", "--z", fixture("chain6.json"), "--x", fixture("chain2.json"), "--y", fixture("chain3.json"), "--d", "2"});
        ::setenv("PORAMSEY_MAX_COLORINGS", "oops", 1);
        CHECK_THROWS_AS(cli::config_from_environment(), InputError);
        ::unsetenv("PORAMSEY_MAX_COLORINGS");
        CHECK(r.code == 2);
    }

    TEST_CASE("engine subcommands")
    {
        CHECK(run({"extensions", "--input", fixture("v3.json")}).json().size() == 2);
        const auto rs = run({"rigid-surjections", "--from", "4", "--to", "2", "--count"});
        CHECK(rs.code == 0);
        CHECK(rs.out.find('7') != std::string::npos);
        CHECK(run({"rigid-surjections", "--from", "3", "--to", "2"}).json()["maps"].size() == 3);
        CHECK(run({"copies", "--x", fixture("chain2.json"), "--z", fixture("chain5.json")}).json()["copies"].size() == 10);
        CHECK(run({"search-product", "--d", "2", "--k", "2", "--l", "3", "--m", "1"}).json()["n"] == 6);
        CHECK(run({"verify-product", "--n", "5", "--d", "2", "--k", "2", "--l", "3", "--m", "1"}).json()["verdict"] == "counterexample");
        CHECK(run({"search-dual", "--d", "2", "--a-size", "1", "--b-size", "1"}).json()["m"] == 1);
        CHECK(run({"verify-dual", "--m", "3", "--d", "2", "--a-size", "2", "--b-size", "3"}).json()["verdict"] == "counterexample");
        CHECK(run({"verify-prop2", "--n", "3", "--m", "1", "--d", "2", "--k", "1", "--l", "2", "--a-size", "1", "--b-size", "1"}).json()["verdict"]
            == "witness-holds");
        CHECK(run({"verify-prop5", "--x", fixture("chain1.json"), "--y", fixture("chain2.json"), "--n", "2", "--m", "1", "--d", "2"}).json()["verdict"]
            == "counterexample");
        CHECK(run({"grid", "--n", "2", "--m", "2"}).json()["structure"]["size"] == 4);
        CHECK(run({"grid", "--n", "2", "--m", "2", "--p", "2", "--anchors", "0,1"}).json()["structure"]["linear_orders"].size() == 2);
    }

    TEST_CASE("construction and search subcommands")
    {
        const auto c = run({"construct-witness", "--x", fixture("chain1.json"), "--y", fixture("chain2.json"), "--d", "2"});
        CHECK(c.code == 0);
        CHECK(c.json()["verified"] == true);
        const auto s = run({"search-minimal", "--x", fixture("chain2.json"), "--y", fixture("chain3.json"), "--d", "2", "--bound", "6"});
        CHECK(s.code == 0);
        CHECK(s.json()["size"] == 6);
        CHECK(run({"search-minimal", "--x", fixture("chain2.json"), "--y", fixture("chain3.json"), "--d", "2", "--bound", "5"}).code == 2);
        const auto i = run({"interpret-check", "--x", fixture("chain1.json"), "--y", fixture("chain2.json"), "--m", "1", "--n", "3", "--d", "2", "--transfer"});
        CHECK(i.code == 0);
        CHECK(i.json()["result"] == "pass");
        CHECK(i.json()["transfer"] == "pass");
    }

    TEST_CASE("usage errors exit 1")
    {
        CHECK(run({"verify-witness", "--z", fixture("chain6.json"), "--x", fixture("chain2.json"), "--y", fixture("chain3.json"), "--d", "0"}).code == 1);
        CHECK(run({"grid", "--n", "2", "--m", "2", "--anchors", "1"}).code == 1);
        CHECK(run({"grid", "--n", "2", "--m", "2", "--format", "xml"}).code == 1);
        CHECK(run({"rigid-surjections", "--from", "2", "--to", "3", "--anchors", "0:5"}).code == 1);
    }
}
